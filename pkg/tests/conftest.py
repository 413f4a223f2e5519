import os
import sys

import pytest
from hypothesis import strategies as st

from vccompress import SetSystem

sys.path.insert(0, os.path.dirname(__file__))


@st.composite
def set_systems(draw, max_ground=6, max_concepts=12, min_concepts=1):
    m = draw(st.integers(1, max_ground))
    masks = draw(
        st.lists(st.integers(0, (1 << m) - 1), min_size=min_concepts, max_size=max_concepts)
    )
    return SetSystem(m, tuple(masks))


@pytest.fixture
def tri():
    """The three two-point sets on three points."""
    return SetSystem.from_strings(["110", "011", "101"])


@pytest.fixture
def thr3():
    """Thresholds {}, [0,0], [0,1], [0,2} on three points."""
    return SetSystem.from_strings(["000", "100", "110", "111"])
