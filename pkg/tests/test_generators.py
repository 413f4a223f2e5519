import pytest
from hypothesis import given, settings

import bruteforce as bf
from conftest import set_systems
from vccompress import CapExceeded, InputError, Labeling, teaching_dimension, vc_dimension
from vccompress.generators import (
    GeneratorSpec,
    full_cube,
    generate,
    halfplanes_on_grid,
    intervals,
    oracle_min_td,
    order_relation,
    random_filtered,
    singletons,
    thresholds,
    unions_of_t_intervals,
)


def test_thresholds():
    C = thresholds(4)
    assert C.to_strings() == ["0000", "1000", "1100", "1110", "1111"]
    assert vc_dimension(C) == 1


def test_full_cube():
    C = full_cube(3)
    assert len(C) == 8 and vc_dimension(C) == 3


def test_intervals():
    C = intervals(5)
    assert len(C) == 16 and vc_dimension(C) == 2


def test_singletons_have_no_empty_set():
    C = singletons(4)
    assert len(C) == 4 and 0 not in C.concepts and vc_dimension(C) == 1


@pytest.mark.parametrize("t", [1, 2, 3])
def test_unions_of_intervals(t):
    C = unions_of_t_intervals(2 * t + 2, t)
    assert vc_dimension(C) == 2 * t == bf.vc(bf.as_sets(C.to_strings()), C.ground_size)


def test_halfplanes():
    C = halfplanes_on_grid(3, 3)
    assert len(C) == 58 and vc_dimension(C) == 3
    assert vc_dimension(halfplanes_on_grid(4, 1)) == 2


def test_order_relation():
    R = order_relation(4)
    assert R(1, 3) and not R(3, 1)
    assert R.matrix.sum() == 10


def test_random_is_deterministic():
    a = random_filtered(6, 8, 11, 2)
    assert a == random_filtered(6, 8, 11, 2)
    assert vc_dimension(a) <= 2
    spec = GeneratorSpec("random_filtered", 6, 11, {"n_concepts": 8, "max_vc": 2})
    assert generate(spec) == a
    assert spec.metadata()["seed"] == 11
    assert "seed" not in GeneratorSpec("thresholds", 4).metadata()


def test_caps_and_errors():
    with pytest.raises(CapExceeded):
        thresholds(25)
    with pytest.raises(CapExceeded):
        full_cube(13)
    with pytest.raises(InputError):
        generate(GeneratorSpec("spirals", 3))
    with pytest.raises(InputError):
        thresholds(-1)


class TestOracle:
    def test_examples(self):
        assert oracle_min_td(thresholds(0), Labeling(0, 0)) == 0
        C = full_cube(3)
        assert all(oracle_min_td(C, c) == 3 for c in C)
        assert oracle_min_td(intervals(5), Labeling.from_string("10000")) == 2

    def test_not_member(self):
        with pytest.raises(InputError):
            oracle_min_td(thresholds(3), Labeling.from_string("010"))

    @settings(max_examples=60, deadline=None)
    @given(set_systems(max_ground=7, max_concepts=14))
    def test_agrees_with_search(self, C):
        for c in C:
            assert oracle_min_td(C, c) == teaching_dimension(C, c)[0]

    def test_agrees_on_named_classes(self):
        for C in (thresholds(12), intervals(9), halfplanes_on_grid(3, 3)):
            for c in C:
                assert oracle_min_td(C, c) == teaching_dimension(C, c)[0]
