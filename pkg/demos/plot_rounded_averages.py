"""
Rounded averages of easy concepts
=================================

Can a hard concept be written as a majority vote of concepts that are easy
to teach?  Sometimes yes, sometimes no, and the answer depends on how easy
"easy" has to be.
"""

from fractions import Fraction

from vccompress import Labeling, decompose, verify_decomposition
from vccompress.generators import intervals, thresholds

half = Fraction(1, 2)

# %%
# On three thresholds, 110 needs two points to teach.  With only one point
# allowed the easy concepts are 000 and 111, and their majority is constant.
C = thresholds(3)
print(decompose(C, Labeling.from_string("110"), half, n_max=5, k=1))
print(decompose(C, Labeling.from_string("110"), half, n_max=5, k=2).to_dict())

# %%
# An interval in the middle of six points, built from pieces that three labelled points can teach.
C = intervals(6)
target = Labeling.from_string("011100")
res = decompose(C, target, half, n_max=5, k=3)
print(res.to_dict() if res else res)
if res:
    print("verified:", bool(verify_decomposition(C, res)))
