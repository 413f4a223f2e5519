"""
Peeling a class: recursive teaching
===================================

Remove the easiest concept, then the easiest of what is left, and so on.
The largest teaching set needed along the way is the recursive teaching
dimension.
"""

from vccompress import kc, rtd_sequence, vc_dimension
from vccompress.generators import halfplanes_on_grid

# %%
C = halfplanes_on_grid(3, 3)
print(len(C), "half-plane cuts of a 3x3 grid, vc =", vc_dimension(C))

seq = rtd_sequence(C)
print("first few:", [(str(c), v) for c, v in seq[:5]])
print("max needed:", max(v for _, v in seq), "bound:", kc(vc_dimension(C)))
