"""
Honest definitions over the order relation
==========================================

For each column b of a bipartite relation we look for a fixed-shape formula
with parameters from the rows that picks out exactly the rows related to b.
"""

from fractions import Fraction

import numpy as np

from vccompress import BipartiteRelation, accepted_set, honest_define, udtfs_report
from vccompress.generators import order_relation

# %%
R = order_relation(3)
print(R.matrix)
p = honest_define(R, None, 1, Fraction(1, 2))
print(p.to_dict())
print("accepted rows:", accepted_set(R, None, p))

# %%
# The whole relation, m = 8.
rep = udtfs_report(order_relation(8))
print(rep.successes, "of", len(rep.entries), "columns defined exactly")

# %%
# A relation whose columns form every pattern on three rows is harder: with
# only two parameters per block some columns are out of reach.
cube = BipartiteRelation(np.array([[(y >> (2 - a)) & 1 for y in range(8)] for a in range(3)]))
rep = udtfs_report(cube, None, Fraction(1, 2), 3, 2)
print([e.status for e in rep.entries])
