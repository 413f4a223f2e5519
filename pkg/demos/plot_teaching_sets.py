"""
Teaching sets and the compressible concept
==========================================

Every finite class of small VC dimension contains a concept that can be
pinned down by looking at only a handful of points.  Here we look at
thresholds and intervals and compare the certificate we find with the
brute-force minimum.
"""

from vccompress import find_kc_compressible, kc, teaching_dimension, vc_dimension
from vccompress.generators import intervals, oracle_min_td, thresholds

# %%
# Thresholds on ten points.  The class has VC dimension one, so some concept
# must be teachable from a single labelled point.
C = thresholds(10)
concept, cert = find_kc_compressible(C)
print("vc =", vc_dimension(C), " bound =", kc(vc_dimension(C)))
print("found", concept, "taught by", cert.signs)

# %%
# The full segment needs only its last point: a positive label there rules
# out every shorter threshold.
full = next(c for c in C if c.bits == C.full_mask)
print(full, teaching_dimension(C, full)[1].signs)

# %%
# Intervals have VC dimension two.  The bound is kc(2) = 6, which is far
# from tight on small grounds; the oracle says two points always suffice
# for the easiest concept.
C = intervals(8)
concept, cert = find_kc_compressible(C)
print("certificate size", cert.size, "oracle minimum", min(oracle_min_td(C, x) for x in C))
