"""
Hypothetical types
==================

A labeling can look like a member of the class on every small window and
still not be one.  Those are the k-hypes.
"""

from fractions import Fraction

from vccompress import SetSystem, hype_cover, hype_decompose, hype_family, Labeling

# %%
C = SetSystem.from_strings(["110", "011", "101"])
print("2-hypes:", hype_family(C, 2).to_strings())
print("3-hypes:", hype_family(C, 3).to_strings())

# %%
# 111 agrees with some member on every pair but is not itself a member.  It is
# the majority of all three, and two members cover its positive points.
gamma = Labeling.from_string("111")
print(hype_decompose(C, gamma, Fraction(1, 2), n_max=5, k=2).to_dict())
print("cover:", [str(c) for c in hype_cover(C, gamma, 2)])
