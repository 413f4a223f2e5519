"""k-hypes: total labelings whose small restrictions are all realised.

Consistency is taken relative to the class ``C`` itself: a set of literals is
consistent when some concept of ``C`` satisfies all of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, InputError
from .rounded import Decomposition, Exhausted, decompose_any
from .setsystem import Labeling, SetSystem, bit, mask_of, vc_dimension

__all__ = [
    "HYPE_FAMILY_CAP",
    "Hype",
    "hype_cover",
    "hype_decompose",
    "hype_family",
    "is_k_hype",
]

HYPE_FAMILY_CAP = 16


@dataclass(frozen=True)
class Hype:
    signs: Labeling
    k: int
    system: SetSystem = field(compare=False, repr=False)

    @classmethod
    def check(cls, C: SetSystem, gamma: Labeling, k: int) -> Hype:
        if not is_k_hype(C, gamma, k):
            raise InputError(f"{gamma} is not a {k}-hype of the class")
        return cls(gamma, k, C)

    @property
    def ground_size(self) -> int:
        return self.signs.ground_size


def _subset_masks(m: int, r: int):
    for S in combinations(range(m), r):
        yield mask_of(m, S)


def is_k_hype(C: SetSystem, gamma: Labeling, k: int) -> bool:
    """Every restriction of ``gamma`` to at most ``k`` points extends to a
    concept of ``C``."""
    m = C.ground_size
    if gamma.ground_size != m:
        raise InputError(f"labeling on {gamma.ground_size} points, system on {m}")
    if k < 0:
        raise InputError("k must be non-negative")
    r = min(k, m)
    if r == 0:
        return True
    g = gamma.bits
    # checking the largest size suffices: smaller restrictions sit inside one
    return all(any((c ^ g) & S == 0 for c in C.concepts) for S in _subset_masks(m, r))


def hype_family(C: SetSystem, k: int) -> SetSystem:
    """The set system of all k-hypes of ``C`` on the same ground set."""
    m = C.ground_size
    if m > HYPE_FAMILY_CAP:
        raise CapExceeded(f"ground size {m} exceeds {HYPE_FAMILY_CAP}")
    if k < 0:
        raise InputError("k must be non-negative")
    r = min(k, m)
    if r == 0:
        return SetSystem(m, tuple(range(1 << m)))
    constraints = [(S, {c & S for c in C.concepts}) for S in _subset_masks(m, r)]
    hypes = [g for g in range(1 << m) if all(g & S in tr for S, tr in constraints)]
    return SetSystem(m, tuple(hypes))


def _as_hype(C: SetSystem, gamma, k: int) -> Labeling:
    if isinstance(gamma, Hype):
        gamma = gamma.signs
    if not is_k_hype(C, gamma, k):
        raise InputError(f"{gamma} is not a {k}-hype of the class")
    return gamma


def hype_decompose(
    C: SetSystem, gamma, alpha=Fraction(1, 2), n_max: int = 5, k: int = 1
) -> Decomposition | Exhausted:
    """Bounded search for concepts of teaching dimension at most ``k`` whose
    alpha-rounded average is the k-hype ``gamma``."""
    g = _as_hype(C, gamma, k)
    return decompose_any(C, g, alpha, n_max, k)


def hype_cover(C: SetSystem, gamma, k: int) -> list[Labeling]:
    """Fewest concepts such that each point agrees with ``gamma`` in at least
    one of them (least lexicographic choice among minimum covers)."""
    C.require_nonempty()
    g = _as_hype(C, gamma, k)
    d = vc_dimension(C)
    if k <= d:
        raise InputError(f"hype_cover needs k > vc(C) = {d}, got k={k}")
    m = C.ground_size
    full = C.full_mask
    agree = [(~(c ^ g.bits)) & full for c in C.concepts]
    for r in range(1, len(C) + 1):
        for idx in combinations(range(len(C)), r):
            acc = 0
            for j in idx:
                acc |= agree[j]
            if acc == full:
                return [Labeling(m, C.concepts[j]) for j in idx]
    # a k-hype with k >= 1 agrees with some concept at every single point
    raise AssertionError("unreachable for a k-hype with k >= 1")


def covers(cover: list[Labeling], gamma: Labeling) -> bool:
    """Pointwise re-check that ``cover`` agrees with ``gamma`` somewhere at every point."""
    m = gamma.ground_size
    return all(
        any((c.bits ^ gamma.bits) & bit(m, i) == 0 for c in cover) for i in range(m)
    )
