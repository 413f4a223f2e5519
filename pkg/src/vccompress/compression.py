"""Teaching sets, k-compressibility and the kc(d) construction.

On a finite ground set a concept ``c`` is k-compressible in ``C`` exactly when
some set of at most ``k`` points already pins ``c`` down inside ``C`` (taking
the whole ground set as the target of the implication is enough, since every
finite subset is contained in it).  Such a point set is a *teaching set*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .errors import CapExceeded, InconsistentCondition, InputError
from .setsystem import (
    Labeling,
    PartialLabeling,
    SetSystem,
    bit,
    mask_of,
    points_of,
    relativize,
    restrict,
    trace_set,
    vc_dimension,
)

__all__ = [
    "KcParameters",
    "TeachingCertificate",
    "extend_compressible",
    "find_kc_compressible",
    "implies_within",
    "is_k_compressible",
    "is_k_isolated",
    "kc",
    "kc_parameters",
    "minimal_teaching_set",
    "rtd_sequence",
    "shattering_hard_instance",
    "teaching_dimension",
]

HARD_INSTANCE_CAP = 20


@dataclass(frozen=True)
class TeachingCertificate:
    """A witness set on which ``concept`` is the only member of ``system``
    with its labels."""

    concept: Labeling
    witness: tuple[int, ...]
    system: SetSystem = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.witness)

    @property
    def signs(self) -> dict[int, int]:
        return {i: self.concept[i] for i in self.witness}

    def verify(self, C: SetSystem | None = None) -> bool:
        """Re-check by a full scan that the witness isolates the concept."""
        C = self.system if C is None else C
        if self.concept.ground_size != C.ground_size or self.concept not in C:
            return False
        if any(not 0 <= i < C.ground_size for i in self.witness):
            return False
        mask = mask_of(C.ground_size, self.witness)
        target = self.concept.bits & mask
        return sum(1 for c in C.concepts if c & mask == target) == 1

    def to_dict(self) -> dict:
        return {"concept": str(self.concept), "witness": list(self.witness), "size": self.size}


@dataclass(frozen=True)
class KcParameters:
    """Constants of the kc(d) recursion at VC dimension ``d``.

    ``k0_value`` is the size allowed for the partial teaching set at the
    induction step that raises the dimension from ``d-1`` to ``d``.
    """

    d: int
    kc_value: int
    k0_value: int | None


def kc(d: int) -> int:
    """``2**(d+1) * (d-2) + d + 4``."""
    if d < 0:
        raise InputError("kc needs d >= 0")
    return (1 << (d + 1)) * (d - 2) + d + 4


def kc_parameters(d: int) -> KcParameters:
    k0 = (1 << d) * (d - 1) + 1 if d >= 1 else None
    return KcParameters(d, kc(d), k0)


def implies_within(
    C: SetSystem, c: Labeling, B: Iterable[int], A0: Iterable[int]
) -> bool:
    """True iff every concept agreeing with ``c`` on ``B`` also agrees on ``A0``."""
    cb = C.require_member(c)
    mb = mask_of(C.ground_size, B)
    ma = mask_of(C.ground_size, A0)
    return all(x & ma == cb & ma for x in C.concepts if x & mb == cb & mb)


def _min_hitting(m: int, diffs: list[int], limit: int) -> int | None:
    """Least-lexicographic minimum point set meeting every mask in ``diffs``,
    searched up to ``limit`` points; ``None`` when larger."""
    diffs = sorted(set(diffs), key=int.bit_count)
    if not diffs:
        return 0
    if 0 in diffs:
        return None
    union = 0
    for d in diffs:
        union |= d
    pts = [i for i in range(m) if union & bit(m, i)]
    for r in range(1, min(limit, len(pts)) + 1):
        for S in combinations(pts, r):
            s = 0
            for i in S:
                s |= bit(m, i)
            if all(d & s for d in diffs):
                return s
    return None


def minimal_teaching_set(C: SetSystem, target: int, limit: int | None = None) -> int | None:
    """Mask of the least minimal teaching set of ``target`` (a member mask),
    or ``None`` if every teaching set has more than ``limit`` points."""
    m = C.ground_size
    limit = m if limit is None else limit
    diffs = [target ^ x for x in C.concepts if x != target]
    return _min_hitting(m, diffs, limit)


def teaching_dimension(C: SetSystem, c: Labeling) -> tuple[int, TeachingCertificate]:
    """Size of the smallest teaching set of ``c`` in ``C`` and the
    lexicographically least one of that size."""
    target = C.require_member(c)
    s = minimal_teaching_set(C, target)
    cert = TeachingCertificate(c, points_of(C.ground_size, s), C)
    return cert.size, cert


def is_k_compressible(C: SetSystem, c: Labeling, k: int) -> bool:
    target = C.require_member(c)
    return minimal_teaching_set(C, target, k) is not None


def k_certificate(C: SetSystem, c: Labeling, k: int) -> TeachingCertificate | None:
    """A teaching set of size at most ``k`` when one exists."""
    target = C.require_member(c)
    s = minimal_teaching_set(C, target, k)
    return None if s is None else TeachingCertificate(c, points_of(C.ground_size, s), C)


def is_k_isolated(C: SetSystem, c: Labeling, k: int) -> bool:
    """Some ``A0`` with ``|A0| <= k`` has ``c|A0`` implying all of ``c``."""
    every = range(C.ground_size)
    return any(
        implies_within(C, c, A0, every)
        for r in range(min(k, C.ground_size) + 1)
        for A0 in combinations(every, r)
    )


def _restricted_bits(m: int, value: int, pts: list[int]) -> int:
    r = len(pts)
    return sum(bit(r, j) for j, p in enumerate(pts) if value & bit(m, p))


def _compressible_in_restriction(
    C: SetSystem, cond: PartialLabeling, k0: int
) -> int | None:
    """Teaching set (as a mask on ``C``'s points) of ``cond`` inside
    ``C|dom(cond)`` of size at most ``k0``, or ``None``."""
    m = C.ground_size
    pts = list(cond.domain)
    R = restrict(C, pts)
    local = _restricted_bits(m, cond.bits, pts)
    if local not in R:
        return None
    s = minimal_teaching_set(R, local, k0)
    if s is None:
        return None
    return mask_of(m, (pts[j] for j in points_of(len(pts), s)))


def _shattered_outside(C: SetSystem, size: int, avoid: int) -> tuple[int, ...] | None:
    m = C.ground_size
    free = [i for i in range(m) if not avoid & bit(m, i)]
    for B in combinations(free, size):
        if len(trace_set(C, mask_of(m, B))) == 1 << size:
            return B
    return None


def _maximal_condition(C: SetSystem, e: int, k0: int) -> tuple[PartialLabeling, int]:
    """Grow a k0-compressible partial labeling until the subclass it cuts out
    has VC dimension below ``e``.  Returns the labeling and its teaching set."""
    m = C.ground_size
    cond = PartialLabeling(m, 0, 0)
    teach = 0
    while True:
        grown = True
        while grown:
            grown = False
            for p in range(m):
                b = bit(m, p)
                if cond.mask & b:
                    continue
                for sign in (0, 1):
                    cand = PartialLabeling(m, cond.mask | b, cond.bits | (b if sign else 0))
                    t = _compressible_in_restriction(C, cand, k0)
                    if t is not None:
                        cond, teach, grown = cand, t, True
                        break
                if grown:
                    break
        sub = relativize(C, cond)
        B = _shattered_outside(sub, e, cond.mask)
        if B is None:
            return cond, teach
        # Single-point maximality left a shattered e-set B; some sign pattern
        # on B keeps the labeling k0-compressible (pigeonhole on k0 points).
        bmask = mask_of(m, B)
        for pattern in product((0, 1), repeat=len(B)):
            vals = sum(bit(m, p) for p, s in zip(B, pattern) if s)
            cand = PartialLabeling(m, cond.mask | bmask, cond.bits | vals)
            t = _compressible_in_restriction(C, cand, k0)
            if t is not None:
                cond, teach = cand, t
                break
        else:
            raise RuntimeError("no k0-compressible extension over a shattered set")


def _kc_witness(C: SetSystem) -> tuple[int, int]:
    """(concept mask, witness mask) with witness size <= kc(vc(C))."""
    e = vc_dimension(C)
    if e == 0:
        return C.concepts[0], 0
    k0 = kc_parameters(e).k0_value
    if C.ground_size <= k0:
        return C.concepts[0], C.full_mask
    cond, teach = _maximal_condition(C, e, k0)
    concept, witness = _kc_witness(relativize(C, cond))
    return concept, witness | teach


def find_kc_compressible(C: SetSystem) -> tuple[Labeling, TeachingCertificate]:
    """A concept of ``C`` with a teaching set of size at most ``kc(vc(C))``.

    Follows the induction on VC dimension: a maximal k0-compressible partial
    labeling cuts out a subclass of smaller dimension, the recursion finds a
    compressible concept there, and the two teaching sets are joined.
    """
    C.require_nonempty()
    concept, witness = _kc_witness(C)
    c = Labeling(C.ground_size, concept)
    return c, TeachingCertificate(c, points_of(C.ground_size, witness), C)


def extend_compressible(
    C: SetSystem, cond: PartialLabeling, l: int
) -> tuple[Labeling, TeachingCertificate]:
    """Extend ``cond`` (l-compressible in ``C|dom(cond)``) to a concept with
    a teaching set of size at most ``l + kc(vc(C))``."""
    C.require_nonempty()
    sub = relativize(C, cond)
    if sub.is_empty:
        raise InconsistentCondition(f"no concept extends {cond}")
    teach = _compressible_in_restriction(C, cond, l)
    if teach is None:
        raise InputError(f"{cond} has no teaching set of size <= {l} on its domain")
    concept, witness = _kc_witness(sub)
    c = Labeling(C.ground_size, concept)
    return c, TeachingCertificate(c, points_of(C.ground_size, witness | teach), C)


def rtd_sequence(C: SetSystem) -> list[tuple[Labeling, int]]:
    """Peel off a minimum-teaching-dimension concept (first in canonical
    order on ties) until the class is empty."""
    C.require_nonempty()
    m = C.ground_size
    out = []
    remaining = C
    while not remaining.is_empty:
        best = None
        for x in remaining.concepts:
            limit = m if best is None else best[1] - 1
            s = minimal_teaching_set(remaining, x, limit)
            if s is not None:
                best = (x, s.bit_count())
                if best[1] == 0:
                    break
        out.append((Labeling(m, best[0]), best[1]))
        remaining = SetSystem(m, tuple(x for x in remaining.concepts if x != best[0]))
    return out


def shattering_hard_instance(n: int) -> SetSystem:
    """The full cube on ``n`` points, where every concept needs all ``n``."""
    if not 0 <= n <= HARD_INSTANCE_CAP:
        raise CapExceeded(f"n={n} outside 0..{HARD_INSTANCE_CAP}")
    return SetSystem(n, tuple(range(1 << n)))
