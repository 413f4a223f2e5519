"""Majority operators, rounded averages, decompositions and transversals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .compression import TeachingCertificate, minimal_teaching_set
from .errors import CapExceeded, InputError
from .setsystem import Labeling, PartialLabeling, SetSystem, bit, points_of

__all__ = [
    "Decomposition",
    "Exhausted",
    "TransversalReport",
    "Verdict",
    "as_alpha",
    "decompose",
    "maj_alpha",
    "min_transversal",
    "pq_property",
    "rounded_average",
    "transversal_report",
    "verify_decomposition",
]

TRANSVERSAL_CAP = 24


def as_alpha(alpha) -> Fraction:
    """Coerce ``alpha`` (Fraction, int, or ``"p/q"`` string) to an exact
    rational in ``[1/2, 1)``.  Floats are rejected."""
    if isinstance(alpha, float):
        raise InputError("alpha must be exact: pass a Fraction or a 'p/q' string")
    try:
        a = Fraction(alpha)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read alpha from {alpha!r}") from exc
    if not Fraction(1, 2) <= a < 1:
        raise InputError(f"alpha={a} outside [1/2, 1)")
    return a


def _exceeds(count: int, n: int, alpha: Fraction) -> bool:
    # count > alpha * n, cross-multiplied
    return count * alpha.denominator > alpha.numerator * n


def maj_alpha(votes: Sequence[int], alpha=Fraction(1, 2)) -> int | None:
    """The sign carried by strictly more than ``alpha * len(votes)`` votes,
    or ``None`` when neither sign clears the threshold."""
    a = as_alpha(alpha)
    n = len(votes)
    if n == 0:
        raise InputError("maj_alpha needs at least one vote")
    ones = sum(1 for v in votes if v)
    if _exceeds(ones, n, a):
        return 1
    if _exceeds(n - ones, n, a):
        return 0
    return None


def rounded_average(concepts: Sequence[Labeling], alpha=Fraction(1, 2)) -> PartialLabeling:
    """Pointwise ``maj_alpha``; points without a winner are left unassigned."""
    a = as_alpha(alpha)
    if not concepts:
        raise InputError("rounded_average needs at least one labeling")
    m = concepts[0].ground_size
    if any(c.ground_size != m for c in concepts):
        raise InputError("labelings have mixed ground sizes")
    n = len(concepts)
    mask = bits = 0
    for i in range(m):
        b = bit(m, i)
        ones = sum(1 for c in concepts if c.bits & b)
        if _exceeds(ones, n, a):
            mask |= b
            bits |= b
        elif _exceeds(n - ones, n, a):
            mask |= b
    return PartialLabeling(m, mask, bits)


@dataclass(frozen=True)
class Exhausted:
    """The bounded search found nothing.  This is not a nonexistence claim."""

    n_max: int
    k: int

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"status": "exhausted", "n_max": self.n_max, "k": self.k}


@dataclass(frozen=True)
class Decomposition:
    alpha: Fraction
    components: tuple[TeachingCertificate, ...]
    target: Labeling
    k_bound: int

    @property
    def n(self) -> int:
        return len(self.components)

    def to_dict(self) -> dict:
        return {
            "status": "ok",
            "target": str(self.target),
            "alpha": str(self.alpha),
            "n": self.n,
            "k": self.k_bound,
            "components": [str(c.concept) for c in self.components],
            "witnesses": [list(c.witness) for c in self.components],
        }


class Verdict(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(
    C: SetSystem, d: Decomposition, *, target_in_class: bool = True
) -> Verdict:
    """Re-evaluate every invariant of ``d`` from scratch.

    ``target_in_class=False`` waives membership of the target (used for
    hypes); components must always be members of ``C``.
    """
    try:
        a = as_alpha(d.alpha)
    except InputError:
        return Verdict(False, "alpha out of range")
    if not d.components:
        return Verdict(False, "empty decomposition")
    m = C.ground_size
    if d.target.ground_size != m:
        return Verdict(False, "target size mismatch")
    if target_in_class and d.target not in C:
        return Verdict(False, "target not in class")
    for cert in d.components:
        if cert.concept.ground_size != m or cert.concept not in C:
            return Verdict(False, "component not in class")
        if cert.size > d.k_bound:
            return Verdict(False, "certificate too large")
        if not cert.verify(C):
            return Verdict(False, "invalid certificate")
    avg = rounded_average([c.concept for c in d.components], a)
    if not avg.is_total or avg.bits != d.target.bits:
        return Verdict(False, "average mismatch")
    return Verdict(True)


def _teachable_pool(C: SetSystem, k: int) -> list[tuple[int, int]]:
    pool = []
    for x in C.concepts:
        s = minimal_teaching_set(C, x, k)
        if s is not None:
            pool.append((x, s))
    return pool


def _search(C: SetSystem, target: int, alpha: Fraction, n_max: int, k: int):
    """Multisets of k-teachable concepts (non-decreasing canonical index)
    whose alpha-rounded average is exactly ``target``."""
    m = C.ground_size
    full = C.full_mask
    pool = _teachable_pool(C, k)
    agree = [(~(x ^ target)) & full for x, _ in pool]
    point_bits = [bit(m, i) for i in range(m)]
    for n in range(1, n_max + 1):
        need = alpha.numerator * n // alpha.denominator + 1  # least count > alpha*n
        counts = [0] * m
        chosen: list[int] = []

        def dfs(start: int) -> bool:
            left = n - len(chosen)
            if left == 0:
                return min(counts) >= need if m else True
            if m and min(counts) + left < need:
                return False
            for j in range(start, len(pool)):
                ag = agree[j]
                for i in range(m):
                    if ag & point_bits[i]:
                        counts[i] += 1
                chosen.append(j)
                if dfs(j):
                    return True
                chosen.pop()
                for i in range(m):
                    if ag & point_bits[i]:
                        counts[i] -= 1
            return False

        if pool and dfs(0):
            return n, [pool[j] for j in chosen]
    return None


def _build(C, target_label, alpha, k, found):
    m = C.ground_size
    comps = tuple(
        TeachingCertificate(Labeling(m, x), points_of(m, s), C) for x, s in found[1]
    )
    return Decomposition(alpha, comps, target_label, k)


def decompose(
    C: SetSystem, target: Labeling, alpha=Fraction(1, 2), n_max: int = 5, k: int = 1
) -> Decomposition | Exhausted:
    """First (smallest ``n``) multiset of concepts with teaching dimension
    at most ``k`` whose alpha-rounded average is ``target``."""
    a = as_alpha(alpha)
    C.require_nonempty()
    t = C.require_member(target)
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    found = _search(C, t, a, n_max, k)
    if found is None:
        return Exhausted(n_max, k)
    return _build(C, target, a, k, found)


def decompose_any(
    C: SetSystem, target: Labeling, alpha, n_max: int, k: int
) -> Decomposition | Exhausted:
    """As :func:`decompose` but ``target`` need not be a member of ``C``."""
    a = as_alpha(alpha)
    C.require_nonempty()
    if target.ground_size != C.ground_size:
        raise InputError("target and system have different ground sizes")
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    found = _search(C, target.bits, a, n_max, k)
    if found is None:
        return Exhausted(n_max, k)
    return _build(C, target, a, k, found)


def _check_family(F: SetSystem) -> None:
    if 0 in F.concepts:
        raise InputError("family contains an empty set")


def pq_property(F: SetSystem, p: int, q: int) -> bool:
    """Every ``p`` members of ``F`` include ``q`` with a common point."""
    if not 1 <= q <= p:
        raise InputError(f"need 1 <= q <= p, got p={p}, q={q}")
    _check_family(F)
    m = F.ground_size
    pts = [bit(m, i) for i in range(m)]
    for S in combinations(F.concepts, p):
        # q of them share a point iff some point lies in at least q of them
        if not any(sum(1 for s in S if s & b) >= q for b in pts):
            return False
    return True


def min_transversal(F: SetSystem) -> tuple[int, ...]:
    """A minimum hitting set of ``F``, least lexicographic among minima."""
    _check_family(F)
    m = F.ground_size
    if m > TRANSVERSAL_CAP:
        raise CapExceeded(f"ground size {m} exceeds {TRANSVERSAL_CAP}")
    for r in range(m + 1):
        for X in combinations(range(m), r):
            x = sum(bit(m, i) for i in X)
            if all(s & x for s in F.concepts):
                return X
    raise AssertionError("the full ground set always hits a family of nonempty sets")


@dataclass(frozen=True)
class TransversalReport:
    family: SetSystem
    p: int
    q: int
    has_pq: bool
    min_transversal: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "has_pq": self.has_pq,
            "min_transversal": list(self.min_transversal),
            "size": len(self.min_transversal),
        }


def transversal_report(F: SetSystem, p: int, q: int) -> TransversalReport:
    return TransversalReport(F, p, q, pq_property(F, p, q), min_transversal(F))
