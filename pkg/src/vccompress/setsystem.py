"""Finite set systems and the VC-dimension toolkit.

A concept over ``m`` points is stored as an ``int`` bitmask in which point 0
is the most significant of the ``m`` bits.  With that convention the numeric
order of the masks is the lexicographic order of the bit strings, so sorting
the masks gives the canonical concept order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import EmptyClassError, InputError

__all__ = [
    "Labeling",
    "PartialLabeling",
    "SetSystem",
    "b_vc",
    "bit",
    "dual",
    "intersection_system",
    "mask_of",
    "points_of",
    "relativize",
    "restrict",
    "sauer_bound",
    "shatters",
    "trace_set",
    "vc_dimension",
]


def bit(m: int, i: int) -> int:
    """Mask of the single point ``i`` in a ground set of size ``m``."""
    return 1 << (m - 1 - i)


def mask_of(m: int, points: Iterable[int]) -> int:
    """Bitmask of a point set; raises InputError on out-of-range points."""
    mask = 0
    for i in points:
        i = int(i)
        if not 0 <= i < m:
            raise InputError(f"point {i} outside ground set of size {m}")
        mask |= bit(m, i)
    return mask


def points_of(m: int, mask: int) -> tuple[int, ...]:
    """Ascending tuple of the points set in ``mask``."""
    return tuple(i for i in range(m) if mask & bit(m, i))


def _bits_from_string(s: str) -> int:
    s = s.strip()
    if s and set(s) - {"0", "1"}:
        raise InputError(f"labeling {s!r} must consist of 0/1 characters")
    return int(s, 2) if s else 0


@dataclass(frozen=True)
class Labeling:
    """A total 0/1 assignment on points ``0..ground_size-1``."""

    ground_size: int
    bits: int

    def __post_init__(self):
        if self.ground_size < 0:
            raise InputError("ground_size must be non-negative")
        if not 0 <= self.bits < (1 << self.ground_size):
            raise InputError(f"bits {self.bits} do not fit {self.ground_size} points")

    @classmethod
    def from_string(cls, s: str) -> Labeling:
        s = s.strip()
        return cls(len(s), _bits_from_string(s))

    @classmethod
    def from_points(cls, ground_size: int, positives: Iterable[int]) -> Labeling:
        return cls(ground_size, mask_of(ground_size, positives))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.ground_size:
            raise InputError(f"point {i} outside ground set of size {self.ground_size}")
        return 1 if self.bits & bit(self.ground_size, i) else 0

    def __str__(self) -> str:
        return format(self.bits, f"0{self.ground_size}b") if self.ground_size else ""

    def positives(self) -> tuple[int, ...]:
        return points_of(self.ground_size, self.bits)

    def restrict_to(self, points: Iterable[int]) -> PartialLabeling:
        mask = mask_of(self.ground_size, points)
        return PartialLabeling(self.ground_size, mask, self.bits & mask)


@dataclass(frozen=True)
class PartialLabeling:
    """A 0/1 assignment on the points of ``mask``; ``bits`` is zero outside it."""

    ground_size: int
    mask: int
    bits: int

    def __post_init__(self):
        full = (1 << self.ground_size) - 1
        if self.mask & ~full:
            raise InputError(f"domain exceeds ground set of size {self.ground_size}")
        if self.bits & ~self.mask:
            raise InputError("values assigned outside the domain")

    @classmethod
    def from_dict(cls, ground_size: int, assignments: dict[int, int]) -> PartialLabeling:
        mask = bits = 0
        for i, v in assignments.items():
            b = mask_of(ground_size, [i])
            if v not in (0, 1):
                raise InputError(f"sign {v!r} at point {i} must be 0 or 1")
            mask |= b
            if v:
                bits |= b
        return cls(ground_size, mask, bits)

    @classmethod
    def from_string(cls, s: str) -> PartialLabeling:
        """Parse e.g. ``"1*0"``; any of ``*``, ``-``, ``.`` leaves a point unassigned."""
        s = s.strip()
        m = len(s)
        assignments = {}
        for i, ch in enumerate(s):
            if ch in "01":
                assignments[i] = int(ch)
            elif ch not in "*-.":
                raise InputError(f"bad character {ch!r} in partial labeling")
        return cls.from_dict(m, assignments)

    @property
    def domain(self) -> tuple[int, ...]:
        return points_of(self.ground_size, self.mask)

    @property
    def assignments(self) -> dict[int, int]:
        m = self.ground_size
        return {i: 1 if self.bits & bit(m, i) else 0 for i in self.domain}

    @property
    def is_total(self) -> bool:
        return self.mask == (1 << self.ground_size) - 1

    def extended_by(self, concept: int) -> bool:
        """True iff the concept mask agrees with this labeling on its domain."""
        return concept & self.mask == self.bits

    def to_labeling(self) -> Labeling:
        if not self.is_total:
            raise InputError("partial labeling is not total")
        return Labeling(self.ground_size, self.bits)

    def __str__(self) -> str:
        m = self.ground_size
        return "".join(
            ("1" if self.bits & bit(m, i) else "0") if self.mask & bit(m, i) else "*"
            for i in range(m)
        )


@dataclass(frozen=True)
class SetSystem:
    """A finite ground set ``0..ground_size-1`` with a family of concepts.

    ``concepts`` is normalised on construction: duplicates are dropped and the
    masks are sorted.  ``point_map`` records, for systems produced by
    :func:`restrict`, the original index of every point.
    """

    ground_size: int
    concepts: tuple[int, ...] = ()
    point_map: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        m = self.ground_size
        if m < 0:
            raise InputError("ground_size must be non-negative")
        limit = 1 << m
        normal = []
        for c in self.concepts:
            if isinstance(c, Labeling):
                if c.ground_size != m:
                    raise InputError(f"concept of length {c.ground_size} in a system on {m} points")
                c = c.bits
            c = int(c)
            if not 0 <= c < limit:
                raise InputError(f"concept {c} does not fit {m} points")
            normal.append(c)
        object.__setattr__(self, "concepts", tuple(sorted(set(normal))))
        if self.point_map is not None and len(self.point_map) != m:
            raise InputError("point_map length differs from ground_size")

    @classmethod
    def from_strings(cls, rows: Iterable[str], ground_size: int | None = None) -> SetSystem:
        rows = [r.strip() for r in rows]
        if ground_size is None:
            if not rows:
                raise InputError("ground_size is required for an empty system")
            ground_size = len(rows[0])
        for r in rows:
            if len(r) != ground_size:
                raise InputError(f"concept {r!r} has length {len(r)}, expected {ground_size}")
        return cls(ground_size, tuple(_bits_from_string(r) for r in rows))

    @classmethod
    def from_sets(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> SetSystem:
        return cls(ground_size, tuple(mask_of(ground_size, s) for s in sets))

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Labeling]:
        m = self.ground_size
        return (Labeling(m, c) for c in self.concepts)

    def __contains__(self, item) -> bool:
        if isinstance(item, Labeling):
            return item.ground_size == self.ground_size and item.bits in self._index
        return item in self._index

    @property
    def _index(self) -> frozenset[int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = frozenset(self.concepts)
            object.__setattr__(self, "_index_cache", idx)
        return idx

    @property
    def is_empty(self) -> bool:
        return not self.concepts

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def to_strings(self) -> list[str]:
        return [str(c) for c in self]

    def require_nonempty(self) -> None:
        if not self.concepts:
            raise EmptyClassError("operation requires a non-empty set system")

    def require_member(self, c: Labeling) -> int:
        """Return the mask of ``c`` after checking it belongs to the class."""
        if c.ground_size != self.ground_size:
            raise InputError(
                f"labeling on {c.ground_size} points, system on {self.ground_size}"
            )
        if c.bits not in self._index:
            raise InputError(f"labeling {c} is not a concept of the class")
        return c.bits

    def original_point(self, i: int) -> int:
        return self.point_map[i] if self.point_map is not None else i


def trace_set(C: SetSystem, mask: int) -> set[int]:
    """Distinct traces ``c & mask`` of the concepts on a point set."""
    return {c & mask for c in C.concepts}


def shatters(C: SetSystem, B: Iterable[int]) -> bool:
    """True iff every sign pattern on ``B`` is the trace of some concept."""
    B = set(B)
    mask = mask_of(C.ground_size, B)
    return len(trace_set(C, mask)) == 1 << len(B)


def vc_dimension(C: SetSystem) -> int:
    """Largest size of a shattered point set (0 for a single concept)."""
    C.require_nonempty()
    m = C.ground_size
    cap = (len(C) - 1).bit_length() if len(C) > 1 else 0
    best = 0
    for s in range(1, min(m, cap) + 1):
        need = 1 << s
        if not any(
            len(trace_set(C, mask_of(m, B))) == need for B in combinations(range(m), s)
        ):
            break
        best = s
    return best


def dual(C: SetSystem) -> SetSystem:
    """The dual system: points are the concepts of ``C``; each original point
    ``x`` contributes the concept ``{s in C : x in s}``."""
    C.require_nonempty()
    m, n = C.ground_size, len(C)
    rows = []
    for x in range(m):
        bx = bit(m, x)
        rows.append(sum(bit(n, j) for j, s in enumerate(C.concepts) if s & bx))
    return SetSystem(n, tuple(rows))


def sauer_bound(s: int, k: int) -> int:
    """``sum_{i<=k} binom(s, i)``."""
    if s < 0 or k < 0:
        raise InputError("sauer_bound needs non-negative arguments")
    return sum(comb(s, i) for i in range(min(s, k) + 1))


def b_vc(n: int, k: int) -> int:
    """``max {s : sauer_bound(s, k)**n >= 2**s}``.

    The scan stops at the first ``s`` with ``(s+1)**(k*n) < 2**s`` past the
    point where ``(t+1)**(k*n) / 2**t`` is decreasing; ``sauer_bound(t, k)``
    never exceeds ``(t+1)**k`` so no larger ``t`` can qualify.
    """
    if n < 0 or k < 0:
        raise InputError("b_vc needs non-negative arguments")
    e = k * n
    best = 0
    s = 0
    while True:
        if sauer_bound(s, k) ** n >= 1 << s:
            best = s
        elif (s + 1) ** e < 1 << s and (s + 2) ** e <= 2 * (s + 1) ** e:
            return best
        s += 1


def intersection_system(systems: Sequence[SetSystem]) -> SetSystem:
    """All intersections ``s_1 & ... & s_n`` with ``s_i`` from the i-th system."""
    if not systems:
        raise InputError("intersection_system needs at least one system")
    m = systems[0].ground_size
    for S in systems:
        if S.ground_size != m:
            raise InputError("systems have mismatched ground sizes")
        S.require_nonempty()
    acc = set(systems[0].concepts)
    for S in systems[1:]:
        acc = {a & b for a in acc for b in S.concepts}
    return SetSystem(m, tuple(acc))


def restrict(C: SetSystem, B: Iterable[int]) -> SetSystem:
    """``C|_B`` reindexed to ``0..|B|-1`` in ascending order of ``B``.

    The returned system's ``point_map`` gives the original index of each
    point (composed with ``C.point_map`` when present).
    """
    m = C.ground_size
    pts = sorted(set(int(b) for b in B))
    mask_of(m, pts)
    r = len(pts)
    rows = set()
    for c in C.concepts:
        v = 0
        for j, p in enumerate(pts):
            if c & bit(m, p):
                v |= bit(r, j)
        rows.add(v)
    return SetSystem(r, tuple(rows), point_map=tuple(C.original_point(p) for p in pts))


def relativize(C: SetSystem, cond: PartialLabeling) -> SetSystem:
    """The subclass of concepts extending ``cond`` (possibly empty)."""
    if cond.ground_size != C.ground_size:
        raise InputError("partial labeling and system have different ground sizes")
    return SetSystem(
        C.ground_size,
        tuple(c for c in C.concepts if cond.extended_by(c)),
        point_map=C.point_map,
    )
