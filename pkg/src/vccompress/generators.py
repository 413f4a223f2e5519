"""Concept-class generators with known VC dimension, and the brute-force
teaching-dimension oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import CapExceeded, InputError
from .setsystem import Labeling, SetSystem, mask_of, vc_dimension
from .udtfs import BipartiteRelation

__all__ = [
    "FAMILIES",
    "GROUND_CAP",
    "CONCEPT_CAP",
    "ORACLE_CAP",
    "GeneratorSpec",
    "full_cube",
    "generate",
    "halfplanes_on_grid",
    "intervals",
    "oracle_min_td",
    "order_relation",
    "random_filtered",
    "singletons",
    "thresholds",
    "unions_of_t_intervals",
]

GROUND_CAP = 24
CONCEPT_CAP = 4096
ORACLE_CAP = 16

FAMILIES = (
    "full_cube",
    "singletons",
    "thresholds",
    "intervals",
    "unions_of_t_intervals",
    "halfplanes_on_grid",
    "order_relation",
    "random_filtered",
)


def _check_ground(m: int) -> None:
    if m < 0:
        raise InputError("size must be non-negative")
    if m > GROUND_CAP:
        raise CapExceeded(f"ground size {m} exceeds {GROUND_CAP}")


def _finish(m: int, sets) -> SetSystem:
    C = SetSystem.from_sets(m, sets)
    if len(C) > CONCEPT_CAP:
        raise CapExceeded(f"{len(C)} concepts exceed {CONCEPT_CAP}")
    return C


def full_cube(m: int) -> SetSystem:
    """All ``2**m`` subsets; vc = m."""
    _check_ground(m)
    if 1 << m > CONCEPT_CAP:
        raise CapExceeded(f"2**{m} concepts exceed {CONCEPT_CAP}")
    return SetSystem(m, tuple(range(1 << m)))


def singletons(m: int) -> SetSystem:
    """The sets ``{i}``; vc = 1 for m >= 2."""
    _check_ground(m)
    return _finish(m, [[i] for i in range(m)])


def thresholds(m: int) -> SetSystem:
    """Initial segments ``[0, j]`` plus the empty set; vc = 1 for m >= 1."""
    _check_ground(m)
    return _finish(m, [[]] + [range(j + 1) for j in range(m)])


def intervals(m: int) -> SetSystem:
    """Discrete intervals ``[i, j]`` plus the empty set; vc = 2 for m >= 2."""
    return unions_of_t_intervals(m, 1)


def unions_of_t_intervals(m: int, t: int) -> SetSystem:
    """Unions of at most ``t`` intervals; vc = 2t when m >= 2t."""
    _check_ground(m)
    if t < 0:
        raise InputError("t must be non-negative")
    sets = []
    for S in range(1 << m):
        bits = format(S, f"0{m}b") if m else ""
        runs = sum(1 for i, ch in enumerate(bits) if ch == "1" and (i == 0 or bits[i - 1] == "0"))
        if runs <= t:
            sets.append(S)
            if len(sets) > CONCEPT_CAP:
                raise CapExceeded(f"more than {CONCEPT_CAP} concepts")
    return SetSystem(m, tuple(sets))


def halfplanes_on_grid(w: int, h: int) -> SetSystem:
    """Subsets of a ``w x h`` integer grid cut out by open half-planes.

    Point ``i`` is ``(i % w, i // w)``.  Every dichotomy realisable by a line
    is realised by some direction strictly between two consecutive critical
    directions (normals to differences of grid points), so scanning those
    directions and all projection thresholds is exhaustive.  vc = 3 once the
    grid contains three non-collinear points.
    """
    if w < 1 or h < 1:
        raise InputError("grid sides must be positive")
    m = w * h
    _check_ground(m)
    pts = [(i % w, i // w) for i in range(m)]
    crit = set()
    for (x1, y1), (x2, y2) in combinations(pts, 2):
        ang = math.atan2(y2 - y1, x2 - x1)
        for base in (ang + math.pi / 2, ang - math.pi / 2):
            crit.add(round(base % (2 * math.pi), 12))
    crit = sorted(crit) or [0.0]
    dirs = [
        (a + (crit[(i + 1) % len(crit)] + (2 * math.pi if i + 1 == len(crit) else 0))) / 2
        for i, a in enumerate(crit)
    ]
    sets = {0, (1 << m) - 1}
    for theta in dirs:
        u = (math.cos(theta), math.sin(theta))
        order = sorted(range(m), key=lambda i: pts[i][0] * u[0] + pts[i][1] * u[1])
        acc = []
        for i in reversed(order):
            acc.append(i)
            sets.add(mask_of(m, acc))
    if len(sets) > CONCEPT_CAP:
        raise CapExceeded(f"{len(sets)} concepts exceed {CONCEPT_CAP}")
    return SetSystem(m, tuple(sets))


def order_relation(m: int) -> BipartiteRelation:
    """``R[a, y] = (a <= y)`` on ``m x m``."""
    _check_ground(m)
    return BipartiteRelation.from_function(m, m, lambda a, y: a <= y)


def random_filtered(m: int, n_concepts: int, seed: int, max_vc: int | None = None) -> SetSystem:
    """Random labelings drawn with ``numpy.random.default_rng(seed)``.

    With ``max_vc`` set, a draw is kept only if the class stays within that
    VC dimension.  At most ``4 * n_concepts`` draws are made.
    """
    _check_ground(m)
    if n_concepts < 1:
        raise InputError("n_concepts must be positive")
    if n_concepts > CONCEPT_CAP:
        raise CapExceeded(f"{n_concepts} concepts exceed {CONCEPT_CAP}")
    rng = np.random.default_rng(seed)
    kept: list[int] = []
    for _ in range(4 * n_concepts):
        if len(kept) >= n_concepts:
            break
        c = int(rng.integers(0, 1 << m)) if m else 0
        if c in kept:
            continue
        if max_vc is not None and vc_dimension(SetSystem(m, tuple(kept + [c]))) > max_vc:
            continue
        kept.append(c)
    return SetSystem(m, tuple(kept))


@dataclass(frozen=True)
class GeneratorSpec:
    """A named family plus its size parameters.

    ``size`` is the ground size (grid width for ``halfplanes_on_grid``);
    ``params`` holds ``t`` for unions of intervals, ``h`` for grids and
    ``n_concepts``/``max_vc`` for random classes.
    """

    family: str
    size: int
    seed: int = 0
    params: dict = field(default_factory=dict)

    def metadata(self) -> dict:
        meta = {"family": self.family, "size": self.size, **self.params}
        if self.family == "random_filtered":
            meta["seed"] = self.seed
        return meta


def generate(spec: GeneratorSpec) -> SetSystem | BipartiteRelation:
    f, m, p = spec.family, spec.size, spec.params
    if f == "full_cube":
        return full_cube(m)
    if f == "singletons":
        return singletons(m)
    if f == "thresholds":
        return thresholds(m)
    if f == "intervals":
        return intervals(m)
    if f == "unions_of_t_intervals":
        return unions_of_t_intervals(m, int(p.get("t", 1)))
    if f == "halfplanes_on_grid":
        return halfplanes_on_grid(m, int(p.get("h", m)))
    if f == "order_relation":
        return order_relation(m)
    if f == "random_filtered":
        max_vc = p.get("max_vc")
        return random_filtered(
            m, int(p.get("n_concepts", 8)), spec.seed, None if max_vc is None else int(max_vc)
        )
    raise InputError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")


def oracle_min_td(C: SetSystem, c: Labeling) -> int:
    """Minimum teaching-set size by scanning every subset of the ground set
    in order of size and counting the concepts that share ``c``'s trace."""
    m = C.ground_size
    if m > ORACLE_CAP:
        raise CapExceeded(f"oracle limited to ground size {ORACLE_CAP}")
    if c.ground_size != m or c.bits not in C.concepts:
        raise InputError(f"{c} is not a concept of the class")
    cols = [[(x >> (m - 1 - i)) & 1 for i in range(m)] for x in C.concepts]
    me = [(c.bits >> (m - 1 - i)) & 1 for i in range(m)]
    for size in range(m + 1):
        for S in combinations(range(m), size):
            matches = [row for row in cols if all(row[i] == me[i] for i in S)]
            if len(matches) == 1:
                return size
    raise AssertionError("the full ground set always separates distinct concepts")
