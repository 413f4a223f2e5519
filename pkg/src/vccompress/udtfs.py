"""Finite formula semantics: types over a parameter set and honest definitions.

A formula ``phi(x, y)`` is given extensionally as a 0/1 matrix ``R`` with
``R[a, y] = phi(a, y)``.  For a parameter set ``A`` of rows, each column
restricted to ``A`` is a realised type; these form a set system on ``A``.

The synthesised definition has the shape::

    psi(x; d, d', d'') = Maj_{i<n} forall y ( AND_{j<k} (R(d_ij, y) <-> d'_ij == d''_ij) -> R(x, y) )

Each block ``i`` encodes a teaching set of one component type as a guard.
Since a teaching set pins its type down among the realised columns, the
columns passing guard ``i`` all carry that component's type on ``A``, so
block ``i`` accepts ``a`` exactly when the component is positive at ``a``.
The majority over blocks is therefore the rounded average of the
components, which equals the target column when the decomposition is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InputError
from .hypes import hype_decompose
from .rounded import Decomposition, Exhausted, as_alpha, decompose
from .setsystem import Labeling, SetSystem, bit

__all__ = [
    "BipartiteRelation",
    "HonestParams",
    "UdtfsEntry",
    "UdtfsReport",
    "accepted_set",
    "eval_psi",
    "honest_define",
    "hype_honest_define",
    "params_from_decomposition",
    "phi_types",
    "udtfs_report",
]


@dataclass(frozen=True, eq=False)
class BipartiteRelation:
    """A 0/1 matrix of shape ``(x_size, y_size)``."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=np.uint8, copy=True)
        if mat.ndim != 2:
            raise InputError("relation matrix must be two-dimensional")
        if mat.size and mat.max() > 1:
            raise InputError("relation entries must be 0 or 1")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_function(cls, x_size: int, y_size: int, fn) -> BipartiteRelation:
        return cls(
            np.array([[1 if fn(a, y) else 0 for y in range(y_size)] for a in range(x_size)])
        )

    @property
    def x_size(self) -> int:
        return self.matrix.shape[0]

    @property
    def y_size(self) -> int:
        return self.matrix.shape[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, BipartiteRelation) and np.array_equal(self.matrix, other.matrix)

    def __call__(self, a: int, y: int) -> bool:
        return bool(self.matrix[a, y])


def _params_set(R: BipartiteRelation, A: Sequence[int] | None) -> tuple[int, ...]:
    if A is None:
        A = range(R.x_size)
    pts = tuple(sorted(set(int(a) for a in A)))
    if not pts:
        raise InputError("parameter set A is empty")
    if pts[0] < 0 or pts[-1] >= R.x_size:
        raise InputError(f"parameter set A must lie in 0..{R.x_size - 1}")
    return pts


def _column_bits(R: BipartiteRelation, A: tuple[int, ...], y: int) -> int:
    m = len(A)
    return sum(bit(m, i) for i, a in enumerate(A) if R.matrix[a, y])


def phi_types(R: BipartiteRelation, A: Sequence[int] | None = None) -> SetSystem:
    """Realised types over ``A``: one concept per column, restricted to ``A``
    (point ``i`` of the result is row ``sorted(A)[i]``)."""
    pts = _params_set(R, A)
    cols = tuple(_column_bits(R, pts, y) for y in range(R.y_size))
    return SetSystem(len(pts), cols, point_map=pts)


@dataclass(frozen=True)
class HonestParams:
    """Parameters ``(d, d', d'')`` for the honest-definition schema.

    All three are ``n x k`` tables of rows of ``R`` drawn from ``A``.
    """

    n: int
    k: int
    d: tuple[tuple[int, ...], ...]
    d_prime: tuple[tuple[int, ...], ...]
    d_dblprime: tuple[tuple[int, ...], ...]
    A: tuple[int, ...] = field(default=())
    alpha: Fraction = Fraction(1, 2)

    def __post_init__(self):
        for name in ("d", "d_prime", "d_dblprime"):
            table = getattr(self, name)
            if len(table) != self.n or any(len(row) != self.k for row in table):
                raise InputError(f"{name} must be an {self.n} x {self.k} table")
            if self.A and any(v not in self.A for row in table for v in row):
                raise InputError(f"{name} has entries outside the parameter set")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alpha": str(self.alpha),
            "d": [list(r) for r in self.d],
            "d_prime": [list(r) for r in self.d_prime],
            "d_dblprime": [list(r) for r in self.d_dblprime],
        }


def _block_accepts(R: BipartiteRelation, d_row, dp_row, dpp_row) -> np.ndarray:
    """Boolean vector over rows: ``forall y (guard(y) -> R(a, y))``."""
    guard = np.ones(R.y_size, dtype=bool)
    for z, z1, z2 in zip(d_row, dp_row, dpp_row):
        guard &= R.matrix[z].astype(bool) == (z1 == z2)
    return np.all(R.matrix[:, guard].astype(bool), axis=1)


def accepted_set(R: BipartiteRelation, A: Sequence[int], params: HonestParams) -> tuple[int, ...]:
    """All ``a`` in ``A`` satisfying psi under ``params``."""
    pts = _params_set(R, A)
    if params.n == 0:
        raise InputError("params have no blocks")
    alpha = as_alpha(params.alpha)
    votes = np.zeros(R.x_size, dtype=np.int64)
    for i in range(params.n):
        votes += _block_accepts(R, params.d[i], params.d_prime[i], params.d_dblprime[i])
    return tuple(
        a for a in pts if votes[a] * alpha.denominator > alpha.numerator * params.n
    )


def eval_psi(R: BipartiteRelation, A: Sequence[int], params: HonestParams, a: int) -> bool:
    pts = _params_set(R, A)
    if a not in pts:
        raise InputError(f"point {a} is not in the parameter set")
    return a in accepted_set(R, pts, params)


def params_from_decomposition(
    dec: Decomposition, A: tuple[int, ...], k: int, anchors: tuple[int, int] | None = None
) -> HonestParams:
    """Encode each component's teaching set as a guard of exactly ``k`` literals.

    A witness shorter than ``k`` is padded by repeating its first point; an
    empty witness is padded with the first point of ``A`` carrying the
    component's own sign there (the class then has a single type, so the
    literal holds on every column).
    """
    if len(A) < 2:
        raise InputError("needs two anchors: |A| must be at least 2")
    c0, c1 = anchors if anchors is not None else (A[0], A[1])
    if c0 == c1 or c0 not in A or c1 not in A:
        raise InputError("anchors must be two distinct points of A")
    d, dp, dpp = [], [], []
    for cert in dec.components:
        if cert.size > k:
            raise InputError(f"witness of size {cert.size} exceeds k={k}")
        w = list(cert.witness) or [0]
        w = (w + [w[0]] * k)[:k]
        d.append(tuple(A[i] for i in w))
        dp.append((c0,) * k)
        dpp.append(tuple(c0 if cert.concept[i] else c1 for i in w))
    return HonestParams(dec.n, k, tuple(d), tuple(dp), tuple(dpp), A, dec.alpha)


def honest_define(
    R: BipartiteRelation,
    A: Sequence[int] | None,
    b: int,
    alpha=Fraction(1, 2),
    n_max: int = 5,
    k: int = 2,
    anchors: tuple[int, int] | None = None,
) -> HonestParams | Exhausted:
    """Parameters under which psi carves out exactly ``{a in A : R(a, b)}``."""
    pts = _params_set(R, A)
    if len(pts) < 2:
        raise InputError("needs two anchors: |A| must be at least 2")
    if not 0 <= b < R.y_size:
        raise InputError(f"column {b} outside 0..{R.y_size - 1}")
    C = phi_types(R, pts)
    target = Labeling(len(pts), _column_bits(R, pts, b))
    dec = decompose(C, target, alpha, n_max, k)
    if isinstance(dec, Exhausted):
        return dec
    return params_from_decomposition(dec, pts, k, anchors)


def hype_honest_define(
    R: BipartiteRelation,
    A: Sequence[int] | None,
    gamma: Labeling,
    alpha=Fraction(1, 2),
    n_max: int = 5,
    k: int = 2,
    anchors: tuple[int, int] | None = None,
) -> HonestParams | Exhausted:
    """As :func:`honest_define` for a k-hype ``gamma`` over the realised types."""
    pts = _params_set(R, A)
    if len(pts) < 2:
        raise InputError("needs two anchors: |A| must be at least 2")
    C = phi_types(R, pts)
    dec = hype_decompose(C, gamma, alpha, n_max, k)
    if isinstance(dec, Exhausted):
        return dec
    return params_from_decomposition(dec, pts, k, anchors)


@dataclass(frozen=True)
class UdtfsEntry:
    b: int
    status: str
    params: HonestParams | None
    accepted: tuple[int, ...] | None
    expected: tuple[int, ...]

    @property
    def exact(self) -> bool:
        return self.accepted is not None and self.accepted == self.expected

    def to_dict(self) -> dict:
        out = {"b": self.b, "status": self.status, "expected": list(self.expected)}
        if self.params is not None:
            out.update(
                n=self.params.n,
                k=self.params.k,
                accepted=list(self.accepted),
                exact=self.exact,
                params=self.params.to_dict(),
            )
        return out


@dataclass(frozen=True)
class UdtfsReport:
    A: tuple[int, ...]
    alpha: Fraction
    n_max: int
    k: int
    entries: tuple[UdtfsEntry, ...]

    @property
    def successes(self) -> int:
        return sum(1 for e in self.entries if e.exact)

    @property
    def complete(self) -> bool:
        return self.successes == len(self.entries)

    def to_dict(self) -> dict:
        return {
            "A": list(self.A),
            "alpha": str(self.alpha),
            "n_max": self.n_max,
            "k": self.k,
            "successes": self.successes,
            "total": len(self.entries),
            "entries": [e.to_dict() for e in self.entries],
        }


def udtfs_report(
    R: BipartiteRelation,
    A: Sequence[int] | None = None,
    alpha=Fraction(1, 2),
    n_max: int = 5,
    k: int = 2,
) -> UdtfsReport:
    """Run :func:`honest_define` for every column and re-check each result."""
    pts = _params_set(R, A)
    if len(pts) < 2:
        raise InputError("needs two anchors: |A| must be at least 2")
    a = as_alpha(alpha)
    entries = []
    for b in range(R.y_size):
        expected = tuple(x for x in pts if R.matrix[x, b])
        res = honest_define(R, pts, b, a, n_max, k)
        if isinstance(res, Exhausted):
            entries.append(UdtfsEntry(b, "exhausted", None, None, expected))
            continue
        got = accepted_set(R, pts, res)
        entries.append(UdtfsEntry(b, "ok" if got == expected else "mismatch", res, got, expected))
    return UdtfsReport(pts, a, n_max, k, tuple(entries))
