"""Plain-text formats.

``.ssys``: first non-comment line ``m n``, then ``n`` rows of ``m`` 0/1
characters.  ``.brel``: first line ``|X| |Y|``, then ``|X|`` rows of ``|Y|``
0/1 characters.  ``#`` starts a comment in both.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from .errors import InputError
from .setsystem import SetSystem
from .udtfs import BipartiteRelation

__all__ = ["dumps_brel", "dumps_ssys", "loads_brel", "loads_ssys", "read_brel", "read_ssys", "write_text"]


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(lines: list[str], what: str) -> tuple[int, int]:
    if not lines:
        raise InputError(f"empty {what} input")
    parts = lines[0].split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise InputError(f"{what} header must be two naturals, got {lines[0]!r}")
    return int(parts[0]), int(parts[1])


def loads_ssys(text: str) -> SetSystem:
    lines = _content_lines(text)
    m, n = _header(lines, ".ssys")
    rows = lines[1:]
    if m == 0:
        # zero-width rows vanish as blank lines
        if rows:
            raise InputError("rows must be empty for a zero-point ground set")
        return SetSystem(0, (0,) * min(n, 1))
    if len(rows) != n:
        raise InputError(f".ssys declares {n} concepts but has {len(rows)} rows")
    return SetSystem.from_strings(rows, ground_size=m)


def dumps_ssys(C: SetSystem, comments: Iterable[str] = ()) -> str:
    head = [f"# {c}" for c in comments]
    body = [f"{C.ground_size} {len(C)}"] + C.to_strings()
    return "\n".join(head + body) + "\n"


def loads_brel(text: str) -> BipartiteRelation:
    lines = _content_lines(text)
    xs, ys = _header(lines, ".brel")
    rows = lines[1:]
    if len(rows) != xs:
        raise InputError(f".brel declares {xs} rows but has {len(rows)}")
    for r in rows:
        if len(r) != ys or set(r) - {"0", "1"}:
            raise InputError(f".brel row {r!r} must be {ys} characters of 0/1")
    mat = np.array([[int(ch) for ch in r] for r in rows], dtype=np.uint8).reshape(xs, ys)
    return BipartiteRelation(mat)


def dumps_brel(R: BipartiteRelation, comments: Iterable[str] = ()) -> str:
    head = [f"# {c}" for c in comments]
    body = [f"{R.x_size} {R.y_size}"] + ["".join(str(int(v)) for v in row) for row in R.matrix]
    return "\n".join(head + body) + "\n"


def read_ssys(path: str | os.PathLike) -> SetSystem:
    with open(path) as fh:
        return loads_ssys(fh.read())


def read_brel(path: str | os.PathLike) -> BipartiteRelation:
    with open(path) as fh:
        return loads_brel(fh.read())


def write_text(path: str | os.PathLike, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)
