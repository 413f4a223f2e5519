"""Machine-readable regression suites."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from . import __version__
from .compression import find_kc_compressible, kc, rtd_sequence
from .errors import InputError
from .generators import (
    CONCEPT_CAP,
    GROUND_CAP,
    ORACLE_CAP,
    intervals,
    oracle_min_td,
    order_relation,
    random_filtered,
    thresholds,
)
from .hypes import hype_family
from .rounded import Exhausted, decompose
from .setsystem import SetSystem, vc_dimension
from .udtfs import udtfs_report

__all__ = ["SCHEMA", "SUITES", "dumps_report", "kc_table", "report"]

SCHEMA = 1
SUITES = ("kc-table", "bounds", "decomposition", "udtfs", "hype-vc")


def kc_table(d_max: int = 3) -> dict[int, int]:
    return {d: kc(d) for d in range(d_max + 1)}


def bounds_entry(C: SetSystem) -> dict:
    d = vc_dimension(C)
    bound = kc(d)
    c, cert = find_kc_compressible(C)
    out = {
        "ground": C.ground_size,
        "concepts": len(C),
        "vc": d,
        "kc_bound": bound,
        "certificate": cert.size,
        "certificate_valid": cert.verify(C),
        "rtd_max": max(v for _, v in rtd_sequence(C)),
    }
    ok = out["certificate_valid"] and cert.size <= bound and out["rtd_max"] <= bound
    if C.ground_size <= ORACLE_CAP:
        out["min_td"] = min(oracle_min_td(C, x) for x in C)
        ok = ok and out["min_td"] <= bound
    out["pass"] = ok
    return out


def frontier_entry(C: SetSystem, n_max: int = 5, alpha=Fraction(1, 2)) -> dict:
    """For each target and each k up to kc(vc), the least n that works."""
    d = vc_dimension(C)
    rows = []
    for target in C:
        per_k = {}
        for k in range(kc(d) + 1):
            res = decompose(C, target, alpha, n_max, k)
            per_k[str(k)] = None if isinstance(res, Exhausted) else res.n
        rows.append({"target": str(target), "n_by_k": per_k})
    return {"ground": C.ground_size, "vc": d, "kc_bound": kc(d), "alpha": str(alpha), "targets": rows}


def _named_classes(seed: int) -> list[tuple[str, SetSystem]]:
    out = [(f"thresholds({m})", thresholds(m)) for m in (3, 4, 6, 10)]
    out += [(f"intervals({m})", intervals(m)) for m in (4, 5, 6)]
    out += [
        (f"random_filtered(6,8,seed={seed + i})", random_filtered(6, 8, seed + i, 2))
        for i in range(5)
    ]
    return out


def report(
    suite: str,
    *,
    seed: int = 0,
    classes: Sequence[tuple[str, SetSystem]] | None = None,
    n_max: int = 5,
) -> dict:
    """Run a named suite and return a JSON-ready document."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    doc = {
        "schema": SCHEMA,
        "suite": suite,
        "metadata": {
            "seed": seed,
            "caps": {"ground": GROUND_CAP, "concepts": CONCEPT_CAP, "oracle": ORACLE_CAP},
            "kc_table": {str(d): v for d, v in kc_table().items()},
            "version": __version__,
        },
    }
    if suite == "kc-table":
        doc["results"] = {str(d): v for d, v in kc_table(6).items()}
        return doc
    if suite == "udtfs":
        results = {}
        for m in range(3, 9):
            rep = udtfs_report(order_relation(m), None, Fraction(1, 2), n_max, 2)
            results[f"order_relation({m})"] = {
                "successes": rep.successes,
                "total": len(rep.entries),
                "max_k_used": max((e.params.k for e in rep.entries if e.params), default=None),
            }
        doc["results"] = results
        return doc
    if suite == "hype-vc":
        results = []
        for i in range(20):
            C = random_filtered(5, 6, seed + i)
            d = vc_dimension(C)
            for k in range(d + 1, 6):
                h = vc_dimension(hype_family(C, k))
                results.append({"instance": i, "vc": d, "k": k, "hype_vc": h, "pass": h <= d})
        doc["results"] = results
        return doc
    named = list(classes) if classes is not None else _named_classes(seed)
    if suite == "bounds":
        doc["results"] = {name: bounds_entry(C) for name, C in named}
    else:
        doc["results"] = {
            name: frontier_entry(C, n_max) for name, C in named if C.ground_size <= 7
        }
    return doc


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)
