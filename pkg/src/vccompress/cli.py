"""``vc-compress`` command line.

Exit codes: 0 success, 2 input error, 3 size cap exceeded, 4 exhausted
search (only with ``--strict``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .compression import (
    extend_compressible,
    find_kc_compressible,
    kc,
    rtd_sequence,
    teaching_dimension,
)
from .errors import CapExceeded, InputError
from .fileio import dumps_brel, dumps_ssys, read_brel, read_ssys
from .generators import FAMILIES, GeneratorSpec, generate
from .hypes import covers, hype_cover, hype_decompose, hype_family, is_k_hype
from .report import SUITES, dumps_report, report
from .rounded import Exhausted, as_alpha, decompose, transversal_report
from .setsystem import Labeling, PartialLabeling, SetSystem, dual, vc_dimension
from .udtfs import BipartiteRelation, udtfs_report

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_EXHAUSTED = 0, 2, 3, 4


class _Exhausted(Exception):
    pass


def _labeling(C: SetSystem, s: str) -> Labeling:
    lab = Labeling.from_string(s)
    if lab.ground_size != C.ground_size:
        raise InputError(f"labeling {s!r} has length {lab.ground_size}, expected {C.ground_size}")
    return lab


def _index_list(s: str | None) -> list[int] | None:
    if s is None:
        return None
    try:
        return [int(t) for t in s.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad index list {s!r}") from exc


def _cert_record(C: SetSystem, cert, bound: int | None) -> dict:
    d = vc_dimension(C)
    return {
        "concept": str(cert.concept),
        "witness": list(cert.witness),
        "size": cert.size,
        "bound": kc(d) if bound is None else bound,
        "vc": d,
    }


def _table(rec: dict) -> str:
    width = max(len(k) for k in rec) if rec else 0
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rec.items())


def _check_exhausted(args, res) -> None:
    if isinstance(res, Exhausted) and args.strict:
        raise _Exhausted


def cmd_gen(args):
    params = {}
    for key in ("t", "h", "n_concepts", "max_vc"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    spec = GeneratorSpec(args.family, args.size, args.seed, params)
    obj = generate(spec)
    comments = [f"{k}={v}" for k, v in spec.metadata().items()]
    if isinstance(obj, BipartiteRelation):
        return dumps_brel(obj, comments)
    return dumps_ssys(obj, comments)


def cmd_vc(args):
    C = read_ssys(args.file)
    return {"ground": C.ground_size, "concepts": len(C), "vc": vc_dimension(C)}


def cmd_dual(args):
    C = read_ssys(args.file)
    D = dual(C)
    if args.json:
        return {"ground": D.ground_size, "concepts": D.to_strings(), "vc": vc_dimension(D)}
    return dumps_ssys(D)


def cmd_teach(args):
    C = read_ssys(args.file)
    _, cert = teaching_dimension(C, _labeling(C, args.concept))
    return _cert_record(C, cert, None)


def cmd_rtd(args):
    C = read_ssys(args.file)
    seq = rtd_sequence(C)
    bound = kc(vc_dimension(C))
    rows = [{"concept": str(c), "size": v} for c, v in seq]
    if args.json:
        return {"sequence": rows, "bound": bound, "vc": vc_dimension(C), "max": max(v for _, v in seq)}
    lines = [f"{r['concept']}  {r['size']}" for r in rows]
    return "\n".join(lines + [f"max {max(v for _, v in seq)}  bound {bound}"])


def cmd_compress(args):
    C = read_ssys(args.file)
    _, cert = find_kc_compressible(C)
    return _cert_record(C, cert, None)


def cmd_extend(args):
    C = read_ssys(args.file)
    cond = PartialLabeling.from_string(args.partial)
    if cond.ground_size != C.ground_size:
        raise InputError("partial labeling length differs from ground size")
    l = len(cond.domain) if args.l is None else args.l
    _, cert = extend_compressible(C, cond, l)
    return _cert_record(C, cert, l + kc(vc_dimension(C)))


def cmd_decompose(args):
    C = read_ssys(args.file)
    res = decompose(C, _labeling(C, args.target), as_alpha(args.alpha), args.nmax, args.k)
    _check_exhausted(args, res)
    out = res.to_dict()
    out.setdefault("target", args.target)
    out.setdefault("alpha", str(as_alpha(args.alpha)))
    return out


def cmd_pq(args):
    F = read_ssys(args.file)
    return transversal_report(F, args.p, args.q).to_dict()


def cmd_hype(args):
    C = read_ssys(args.file)
    if args.verb == "family":
        H = hype_family(C, args.k)
        if args.json:
            return {"k": args.k, "hypes": H.to_strings(), "vc": vc_dimension(H) if len(H) else None}
        return dumps_ssys(H)
    if args.gamma is None:
        raise InputError(f"hype {args.verb} needs a labeling argument")
    gamma = _labeling(C, args.gamma)
    if args.verb == "check":
        return {"gamma": args.gamma, "k": args.k, "is_hype": is_k_hype(C, gamma, args.k)}
    if args.verb == "decompose":
        res = hype_decompose(C, gamma, as_alpha(args.alpha), args.nmax, args.k)
        _check_exhausted(args, res)
        out = res.to_dict()
        out.setdefault("target", args.gamma)
        return out
    cover = hype_cover(C, gamma, args.k)
    return {"gamma": args.gamma, "k": args.k, "cover": [str(c) for c in cover],
            "size": len(cover), "valid": covers(cover, gamma)}


def cmd_udtfs(args):
    R = read_brel(args.file)
    rep = udtfs_report(R, _index_list(args.A), as_alpha(args.alpha), args.nmax, args.k)
    if args.strict and not rep.complete:
        raise _Exhausted
    if args.json:
        return rep.to_dict()
    lines = [f"b={e.b}  {e.status}  expected={list(e.expected)}" for e in rep.entries]
    return "\n".join(lines + [f"{rep.successes}/{len(rep.entries)} exact"])


def cmd_report(args):
    return report(args.suite, seed=args.seed, n_max=args.nmax)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random families")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="exit 4 when a bounded search is exhausted")

    p = argparse.ArgumentParser(prog="vc-compress", parents=[common], description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a class or relation")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("size", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--h", type=int)
    g.add_argument("--n-concepts", dest="n_concepts", type=int)
    g.add_argument("--max-vc", dest="max_vc", type=int)
    g.set_defaults(func=cmd_gen)

    for name, fn, helptext in (
        ("vc", cmd_vc, "VC dimension"),
        ("dual", cmd_dual, "dual set system"),
        ("rtd", cmd_rtd, "recursive teaching sequence"),
        ("compress", cmd_compress, "find a kc(vc)-compressible concept"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.set_defaults(func=fn)

    s = sub.add_parser("teach", parents=[common], help="minimum teaching set of a concept")
    s.add_argument("file")
    s.add_argument("concept")
    s.set_defaults(func=cmd_teach)

    s = sub.add_parser("extend", parents=[common], help="extend a partial labeling compressibly")
    s.add_argument("file")
    s.add_argument("partial", help="e.g. 1**0, with * for unassigned points")
    s.add_argument("--l", type=int, help="teaching-set budget of the partial labeling")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("decompose", parents=[common], help="rounded-average decomposition")
    s.add_argument("file")
    s.add_argument("target")
    s.add_argument("--alpha", default="1/2")
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--k", type=int, default=1)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("pq", parents=[common], help="(p,q)-property and minimum transversal")
    s.add_argument("file")
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--q", type=int, default=2)
    s.set_defaults(func=cmd_pq)

    s = sub.add_parser("hype", parents=[common], help="k-hype operations")
    s.add_argument("verb", choices=("check", "family", "decompose", "cover"))
    s.add_argument("file")
    s.add_argument("gamma", nargs="?")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--alpha", default="1/2")
    s.add_argument("--nmax", type=int, default=5)
    s.set_defaults(func=cmd_hype)

    s = sub.add_parser("udtfs", parents=[common], help="honest definitions over a .brel relation")
    s.add_argument("file")
    s.add_argument("--A", dest="A", help="parameter rows, e.g. 0,1,2 (default all)")
    s.add_argument("--alpha", default="1/2")
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--k", type=int, default=2)
    s.set_defaults(func=cmd_udtfs)

    s = sub.add_parser("report", parents=[common], help="run a regression suite (JSON)")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--nmax", type=int, default=5)
    s.set_defaults(func=cmd_report)
    return p


def _render(args, result) -> str:
    if isinstance(result, str):
        return result if result.endswith("\n") else result + "\n"
    if args.command == "report" or args.json:
        return dumps_report(result) + "\n"
    return _table({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                   for k, v in result.items()}) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, default in (("json", False), ("seed", 0), ("out", None), ("strict", False)):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        text = _render(args, args.func(args))
    except _Exhausted:
        print("search exhausted", file=sys.stderr)
        return EXIT_EXHAUSTED
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
