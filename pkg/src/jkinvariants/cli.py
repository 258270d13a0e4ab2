"""Command-line entry point ``jkinv``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .canonical import canonicalize
from .catalog import CatalogError, list_corpus, load
from .catalog.check import verify_record
from .exactcore.field import fmt_rat, fmt_scalar, parse_scalar
from .exactcore.roots import NonSplitError
from .expr import ExprError
from .involution import FamilyError, PolyFamily, completeness_count, verify_biinvolution
from .jkinv import (
    ClassificationError,
    SamplingError,
    classify,
    sample_generic_pair,
    singular_line_report,
)
from .liealg import LieAlgebraError, StructureConstants, abelian, index, random_covector
from .pencil import InconsistentProfileError, Pencil, PencilError, jk_profile

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- input helpers ------------------------------------------------------------------


def _param_value(text: str):
    try:
        return Fraction(text)
    except ValueError:
        raise InputError(f"parameter value {text!r} is not a rational number") from None


def parse_params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"parameter {item!r} must look like name=value")
        v = _param_value(value)
        out[key] = int(v) if key in ("n", "k") and v.denominator == 1 else v
    return out


def parse_covector(text: str, dim: int) -> list:
    try:
        v = [Fraction(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse covector {text!r}") from None
    if len(v) != dim:
        raise InputError(f"covector has {len(v)} entries, algebra has dimension {dim}")
    return v


def resolve_algebra(ref: str, params: dict, dim: int | None = None):
    """(StructureConstants, record or None) for a catalog name, ``abelian`` or a file path."""
    if ref == "abelian":
        if dim is None:
            raise InputError("abelian needs --dim")
        return abelian(dim), None
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        try:
            return StructureConstants.from_file(path), None
        except FileNotFoundError:
            raise InputError(f"no such file: {ref}") from None
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"cannot read algebra file {ref}: {exc}") from None
    rec = load(ref, **params)
    return rec.algebra, rec


def read_pencil(path: str) -> Pencil:
    try:
        data = json.loads(Path(path).read_text())
        A = [[parse_scalar(str(e)) for e in row] for row in data["A"]]
        B = [[parse_scalar(str(e)) for e in row] for row in data["B"]]
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"cannot read pencil file {path}: {exc}") from None
    return Pencil(A, B)


def _matrix_strings(M) -> list:
    return [[fmt_scalar(e) for e in row] for row in M]


# -- commands -----------------------------------------------------------------------


def cmd_analyze(args) -> tuple[dict, int]:
    g, rec = resolve_algebra(args.algebra, parse_params(args.param), args.dim)
    cert = sample_generic_pair(g, args.trials, args.seed, args.box)
    kind = classify(g, args.seed, args.trials, args.box, certificate=cert)
    line = singular_line_report(g, cert.x, cert.a)
    results = {
        "algebra": g.name or args.algebra,
        "dim": g.dim,
        "profile": cert.profile.to_dict(),
        "summary": cert.profile.summary(),
        "classification": kind,
        "char_poly": [p.to_str() for p in cert.char_polys],
        "singular_line": line.to_dict(),
        "certificate": cert.to_dict(),
    }
    warnings = []
    if rec is not None and rec.report_only:
        warnings.append("report-only record: no expectations are asserted")
    return {"results": results, "warnings": warnings}, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    g, _ = resolve_algebra(args.algebra, parse_params(args.param), args.dim)
    kind = classify(g, args.seed, args.trials, args.box)
    return {"results": {"algebra": g.name or args.algebra, "classification": kind}}, EXIT_OK


def cmd_char_poly(args) -> tuple[dict, int]:
    g, _ = resolve_algebra(args.algebra, parse_params(args.param), args.dim)
    if (args.x is None) != (args.a is None):
        raise InputError("give both --x and --a, or neither")
    if args.x is not None:
        x, a = parse_covector(args.x, g.dim), parse_covector(args.a, g.dim)
    else:
        import random

        rng = random.Random(args.seed)
        x, a = random_covector(rng, g.dim, args.box), random_covector(rng, g.dim, args.box)
    line = singular_line_report(g, x, a)
    results = {"x": [fmt_rat(v) for v in x], "a": [fmt_rat(v) for v in a], **line.to_dict()}
    return {"results": results}, EXIT_OK


def _verify_one(job):
    name, seed, trials, box = job
    t0 = time.perf_counter()
    r = verify_record(load(name), seed=seed, trials=trials, box=box)
    d = r.to_dict()
    d["failures"] = r.failures()
    return d, time.perf_counter() - t0


def cmd_verify_corpus(args) -> tuple[dict, int]:
    names = list_corpus(dim=args.dim, type=args.type, max_dim=args.max_dim,
                        families=True if args.families else None)
    if args.name:
        unknown = [n for n in args.name if n not in list_corpus()]
        if unknown:
            raise InputError(f"unknown record(s): {', '.join(unknown)}")
        names = [n for n in names if n in set(args.name)]
    jobs = [(n, args.seed, args.trials, args.box) for n in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            done = list(pool.map(_verify_one, jobs))
    else:
        done = [_verify_one(j) for j in jobs]
    # pool.map already returns results in submission order, i.e. corpus order
    records = [d for d, _ in done]
    timing = {d["name"]: round(t, 3) for d, t in done}
    failed = [d["name"] for d in records if d["status"] == "FAIL"]
    results = {
        "records": records,
        "counts": {s: sum(1 for d in records if d["status"] == s) for s in ("PASS", "FAIL", "REPORT")},
        "failed": failed,
    }
    return {"results": results, "timing_by_record": timing}, EXIT_FAIL if failed else EXIT_OK


def cmd_verify_family(args) -> tuple[dict, int]:
    g, _ = resolve_algebra(args.algebra, parse_params(args.param), args.dim)
    a = parse_covector(args.a, g.dim)
    try:
        data = json.loads(Path(args.family).read_text())
        fam = PolyFamily.from_json(g.dim, data, label=Path(args.family).stem)
    except FileNotFoundError:
        raise InputError(f"no such file: {args.family}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"cannot read family file {args.family}: {exc}") from None
    inv = verify_biinvolution(g, a, fam)
    ind = index(g, trials=args.trials, seed=args.seed, box=args.box)
    target = (g.dim + ind) // 2
    cnt = completeness_count(g, fam, samples=3, seed=args.seed, box=args.box)
    results = {
        "members": len(fam.polys),
        "biinvolution": inv.ok,
        "completeness_count": cnt,
        "complete_target": target,
        "complete": cnt == target,
    }
    if not inv.ok:
        i, j, which, b = inv.witness
        results["witness"] = {"pair": [i + 1, j + 1], "bracket": which, "value": str(b)}
    ok = inv.ok and cnt == target
    return {"results": results}, EXIT_OK if ok else EXIT_FAIL


def cmd_decompose_pencil(args) -> tuple[dict, int]:
    P = read_pencil(args.file)
    prof = jk_profile(P, args.seed)
    results = {"n": P.n, "profile": prof.to_dict(), "summary": prof.summary()}
    warnings = []
    try:
        cf = canonicalize(P, args.field)
    except NonSplitError as exc:
        warnings.append(f"no canonical basis over {args.field or 'Q'}: {exc}")
    else:
        results["canonical"] = {
            "field": cf.field,
            "blocks": [b.describe() for b in cf.blocks],
            "T": _matrix_strings(cf.T),
            "A": _matrix_strings(cf.A),
            "B": _matrix_strings(cf.B),
            "congruence_verified": True,
        }
    return {"results": results, "warnings": warnings}, EXIT_OK


def cmd_list(args) -> tuple[dict, int]:
    names = list_corpus(dim=args.dim, type=args.type, max_dim=args.max_dim,
                        families=True if args.families else None)
    return {"results": {"names": names}}, EXIT_OK


# -- output -------------------------------------------------------------------------


def _text(command: str, report: dict) -> str:
    res = report["results"]
    lines = []
    if command == "analyze":
        lines.append(f"{res['algebra']} (dim {res['dim']}): {res['summary']}")
        lines.append(f"type: {res['classification']}")
        lines.append(f"p(λ) = {res['singular_line']['p']}")
        lines.append(f"agreement: {res['certificate']['agreement']}")
    elif command == "classify":
        lines.append(res["classification"])
    elif command == "char-poly":
        lines.append(f"p(λ) = {res['p']}")
        for s in res["strata"]:
            lines.append(f"  ({s['poly']})^{s['multiplicity']}")
    elif command == "verify-corpus":
        for d in res["records"]:
            extra = "; ".join(d["failures"]) if d["status"] == "FAIL" else ""
            lines.append(f"{d['name']:<22} {d['status']:<6} {d['computed']['profile']}  {extra}".rstrip())
        c = res["counts"]
        lines.append(f"{c['PASS']} passed, {c['FAIL']} failed, {c['REPORT']} report-only")
    elif command == "verify-family":
        lines.append(f"bi-involution: {'yes' if res['biinvolution'] else 'no'}")
        if "witness" in res:
            w = res["witness"]
            lines.append(f"  {w['bracket']} bracket of members {w['pair']} = {w['value']}")
        lines.append(f"independent members: {res['completeness_count']} (complete needs {res['complete_target']})")
    elif command == "decompose-pencil":
        lines.append(res["summary"])
        can = res.get("canonical")
        if can:
            lines.append(f"canonical blocks over {can['field']}: " + ", ".join(can["blocks"]))
            lines.append("T (columns are the new basis):")
            lines += ["  " + " ".join(row) for row in can["T"]]
    elif command == "list":
        lines += res["names"]
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    return "\n".join(lines)


COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "char-poly": cmd_char_poly,
    "verify-corpus": cmd_verify_corpus,
    "verify-family": cmd_verify_family,
    "decompose-pencil": cmd_decompose_pencil,
    "list": cmd_list,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jkinv", description="Jordan-Kronecker invariants of Lie algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=5)
    common.add_argument("--box", type=int, default=10)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("algebra", help="catalog name, 'abelian', or an algebra JSON file")
    algebra.add_argument("--param", action="append", metavar="NAME=VALUE",
                         help="catalog parameter, e.g. --param a=1/2 or --param n=3")
    algebra.add_argument("--dim", type=int, help="dimension for 'abelian'")
    filters = argparse.ArgumentParser(add_help=False)
    filters.add_argument("--dim", type=int)
    filters.add_argument("--max-dim", type=int)
    filters.add_argument("--type", choices=("Kronecker", "Jordan", "mixed"))
    filters.add_argument("--families", action="store_true", help="include the parametric families")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, algebra], help="profile, type and p(λ) of an algebra")
    sub.add_parser("classify", parents=[common, algebra], help="Kronecker / Jordan / mixed")
    cp = sub.add_parser("char-poly", parents=[common, algebra], help="p(λ) at a given or sampled pair")
    cp.add_argument("--x", help="comma-separated covector")
    cp.add_argument("--a", help="comma-separated covector")
    vc = sub.add_parser("verify-corpus", parents=[common, filters], help="check the corpus expectations")
    vc.add_argument("--name", action="append", help="restrict to these records")
    vc.add_argument("--jobs", type=int, default=1)
    vf = sub.add_parser("verify-family", parents=[common, algebra], help="bi-involution and completeness")
    vf.add_argument("family", help="JSON list of polynomials as term lists")
    vf.add_argument("--a", required=True, help="comma-separated covector")
    dp = sub.add_parser("decompose-pencil", parents=[common], help="canonical form of a pencil file")
    dp.add_argument("file")
    dp.add_argument("--field", choices=("Q", "Qi"))
    sub.add_parser("list", parents=[common, filters], help="corpus names")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        body, code = COMMANDS[args.command](args)
    except (InputError, CatalogError, ExprError, LieAlgebraError, FamilyError, PencilError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SamplingError, ClassificationError, InconsistentProfileError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("command", "json", "timing", "seed") and v not in (None, False, [])}
    report = {
        "command": args.command,
        "inputs": inputs,
        "seed": args.seed,
        "results": body["results"],
        "warnings": body.get("warnings", []),
    }
    if args.timing:
        report["timing"] = {"total_seconds": round(time.perf_counter() - t0, 3)}
        if "timing_by_record" in body:
            report["timing"]["records"] = body["timing_by_record"]
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(_text(args.command, report))
        if args.timing:
            print(f"time: {report['timing']['total_seconds']} s")
    return code


if __name__ == "__main__":
    sys.exit(main())
