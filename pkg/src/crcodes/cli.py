"""Command line front end and the on-disk code file format.

A code file carries one generator matrix:

    # optional comments
    q n k
    <n space-separated element codes>   (k rows)

Element codes are the integer encoding used by the field module. Reports
render as readable text by default or as JSON with --json; JSON output is
byte-identical across runs and worker counts, so wall-clock timings appear
only in the text form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .catalog import ENTRIES, build, verify_catalog
from .code import LinearCode, macwilliams_transform
from .coset import build_coset_table, is_completely_regular
from .design import verify_cr_designs
from .errors import CodeFileError, EnumerationLimitError
from .feas import FAMILIES, pless_solve_3w, scan_family
from .field import GF, prime_power
from .search import SearchSpec, exists_code
from .upws import solve_upws, sphere_packing_check

# below this size a process pool costs more than it saves
_PARALLEL_THRESHOLD = 1 << 16


def parse_code_file(text: str) -> LinearCode:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise CodeFileError("empty code file")
    head = lines[0].split()
    if len(head) != 3:
        raise CodeFileError(f"header must be 'q n k', got {lines[0]!r}")
    try:
        q, n, k = (int(t) for t in head)
    except ValueError:
        raise CodeFileError(f"non-integer header field in {lines[0]!r}") from None
    if prime_power(q) is None:
        raise CodeFileError(f"q = {q} is not a prime power")
    if not 0 < k <= n:
        raise CodeFileError(f"dimension k = {k} out of range for n = {n}")
    if len(lines) - 1 != k:
        raise CodeFileError(f"expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n:
            raise CodeFileError(f"row {ln!r} has {len(toks)} entries, expected {n}")
        try:
            row = [int(t) for t in toks]
        except ValueError:
            raise CodeFileError(f"non-integer entry in row {ln!r}") from None
        if any(not 0 <= x < q for x in row):
            raise CodeFileError(f"entry out of range [0, {q}) in row {ln!r}")
        rows.append(row)
    try:
        return LinearCode(GF.of(q), rows)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from None


def load_code_file(path: str) -> LinearCode:
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_code_file(text)


def serialize_code(code: LinearCode) -> str:
    lines = [f"{code.field.q} {code.n} {code.k}"]
    lines.extend(" ".join(map(str, row)) for row in code.generator.row_lists())
    return "\n".join(lines) + "\n"


def analyze_code(code: LinearCode, workers: int = 1):
    """Full report as (ordered dict, timings dict)."""
    if code.size < _PARALLEL_THRESHOLD:
        workers = 1
    timings: dict[str, float] = {}

    t0 = time.monotonic()
    wd = code.weight_distribution(workers)
    n, k, q = code.n, code.k, code.field.q
    if k <= n - k:
        dual_wd = macwilliams_transform(wd, n, k, q)
    else:
        dual_wd = code.dual_code().weight_distribution(workers)
    timings["weights"] = time.monotonic() - t0

    t0 = time.monotonic()
    table = build_coset_table(code)
    cr = is_completely_regular(code, table)
    timings["cosets"] = time.monotonic() - t0

    report = {
        "parameters": {"q": q, "n": n, "k": k, "d": wd.min_weight()},
        "self_dual": code.is_self_dual(),
        "antipodal": code.is_antipodal(),
        "weight_distribution": list(wd.counts),
        "dual_weights": list(dual_wd.nonzero_weights()),
        "s": len(dual_wd.nonzero_weights()),
        "rho": table.rho,
        "is_CR": cr.is_cr,
        "intersection_array": str(cr.ia) if cr.is_cr else None,
    }
    if not cr.is_cr:
        report["witness_cosets"] = [
            [int(x) for x in table.representative[s]] for s in cr.witness
        ]

    t0 = time.monotonic()
    coeffs = solve_upws(table.distinct_profile_rows())
    if coeffs is None:
        report["upws"] = None
    else:
        report["upws"] = {
            "betas": [str(b) for b in coeffs.betas],
            "unique": coeffs.unique,
            "sphere_packing": sphere_packing_check(code, coeffs),
        }
    timings["packing"] = time.monotonic() - t0

    t0 = time.monotonic()
    if cr.is_cr:
        designs = verify_cr_designs(code, cr)
        report["designs"] = {
            "e": designs.e,
            "checks": [
                {"weight": c.weight, "t": c.t, "lambda": c.lam} for c in designs.checks
            ],
            "all_verified": designs.all_verified,
        }
    else:
        report["designs"] = None
    timings["designs"] = time.monotonic() - t0

    sc = code.structural_checks()
    report["structural_checks"] = {
        "support_covers": sc.support_covers,
        "unit_intersection_free": sc.unit_intersection_free,
        "weights_divisible": sc.weights_divisible,
    }
    return report, timings


def _render_analysis(report, timings) -> str:
    p = report["parameters"]
    out = [
        f"parameters: q={p['q']} n={p['n']} k={p['k']} d={p['d']}",
        f"self_dual: {report['self_dual']}",
        f"antipodal: {report['antipodal']}",
        "weight_distribution: " + " ".join(map(str, report["weight_distribution"])),
        "dual_weights: " + " ".join(map(str, report["dual_weights"])),
        f"s: {report['s']}",
        f"rho: {report['rho']}",
        f"completely_regular: {report['is_CR']}",
        f"intersection_array: {report['intersection_array'] or '-'}",
    ]
    if "witness_cosets" in report:
        for vec in report["witness_cosets"]:
            out.append("witness_coset: " + " ".join(map(str, vec)))
    if report["upws"] is None:
        out.append("upws: none (rho != s)")
    else:
        u = report["upws"]
        tag = "unique" if u["unique"] else "non-unique"
        out.append(f"upws_betas: {' '.join(u['betas'])} ({tag})")
        out.append(f"sphere_packing: {u['sphere_packing']}")
    if report["designs"] is None:
        out.append("designs: skipped (code is not completely regular)")
    else:
        d = report["designs"]
        out.append(f"designs: e={d['e']} all_verified={d['all_verified']}")
        for c in d["checks"]:
            lam = c["lambda"] if c["lambda"] is not None else "not a design"
            out.append(f"  weight {c['weight']}: {c['t']}-design lambda={lam}")
    sc = report["structural_checks"]
    out.append(
        "structural: support_covers=%s unit_intersection_free=%s weights_divisible=%s"
        % (sc["support_covers"], sc["unit_intersection_free"], sc["weights_divisible"])
    )
    out.append("timing: " + " ".join(f"{k}={v:.3f}s" for k, v in timings.items()))
    return "\n".join(out)


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_analyze(args) -> int:
    code = load_code_file(args.path)
    report, timings = analyze_code(code, args.workers)
    if args.json:
        _emit_json(report)
    else:
        print(_render_analysis(report, timings))
    return 0


def _cmd_scan(args) -> int:
    result = scan_family(args.family)
    if args.json:
        _emit_json(
            {
                "family": result.family,
                "hits": [
                    {"q": h.q, "k": h.k, "extra": h.extra, "value": str(h.value)}
                    for h in result.hits
                ],
                "zero_denominators": [list(z) for z in result.zero_denominators],
            }
        )
        return 0
    for h in result.hits:
        extra = "" if h.extra is None else f" extra={h.extra}"
        print(f"q={h.q} k={h.k}{extra} value={h.value}")
    for z in result.zero_denominators:
        print(f"zero denominator at {z}")
    if not result.hits:
        print("no hits")
    return 0


def _cmd_pless(args) -> int:
    betas = pless_solve_3w(args.q, args.k, args.w1, args.w2, args.w3)
    print(" ".join(str(b) for b in betas))
    return 0


def _cmd_catalog(args) -> int:
    if args.subcommand == "list":
        for e in ENTRIES:
            print(f"{e.name:16s} [{e.n},{e.k},{e.d}]_{e.q} rho={e.rho}")
        return 0
    if args.subcommand == "build":
        text = serialize_code(build(args.name))
        if args.out:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(text)
        else:
            print(text, end="")
        return 0
    names = [args.name] if args.name else None
    report = verify_catalog(names)
    for e in report.entries:
        print(f"{e.name}: {'pass' if e.passed else 'FAIL'}")
        for c in e.checks:
            if not c.ok:
                print(f"  {c.name}: expected {c.expected}, got {c.actual}")
    return 0 if report.all_passed else 4


def _cmd_exists(args) -> int:
    spec = SearchSpec(
        args.n,
        args.k,
        args.q,
        args.dmin,
        require_self_dual=args.self_dual,
        limit_bits=args.limit,
    )
    witness = exists_code(spec, workers=args.workers)
    if witness is None:
        print("NONE")
    else:
        print(serialize_code(witness), end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crcodes",
        description="analyze linear codes for complete regularity and related structure",
    )
    ap.add_argument(
        "--workers",
        type=int,
        default=0,
        help="worker processes for enumeration (0 = all cores)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for a code file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true", help="emit JSON instead of text")

    s = sub.add_parser("scan", help="feasibility scan over a parameter family")
    s.add_argument("family", choices=list(FAMILIES))
    s.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("pless", help="solve a three-weight power moment system")
    for name in ("q", "k", "w1", "w2", "w3"):
        p.add_argument(name, type=int)

    c = sub.add_parser("catalog", help="named code constructions")
    csub = c.add_subparsers(dest="subcommand", required=True)
    csub.add_parser("list", help="list entries")
    b = csub.add_parser("build", help="write a generator file for an entry")
    b.add_argument("name")
    b.add_argument("--out", help="output path (default stdout)")
    v = csub.add_parser("verify", help="check entries against expected values")
    v.add_argument("name", nargs="?", help="single entry (default all)")

    e = sub.add_parser("exists", help="exhaustive search for given parameters")
    e.add_argument("n", type=int)
    e.add_argument("k", type=int)
    e.add_argument("dmin", type=int)
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--self-dual", action="store_true", dest="self_dual")
    e.add_argument("--limit", type=int, default=24, metavar="BITS", help="log2 search budget")

    return ap


_DISPATCH = {
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "pless": _cmd_pless,
    "catalog": _cmd_catalog,
    "exists": _cmd_exists,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.workers <= 0:
        args.workers = os.cpu_count() or 1
    try:
        return _DISPATCH[args.command](args)
    except CodeFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
