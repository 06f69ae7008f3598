"""Command-line interface.

Subcommands: info, cohomology, verify, search, table, catalog.  Exit codes:
0 = success / verified / found; 1 = verification failed or nothing found
(exhausted); 2 = input or usage error.  Every report is available as human
text (default) or machine-readable JSON (--json).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import catalog
from .algebra import (
    LieAlgebra,
    change_basis,
    lower_central_series,
    p_filiform_degree,
    validate,
)
from .cochain import betti
from .errors import InputError, NilgradeError, NotNilpotentError, UnknownAlgebraError
from .grading import check_conditions
from .linalg import RationalMatrix, parse_rational
from .search import NEGATIVE_RESULT_CAVEAT, find_grading

DEFAULT_BOUND_FACTOR = 2  # default search bound D = 2 * dim


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_algebra_document(path: str) -> LieAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse {path}: {exc}") from None
    return LieAlgebra.from_dict(doc)


def load_algebra(name: Optional[str] = None, path: Optional[str] = None) -> LieAlgebra:
    """Resolve --algebra/--file into a validated LieAlgebra.

    Catalog names are tried first, then family tokens like 'nmq:5,2'; --file
    always reads a JSON algebra document.
    """
    if (name is None) == (path is None):
        raise InputError("exactly one of --algebra and --file is required")
    if path is not None:
        L = load_algebra_document(path)
    elif ":" in name:
        L = catalog.family(catalog.parse_family(name))
    else:
        L = catalog.get(name).algebra
    report = validate(L)
    if not report.ok:
        triples = [v.triple for v in report.violations[:3]]
        raise InputError(
            f"{L.name}: structure constants violate the Jacobi identity at triples {triples}"
        )
    return L


def _load_basis_change(path: str, n: int) -> RationalMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse {path}: {exc}") from None
    if not isinstance(doc, list) or not all(isinstance(row, list) for row in doc):
        raise InputError("basis-change document must be a JSON array of rows")
    rows = [[parse_rational(v) for v in row] for row in doc]
    m = RationalMatrix(rows)
    if m.rows != n or m.cols != n:
        raise InputError(f"basis-change matrix must be {n}x{n}, got {m.rows}x{m.cols}")
    return m


def _parse_weights(text: str, n: int):
    try:
        weights = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--weights must be comma-separated integers, got {text!r}") from None
    if len(weights) != n:
        raise InputError(f"expected {n} weights, got {len(weights)}")
    return weights


def _resolve_jobs(value: Optional[int]) -> int:
    if value is not None:
        jobs = value
    else:
        env = os.environ.get("NILGRADE_JOBS", "").strip()
        try:
            jobs = int(env) if env else 1
        except ValueError:
            raise InputError(f"NILGRADE_JOBS must be an integer, got {env!r}") from None
    if jobs < 1:
        raise InputError(f"--jobs must be >= 1, got {jobs}")
    return jobs


def _prepare(args) -> LieAlgebra:
    L = load_algebra(getattr(args, "algebra", None), getattr(args, "file", None))
    basis_path = getattr(args, "basis_change", None)
    if basis_path:
        L = change_basis(L, _load_basis_change(basis_path, L.dim), name=f"{L.name}~")
    return L


# --- subcommands -------------------------------------------------------------


def _cmd_info(args, out) -> int:
    L = _prepare(args)
    series = lower_central_series(L)
    p = p_filiform_degree(L)
    doc = {
        "name": L.name,
        "dim": L.dim,
        "brackets": len(L.brackets),
        "jacobi_ok": True,
        "lcs_dims": list(series.dims),
        "nilpotency_class": series.nilpotency_class,
        "p_filiform": p,
    }
    if args.json:
        out.write(_dump_json(doc))
    else:
        out.write(f"algebra {L.name} (dim {L.dim}, {len(L.brackets)} brackets)\n")
        out.write(f"lower central series dims: {list(series.dims)}\n")
        out.write(f"nilpotency class: {series.nilpotency_class}\n")
        out.write(f"p-filiform degree: {p if p is not None else 'none'}\n")
    return 0


def _cmd_cohomology(args, out) -> int:
    L = _prepare(args)
    if args.degree is not None:
        degrees = [args.degree]
    else:
        top = args.max_degree if args.max_degree is not None else L.dim
        if not 0 <= top <= L.dim:
            raise InputError(f"--max-degree must be within 0..{L.dim}, got {top}")
        degrees = list(range(top + 1))
    values = [betti(L, k) for k in degrees]
    if args.json:
        out.write(_dump_json({"algebra": L.name, "dim": L.dim, "degrees": degrees, "betti": values}))
    else:
        out.write(f"algebra {L.name} (dim {L.dim})\n")
        if args.degree is not None:
            out.write(f"b_{args.degree} = {values[0]}\n")
        else:
            out.write(f"betti: {values}\n")
    return 0


def _cmd_verify(args, out) -> int:
    L = _prepare(args)
    weights = _parse_weights(args.weights, L.dim)
    report = check_conditions(L, weights)
    if args.json:
        out.write(_dump_json(report.to_dict()))
    else:
        if not report.homogeneous:
            out.write(
                "not homogeneous; violations: "
                + ", ".join(str(v) for v in report.homogeneity_violations)
                + "; W: not evaluated; H: not evaluated\n"
            )
        else:
            def verdict(flag, offenders):
                if flag:
                    return "pass"
                return "fail (" + "; ".join(str(o) for o in offenders) + ")"

            out.write(
                "homogeneous; W: "
                + verdict(report.w_pass, report.w_offenders)
                + "; H: "
                + verdict(report.h_pass, report.h_offenders)
                + "\n"
            )
    return 0 if report.wh_pass else 1


def _cmd_search(args, out) -> int:
    L = _prepare(args)
    bound = args.max_weight if args.max_weight is not None else DEFAULT_BOUND_FACTOR * L.dim
    jobs = _resolve_jobs(args.jobs)
    hit, outcome = find_grading(L, bound, mode=args.mode, jobs=jobs)
    if args.json:
        doc = outcome.to_dict()
        doc["algebra"] = L.name
        out.write(_dump_json(doc))
    else:
        if hit is not None:
            out.write(f"found grading: {','.join(str(x) for x in hit)} (mode {args.mode})\n")
        else:
            out.write(
                f"no grading found (exhausted, basis-diagonal, bound {bound})\n"
            )
        for alarm in outcome.guard_alarms:
            out.write(f"GUARD ALARM: {alarm.message}\n")
    return 0 if hit is not None else 1


@dataclass
class TableRow:
    name: str
    p_filiform: Optional[int]
    w_outcome: dict
    wh_outcome: dict
    expected: dict
    grading_check: Optional[dict]
    agreement: str
    hard_mismatch: bool

    def to_dict(self):
        return {
            "name": self.name,
            "p_filiform": self.p_filiform,
            "W": self.w_outcome,
            "WH": self.wh_outcome,
            "expected": self.expected,
            "grading_check": self.grading_check,
            "agreement": self.agreement,
            "hard_mismatch": self.hard_mismatch,
        }


def _table_row(entry: catalog.CatalogEntry, bound: int) -> TableRow:
    L = entry.algebra
    exp = entry.expected
    p = p_filiform_degree(L)
    w_hit, w_outcome = find_grading(L, bound, mode="w")
    wh_hit, wh_outcome = find_grading(L, bound, mode="wh")
    problems = []
    if wh_hit is not None:
        recheck = check_conditions(L, wh_hit)
        if not recheck.wh_pass:  # pragma: no cover - internal consistency
            problems.append("search hit fails re-verification")
    grading_check = None
    if exp.grading is not None:
        report = check_conditions(L, exp.grading)
        want_h = exp.wh_verdict == "yes"
        ok = (
            report.homogeneous
            and bool(report.w_pass)
            and (bool(report.h_pass) == want_h)
        )
        grading_check = {
            "weights": list(exp.grading),
            "homogeneous": report.homogeneous,
            "W": report.w_pass,
            "H": report.h_pass,
            "consistent_with_expected": ok,
        }
        if not ok:
            problems.append("reference grading does not reproduce the expected verdicts")
    if exp.w_verdict == "yes" and w_hit is None:
        problems.append("expected W=yes but search exhausted")
    if exp.wh_verdict == "yes" and wh_hit is None:
        problems.append("expected WH=yes but search exhausted")
    if exp.wh_verdict == "no" and wh_hit is not None:
        problems.append("expected WH=no but search found an assignment")
    if exp.w_verdict == "unknown":
        agreement = "mismatch" if problems else "paper-unknown"
    else:
        agreement = "mismatch" if problems else "match"
    return TableRow(
        name=entry.name,
        p_filiform=p,
        w_outcome=w_outcome.to_dict(),
        wh_outcome=wh_outcome.to_dict(),
        expected={
            "W": exp.w_verdict,
            "WH": exp.wh_verdict,
            "grading": list(exp.grading) if exp.grading else None,
        },
        grading_check=grading_check,
        agreement=agreement,
        hard_mismatch=bool(problems),
    )


def _table_row_by_name(payload):
    name, bound = payload
    return _table_row(catalog.get(name), bound)


def reproduce_table(dim: int, bound: Optional[int] = None, jobs: int = 1):
    """Recompute the verdict table for one dimension and compare with expectations."""
    if not 1 <= dim <= 6:
        raise InputError(f"table dimension must be 1..6, got {dim}")
    if bound is None:
        bound = DEFAULT_BOUND_FACTOR * dim
    entries = catalog.entries(dim=dim)
    if jobs > 1 and len(entries) > 1:
        payloads = [(e.name, bound) for e in entries]
        with concurrent.futures.ProcessPoolExecutor(max_workers=min(jobs, len(entries))) as pool:
            rows = list(pool.map(_table_row_by_name, payloads))
    else:
        rows = [_table_row(e, bound) for e in entries]
    return {
        "dim": dim,
        "bound": bound,
        "rows": [r.to_dict() for r in rows],
        "hard_mismatches": [r.name for r in rows if r.hard_mismatch],
    }


def _cmd_table(args, out) -> int:
    jobs = _resolve_jobs(args.jobs)
    report = reproduce_table(args.dim, bound=args.max_weight, jobs=jobs)
    if args.json:
        out.write(_dump_json(report))
    else:
        out.write(f"dimension {report['dim']} (search bound {report['bound']})\n")
        header = f"{'name':12s} {'p':>4s} {'W':16s} {'WH':16s} {'expected':10s} agreement\n"
        out.write(header)
        any_negative = False
        for row in report["rows"]:
            def summarize(oc):
                nonlocal any_negative
                if oc["found"]:
                    return ",".join(str(x) for x in oc["found"][0])
                any_negative = True
                return "none"

            w_str = summarize(row["W"])
            wh_str = summarize(row["WH"])
            exp = row["expected"]
            out.write(
                f"{row['name']:12s} {str(row['p_filiform'] or '-'):>4s} "
                f"{w_str:16s} {wh_str:16s} {exp['W'] + '/' + exp['WH']:10s} {row['agreement']}\n"
            )
        if any_negative:
            out.write(
                "note: 'none' means "
                + NEGATIVE_RESULT_CAVEAT.format(bound=report["bound"])
                + "\n"
            )
        if report["hard_mismatches"]:
            out.write("hard mismatches: " + ", ".join(report["hard_mismatches"]) + "\n")
    return 1 if report["hard_mismatches"] else 0


def _cmd_catalog(args, out) -> int:
    if args.catalog_action == "list":
        for name in catalog.names():
            out.write(name + "\n")
        return 0
    entry = catalog.get(args.name)
    out.write(_dump_json(entry.algebra.to_dict()))
    return 0


# --- argument parsing --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors -> exit 2 without killing callers
        raise _UsageError(message, self)


class _UsageError(Exception):
    def __init__(self, message, parser):
        super().__init__(message)
        self.parser = parser


def _add_algebra_args(p):
    p.add_argument("--algebra", help="catalog name (e.g. L5_8) or family token (e.g. nmq:5,2)")
    p.add_argument("--file", help="path to a JSON Lie-algebra document")
    p.add_argument("--basis-change", help="path to an n x n rational matrix (JSON rows)")


def build_parser() -> _Parser:
    parser = _Parser(prog="nilgrade", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="validation, central series, filiform degree")
    _add_algebra_args(p)

    p = sub.add_parser("cohomology", help="Betti numbers of the cochain complex")
    _add_algebra_args(p)
    p.add_argument("--degree", type=int, help="single cohomological degree")
    p.add_argument("--max-degree", type=int, help="compute b_0..b_K (default: dim)")

    p = sub.add_parser("verify", help="check a weight assignment against conditions (W)/(H)")
    _add_algebra_args(p)
    p.add_argument("--weights", required=True, help="comma-separated negative integers")

    p = sub.add_parser("search", help="search basis-diagonal admissible gradings")
    _add_algebra_args(p)
    p.add_argument("--max-weight", type=int, help="weight bound D (default 2*dim)")
    p.add_argument("--mode", choices=("wh", "w"), default="wh")
    p.add_argument("--jobs", type=int, help="parallel workers (default $NILGRADE_JOBS or 1)")

    p = sub.add_parser("table", help="recompute a verdict table and compare")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-weight", type=int, help="weight bound D (default 2*dim)")
    p.add_argument("--jobs", type=int, help="parallel workers (default $NILGRADE_JOBS or 1)")

    p = sub.add_parser("catalog", help="list catalog names or dump one algebra")
    csub = p.add_subparsers(dest="catalog_action", required=True)
    csub.add_parser("list")
    pdump = csub.add_parser("dump")
    pdump.add_argument("name")

    return parser


_COMMANDS = {
    "info": _cmd_info,
    "cohomology": _cmd_cohomology,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "table": _cmd_table,
    "catalog": _cmd_catalog,
}


def _normalize_argv(argv):
    """Glue '--weights -1,-1,-2' into '--weights=-1,-1,-2' so argparse
    does not mistake the negative-integer list for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--weights":
            val = next(it, None)
            out.append(tok if val is None else f"--weights={val}")
        else:
            out.append(tok)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except _UsageError as exc:
        exc.parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return 2
    try:
        return _COMMANDS[args.command](args, out)
    except UnknownAlgebraError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except NotNilpotentError as exc:
        err.write(f"error: not nilpotent: {exc}\n")
        return 2
    except (InputError, NilgradeError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
