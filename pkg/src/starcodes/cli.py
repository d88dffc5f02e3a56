"""
Command-line interface.

Exit codes: 0 success, 1 parse or I/O error, 2 precondition violation,
3 budget exceeded.  With ``--json`` every command prints one JSON document
(``table`` prints one JSON record per line) and errors are reported as
``{"error": <kind>, "message": <text>}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bounds
from .code import DEFAULT_BUDGET
from .codefile import dump_code, load_code, save_code
from .errors import BudgetExceeded, CodeFormatError, CodingError, InvalidParams, PreconditionViolated
from .gf import GF
from .product import power_code, product_code
from .suites import adjunction_suite, dim_dperp_suite, worked_examples
from .witness import product_singleton_witness, unconditional_witness, verify_report

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="starcodes", description="Componentwise products of linear codes.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("mindist", help="minimum distance and a minimum-weight codeword")
    s.add_argument("code")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    s = sub.add_parser("product", help="product code of the given codes")
    s.add_argument("codes", nargs="+")
    s.add_argument("-o", "--output")

    s = sub.add_parser("power", help="t-th power C^(t)")
    s.add_argument("code")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("-o", "--output")

    s = sub.add_parser("witness", help="codewords with a light product")
    s.add_argument("codes", nargs="+")
    s.add_argument("--unconditional", action="store_true")

    s = sub.add_parser("bound", help="product Singleton bound max(t-1, n+t-sum k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--k", type=_ints, required=True)

    s = sub.add_parser("aq", help="a_q^(t)(n,d): closed form, optionally exact")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--exact", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("table", help="a_q^(t)(n,d) for all n <= nmax and d <= n")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--nmax", type=int, required=True)
    s.add_argument("--t", type=_ints, required=True)
    s.add_argument("--exact", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    s = sub.add_parser("construct", help="partition or Reed-Solomon codes")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--partition", type=_ints, metavar="N,D")
    g.add_argument("--rs", type=_ints, metavar="Q,N,K")
    s.add_argument("--q", type=int, default=2, help="field for --partition")
    s.add_argument("-o", "--output")

    s = sub.add_parser("check-lemmas", help="randomized dimension/dual-distance and adjunction suites")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--q", type=_ints, default=[2, 3, 4])
    s.add_argument("--nmax", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)

    sub.add_parser("verify-paper", help="reproduce the worked examples")
    return p


def _emit_code(C, output, as_json, out):
    if output:
        save_code(C, output)
    if as_json:
        out.write(json.dumps({"q": C.field.q, "n": C.n, "k": C.k,
                              "generator": C.generator.tolist()}) + "\n")
    elif not output:
        out.write(dump_code(C))


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "mindist":
        C = load_code(args.code)
        d = C.min_distance(args.budget)
        w = C.min_weight_codeword(args.budget)
        if args.json:
            out.write(json.dumps({"n": C.n, "k": C.k, "d_min": d, "codeword": list(w)}) + "\n")
        else:
            out.write(f"d_min = {d}\ncodeword = {' '.join(map(str, w))}\n")
        return EXIT_OK

    if cmd == "product":
        _emit_code(product_code([load_code(p) for p in args.codes]), args.output, args.json, out)
        return EXIT_OK

    if cmd == "power":
        if args.t < 1:
            raise InvalidParams("--t must be >= 1")
        _emit_code(power_code(load_code(args.code), args.t), args.output, args.json, out)
        return EXIT_OK

    if cmd == "witness":
        Cs = [load_code(p) for p in args.codes]
        report = unconditional_witness(Cs) if args.unconditional else product_singleton_witness(Cs)
        problems = verify_report(Cs, report)
        if args.json:
            doc = report.to_dict()
            doc["verified"] = not problems
            doc["problems"] = problems
            out.write(json.dumps(doc) + "\n")
        else:
            out.write(f"branch   {report.branch.value}\n")
            for i, c in enumerate(report.codewords):
                out.write(f"c{i + 1:<7} {' '.join(map(str, c))}\n")
            out.write(f"product  {' '.join(map(str, report.product))}\n")
            out.write(f"weight   {report.weight}\nbound    {report.bound}\n")
            if not report.lift_exact:
                out.write("lift_exact false\n")
            out.write("verified\n" if not problems else f"FAILED {problems}\n")
        return EXIT_OK if not problems else EXIT_PRECONDITION

    if cmd == "bound":
        value = bounds.product_singleton_bound(args.n, args.t, args.k)
        out.write(json.dumps({"bound": value}) + "\n" if args.json else f"{value}\n")
        return EXIT_OK

    if cmd == "aq":
        F = GF(args.q)
        if args.exact:
            row = bounds.aq_exact(F, args.n, args.d, args.t, budget=args.budget, workers=args.workers)
            if args.json:
                out.write(json.dumps(row.to_dict()) + "\n")
            else:
                out.write(f"{row.exact_value}\n")
        else:
            f = bounds.aq_formula_bound(args.n, args.d, args.t)
            if args.json:
                out.write(json.dumps({"value": f.value, "exact": f.exact}) + "\n")
            else:
                out.write(f"{f.value} ({'exact' if f.exact else 'upper bound'})\n")
        return EXIT_OK

    if cmd == "table":
        F = GF(args.q)
        rows = []
        for t in args.t:
            for n in range(1, args.nmax + 1):
                for d in range(1, n + 1):
                    if args.exact:
                        rows.append(bounds.aq_exact(F, n, d, t, budget=args.budget))
                    else:
                        f = bounds.aq_formula_bound(n, d, t)
                        rows.append(bounds.BoundsRow(F.q, n, d, t, f.value, f.exact))
        if args.json:
            out.writelines(r.to_record() + "\n" for r in rows)
        else:
            out.write(bounds.format_table(rows))
        return EXIT_OK

    if cmd == "construct":
        if args.partition is not None:
            if len(args.partition) != 2:
                raise InvalidParams("--partition takes N,D")
            C = bounds.partition_code(GF(args.q), *args.partition)
        else:
            if len(args.rs) != 3:
                raise InvalidParams("--rs takes Q,N,K")
            q, n, k = args.rs
            C = bounds.reed_solomon(GF(q), n, k)
        _emit_code(C, args.output, args.json, out)
        return EXIT_OK

    if cmd == "check-lemmas":
        results = [
            dim_dperp_suite(args.trials, args.q, args.nmax, args.seed),
            adjunction_suite(args.trials, args.q, args.nmax, args.seed),
        ]
        if args.json:
            out.write(json.dumps({"suites": [r.to_dict() for r in results]}) + "\n")
        else:
            for r in results:
                status = "OK" if r.ok else "FAIL"
                out.write(f"{status:4} {r.name}: {r.trials} trials, {r.skipped} skipped, "
                          f"{len(r.failures)} failures\n")
        return EXIT_OK if all(r.ok for r in results) else EXIT_PRECONDITION

    if cmd == "verify-paper":
        checks = worked_examples()
        if args.json:
            out.write(json.dumps({"ok": all(c.ok for c in checks),
                                  "checks": [c.to_dict() for c in checks]}) + "\n")
        else:
            for c in checks:
                out.write(f"{'OK' if c.ok else 'FAIL':4} {c.name}" + (f"  [{c.detail}]" if c.detail else "") + "\n")
        return EXIT_OK if all(c.ok for c in checks) else EXIT_PRECONDITION

    raise _UsageError(f"unknown command {cmd}")  # pragma: no cover


def _error(kind: str, message: str, as_json: bool, out, err) -> None:
    if as_json:
        out.write(json.dumps({"error": kind, "message": message}) + "\n")
    else:
        err.write(f"error: {kind}: {message}\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except _UsageError as exc:
        _error("UsageError", str(exc), as_json, out, err)
        return EXIT_PARSE
    except (CodeFormatError, OSError) as exc:
        _error(type(exc).__name__, str(exc), as_json, out, err)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        _error("BudgetExceeded", str(exc), as_json, out, err)
        return EXIT_BUDGET
    except (PreconditionViolated, CodingError) as exc:
        _error(type(exc).__name__, str(exc), as_json, out, err)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
