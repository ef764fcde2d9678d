"""Batch command line: build interpolants from problem files and emit CSV.

    mtp build PROBLEM [--out FILE]
    mtp verify PROBLEM [--tolerance T] [--perturb I N DELTA] [--out FILE] [--plot FILE]
    mtp compare PROBLEM [--out FILE] [--plot FILE]
    mtp identities [--n-max N] [--k-max K] [--m-max M] [--out FILE]
    mtp grid PROBLEM [--stp-compare] [--out FILE] [--plot FILE]

Exit codes are a stable contract: 0 success, 1 verification failure, 2 parse
error, 3 node separation / conditioning rejection, 4 singular system. CSV is
comma-separated with a header row, '.' decimal point and LF line endings."""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import nullcontext

from . import __version__
from .combinatorics import identity_suite
from .mtp import (
    JetTable,
    NodeSeparationError,
    build_mtp,
    eval_structured,
    taylor_polynomial,
    to_monomial,
    verify_conditions,
)
from .oracles import SingularSystemError, hermite_vandermonde_solve, newton_hermite
from .problem import ProblemFormatError, load_problem
from .scalars import RATIONAL, coerce, fmt, parse

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_SEPARATION = 3
EXIT_SINGULAR = 4

DEFAULT_FLOAT_TOLERANCE = 1e-9
COMPARE_GATE = 1e-10


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtp",
        description="Multi-point Taylor interpolation: build, verify, compare, identities, grid.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="emit monomial and per-node coefficients")
    build.add_argument("problem")
    build.add_argument("--out", help="write CSV here instead of stdout")
    build.set_defaults(handler=cmd_build)

    verify = sub.add_parser("verify", help="check every derivative-matching condition")
    verify.add_argument("problem")
    verify.add_argument("--tolerance", type=float, default=None,
                        help="max acceptable absolute residual (forced to 0 in rational mode)")
    verify.add_argument("--perturb", nargs=3, metavar=("I", "N", "DELTA"),
                        help="negative control: add DELTA to expected jet (I, N) after building")
    verify.add_argument("--out", help="write CSV here instead of stdout")
    verify.add_argument("--plot", help="also render a residual figure to this file")
    verify.set_defaults(handler=cmd_verify)

    compare = sub.add_parser("compare", help="explicit formula vs the two solver routes")
    compare.add_argument("problem")
    compare.add_argument("--out", help="write CSV here instead of stdout")
    compare.add_argument("--plot", help="also render a deviation figure to this file")
    compare.set_defaults(handler=cmd_compare)

    identities = sub.add_parser("identities", help="exhaustive exact identity checks")
    identities.add_argument("--n-max", type=int, default=6)
    identities.add_argument("--k-max", type=int, default=6)
    identities.add_argument("--m-max", type=int, default=4)
    identities.add_argument("--out", help="write CSV here instead of stdout")
    identities.set_defaults(handler=cmd_identities)

    grid = sub.add_parser("grid", help="evaluate against the true function on a grid")
    grid.add_argument("problem")
    grid.add_argument("--stp-compare", action="store_true",
                      help="add a single-point expansion of the same total degree at the first node")
    grid.add_argument("--out", help="write CSV here instead of stdout")
    grid.add_argument("--plot", help="also render value and error curves to this file")
    grid.set_defaults(handler=cmd_grid)

    return parser


def _out_stream(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8", newline="")
    return nullcontext(sys.stdout)


def _build_model(problem):
    nodes = problem.node_set()
    jets = problem.jet_table(nodes)
    return nodes, jets, build_mtp(nodes, jets)


def cmd_build(args) -> int:
    problem = load_problem(args.problem)
    _, _, model = _build_model(problem)
    poly = to_monomial(model)
    with _out_stream(args) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["kind", "i", "n", "value"])
        for d, c in enumerate(poly.coefficients):
            writer.writerow(["monomial", d, "", fmt(c)])
        for g, row in enumerate(model.series_table):
            for n, value in enumerate(row):
                writer.writerow(["fcoef", g + 1, n, fmt(value)])
    return EXIT_OK


def _resolve_tolerance(problem, tolerance):
    if problem.mode == RATIONAL:
        return 0
    return DEFAULT_FLOAT_TOLERANCE if tolerance is None else tolerance


def cmd_verify(args) -> int:
    problem = load_problem(args.problem)
    nodes, jets, model = _build_model(problem)
    tolerance = _resolve_tolerance(problem, args.tolerance)
    if args.perturb:
        try:
            i = int(args.perturb[0]) - 1
            n = int(args.perturb[1])
            delta = parse(args.perturb[2], problem.mode)
            rows = [list(row) for row in jets.values]
            rows[i][n] = rows[i][n] + delta
        except (ValueError, IndexError) as exc:
            raise ProblemFormatError(f"bad --perturb: {exc}") from None
        jets = JetTable(tuple(tuple(row) for row in rows), problem.mode)
    report = verify_conditions(model, jets, tolerance)
    with _out_stream(args) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["i", "n", "expected", "actual", "abs_residual"])
        for row in report.rows:
            writer.writerow([
                row.node_index + 1,
                row.order,
                fmt(row.expected),
                fmt(row.actual),
                fmt(row.abs_residual),
            ])
    if args.plot:
        from . import plotting

        labels = [f"{r.node_index + 1}:{r.order}" for r in report.rows]
        residuals = [float(r.abs_residual) for r in report.rows]
        plotting.save_residual_figure(
            args.plot, labels, residuals, float(tolerance),
            title="condition residuals",
        )
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_compare(args) -> int:
    problem = load_problem(args.problem)
    nodes, jets, model = _build_model(problem)
    explicit = to_monomial(model)
    vandermonde = hermite_vandermonde_solve(nodes, jets)
    newton = newton_hermite(nodes, jets)
    size = max(len(explicit.coefficients), len(vandermonde.coefficients),
               len(newton.coefficients))

    def coef(poly, d):
        return poly.coefficients[d] if d < len(poly.coefficients) else coerce(0, problem.mode)

    deviations = []
    with _out_stream(args) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["index", "explicit", "vandermonde", "newton", "deviation"])
        for d in range(size):
            e, v, w = coef(explicit, d), coef(vandermonde, d), coef(newton, d)
            spread = max(abs(e - v), abs(e - w), abs(v - w))
            denom = max(abs(e), abs(v), abs(w), coerce(1, problem.mode))
            deviation = spread / denom
            deviations.append(deviation)
            writer.writerow([d, fmt(e), fmt(v), fmt(w), fmt(deviation)])
    if args.plot:
        from . import plotting

        plotting.save_comparison_figure(
            args.plot, list(range(size)), [float(d) for d in deviations],
            COMPARE_GATE if problem.mode != RATIONAL else None,
            title="route deviation per coefficient",
        )
    gate = 0 if problem.mode == RATIONAL else COMPARE_GATE
    passed = all(d <= gate for d in deviations)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_identities(args) -> int:
    if args.n_max < 1 or args.k_max < 1 or args.m_max < 1:
        raise ProblemFormatError("--n-max, --k-max and --m-max must be positive")
    checks = identity_suite(args.n_max, args.k_max, args.m_max)
    with _out_stream(args) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["check", "cases", "failures"])
        for check in checks:
            writer.writerow([check.name, check.cases, check.failures])
        writer.writerow(["total", sum(c.cases for c in checks), sum(c.failures for c in checks)])
    return EXIT_OK if all(c.failures == 0 for c in checks) else EXIT_VERIFY_FAILED


def _grid_points(problem):
    start, stop, count = problem.grid
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def cmd_grid(args) -> int:
    problem = load_problem(args.problem)
    if problem.grid is None:
        raise ProblemFormatError("grid command needs a grid line in the problem file")
    entry = problem.analytic_function()
    if entry is None:
        raise ProblemFormatError("grid command needs a function source for true values")
    nodes, jets, model = _build_model(problem)
    xs = _grid_points(problem)
    rational = problem.mode == RATIONAL
    poly = to_monomial(model) if rational else None

    stp = None
    if args.stp_compare:
        total_degree = nodes.m * problem.k + nodes.m - 1
        stp = taylor_polynomial(
            nodes.nodes[0], entry.jet(nodes.nodes[0], total_degree), problem.mode
        )

    table = []
    for x in xs:
        approx = poly.eval(x) if rational else eval_structured(model, x)
        true = entry.value_at(x)
        row = [x, approx, true, abs(approx - true)]
        if stp is not None:
            s = stp.eval(x)
            row.extend([s, abs(s - true)])
        table.append(row)

    header = ["x", "p", "f", "abs_error"]
    if stp is not None:
        header.extend(["stp", "stp_abs_error"])
    with _out_stream(args) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in table:
            writer.writerow([fmt(v) for v in row])
    if args.plot:
        from . import plotting

        plotting.save_grid_figure(
            args.plot,
            [float(r[0]) for r in table],
            [float(r[1]) for r in table],
            [float(r[2]) for r in table],
            [float(r[3]) for r in table],
            stp=[float(r[4]) for r in table] if stp is not None else None,
            stp_errors=[float(r[5]) for r in table] if stp is not None else None,
            title=f"{entry.name} on {len(xs)}-point grid",
        )
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.handler(args)
    except ProblemFormatError as exc:
        print(f"mtp: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NodeSeparationError as exc:
        print(f"mtp: {exc}", file=sys.stderr)
        return EXIT_SEPARATION
    except SingularSystemError as exc:
        print(f"mtp: {exc}", file=sys.stderr)
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
