"""
Queens Domination Toolkit
Command-line entry point: exact solving, enumeration, near-domination, bound census, constructions,
solution-file verification and HTML export

Usage:
    python main.py solve 8 11 --expect
    python main.py enumerate 11 11 --html
    python main.py near-dominate 8 11 5
    python main.py bounds --census --questions
    python main.py construct strong --m1 7 --n1 4 --k 1
    python main.py construct zero-cover --preset example1
    python main.py construct family --n1 7 --m1 9
    python main.py verify solutions/11x11_5Q.json
    python main.py export-html solutions/11x11_5Q.json --out html

Exit codes:
    0 success
    1 verification failure or census mismatch
    2 search budget exhausted (result incomplete)
    3 --expect mismatch against the reference table
    4 infeasible plan, invalid construction parameters or invalid arguments
    5 unreadable or malformed file
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from board import QueenSet, render_board
from bounds import (
    EXPECTED_CENSUS,
    best_lower,
    bound_census,
    census_summary,
    monotonicity_violations,
    tight_pairs,
)
from config import Settings, load_settings
from constructions import (
    EXAMPLE1_DIMS,
    StrongSet,
    applicable_boards,
    central_params,
    centrally_strong_search,
    example1_aux_options,
    example1_plan,
    family_n1_5,
    family_n1_7,
    family_bounds,
    family_prop5,
    largest_feasible_k,
    prefer_wider,
    sum_orth,
    zero_cover_search,
)
from errors import (
    InfeasiblePlan,
    InvalidParams,
    ParseError,
    VerificationFailed,
)
from html_appendix import export_html
from solution_store import (
    SolutionFile,
    Table1Store,
    default_filename,
    read_solution_file,
    verify_path,
    write_solution_file,
)
from solver import SearchBudget, augmentation_chain, enumerate_min, gamma, naive_gamma, near_dominating
from symmetry import cell_size_histogram, foursome_census, partition, symmetry_descriptor

LOGGER = logging.getLogger("qdom")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCOMPLETE = 2
EXIT_MISMATCH = 3
EXIT_INVALID = 4
EXIT_PARSE = 5

ORACLE_MAX_SQUARES = 30
CLASS_LISTING = 20


class Report:
    """Banner-style text report shared by every command"""

    def __init__(self, title: str):
        self.lines: List[str] = ["\n" + "=" * 80, title.center(80), "=" * 80]

    def section(self, name: str) -> None:
        self.lines.append(f"\n[{name}]")

    def item(self, text: str) -> None:
        self.lines.append(f"  • {text}")

    def block(self, text: str) -> None:
        self.lines.extend("  " + row for row in text.splitlines())

    def render(self) -> str:
        return "\n".join(self.lines + ["\n" + "=" * 80 + "\n"])


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the invalid-arguments code instead of argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(
        max_queens=getattr(args, "max_queens", None),
        node_limit=args.nodes,
        time_limit=args.seconds,
    )


def _prune_bounds(args: argparse.Namespace, settings: Settings) -> bool:
    return settings.prune_with_bounds and not getattr(args, "no_bound_pruning", False)


def _prune_lines(args: argparse.Namespace, settings: Settings) -> bool:
    return settings.prune_with_lines and not getattr(args, "no_line_pruning", False)


def _output_dir(args: argparse.Namespace, settings: Settings) -> Path:
    return Path(getattr(args, "output", None) or settings.output_dir)


def _queen_lines(report: Report, s: QueenSet) -> None:
    report.item(f"Queens: {', '.join(f'({sq.x},{sq.y})' for sq in s.squares)}")
    report.block(render_board(s))


def _write(sf: SolutionFile, args: argparse.Namespace, settings: Settings, report: Report) -> None:
    out_dir = _output_dir(args, settings)
    path = write_solution_file(sf, out_dir / default_filename(sf))
    report.item(f"Solution file: {path}")
    if getattr(args, "html", False):
        report.item(f"HTML appendix: {export_html(sf, out_dir)}")


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------

def cmd_solve(args: argparse.Namespace, settings: Settings) -> int:
    outcome = gamma(
        (args.m, args.n),
        _budget(args),
        threads=args.threads,
        prune_with_bounds=_prune_bounds(args, settings),
        prune_with_lines=_prune_lines(args, settings),
    )
    dims = outcome.dims
    report = Report(f"DOMINATION NUMBER OF Q({dims.m} x {dims.n})")
    report.section("RESULT")
    if outcome.transposed:
        report.item(f"Input {args.m} x {args.n} normalized to {dims.label()}")
    if outcome.gamma is None:
        report.item(f"No dominating set with at most {args.max_queens} queens")
    else:
        relation = "=" if outcome.exact else "<="
        report.item(f"gamma {relation} {outcome.gamma}  (status: {outcome.status.value})")
    report.item(f"Proved lower bound: {outcome.lower_bound}")
    if outcome.witnesses:
        report.section("WITNESS")
        _queen_lines(report, outcome.witnesses[0])

    report.section("BOUNDS")
    witness = outcome.witnesses[0] if outcome.witnesses else None
    for name, value in best_lower(dims.m, dims.n, witness).as_dict().items():
        if name not in ("m", "n") and value is not None:
            report.item(f"{name}: {value}")

    report.section("SEARCH")
    report.item(f"Nodes: {outcome.nodes:,}")
    report.item(f"Time: {outcome.elapsed:.2f}s")

    code = EXIT_OK if outcome.exact else EXIT_INCOMPLETE
    if args.check_oracle:
        if dims.size > ORACLE_MAX_SQUARES:
            report.item(f"Oracle skipped: {dims.size} squares is above {ORACLE_MAX_SQUARES}")
        else:
            value, _ = naive_gamma(dims)
            report.item(f"Exhaustive oracle: {value} ({'agrees' if value == outcome.gamma else 'DISAGREES'})")
            if value != outcome.gamma:
                code = EXIT_FAILED
    if args.expect:
        expected = Table1Store().get(dims.m, dims.n)
        report.section("REFERENCE")
        if expected is None:
            report.item(f"No reference value for {dims.label()}")
        elif outcome.exact and outcome.gamma == expected:
            report.item(f"Matches reference gamma {expected}")
        else:
            report.item(f"MISMATCH: reference gamma is {expected}")
            code = code if code == EXIT_INCOMPLETE else EXIT_MISMATCH
    print(report.render())
    return code


def cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    outcome = enumerate_min(
        (args.m, args.n),
        _budget(args),
        threads=args.threads,
        prune_with_bounds=_prune_bounds(args, settings),
        prune_with_lines=_prune_lines(args, settings),
    )
    dims = outcome.dims
    report = Report(f"MINIMUM DOMINATING SETS OF Q({dims.m} x {dims.n})")
    report.section("RESULT")
    report.item(f"gamma: {outcome.gamma}  (status: {outcome.status.value})")
    report.item(f"Equivalence classes: {len(outcome.classes)}")
    report.item(f"Concrete sets: {outcome.concrete_count}")
    report.item(f"Nodes: {outcome.nodes:,}, time {outcome.elapsed:.2f}s")

    report.section("CLASSES")
    for index, cls in enumerate(outcome.classes[:CLASS_LISTING], start=1):
        report.item(f"#{index}: {cls.size} of {cls.orbit_size} images found, "
                    f"symmetry {symmetry_descriptor(cls.representative)}")
    if len(outcome.classes) > CLASS_LISTING:
        report.item(f"... {len(outcome.classes) - CLASS_LISTING} more in the solution file")

    report.section("FOURSOMES")
    for count, classes in foursome_census(outcome.classes).items():
        report.item(f"{classes} class(es) with {count} foursome(s)")
    report.section("PARTITION")
    cells = partition(outcome.classes)
    report.item(f"{len(cells)} cell(s); sizes {cell_size_histogram(cells)}")

    reps = [c.representative for c in outcome.classes]
    sf = SolutionFile.from_sets(reps, outcome.gamma, outcome.status.value, dims=dims)
    report.section("OUTPUT")
    _write(sf, args, settings, report)
    print(report.render())
    return EXIT_OK if outcome.exact else EXIT_INCOMPLETE


def cmd_near(args: argparse.Namespace, settings: Settings) -> int:
    outcome = near_dominating((args.m, args.n), args.k, _budget(args), prune_with_lines=_prune_lines(args, settings))
    dims = outcome.dims
    report = Report(f"{args.k} QUEENS ON Q({dims.m} x {dims.n})")
    report.section("RESULT")
    if outcome.max_covered is None:
        report.item(f"Search incomplete after {outcome.nodes:,} nodes")
        print(report.render())
        return EXIT_INCOMPLETE
    report.item(f"Maximum coverage: {outcome.max_covered}/{dims.size}")
    report.item(f"Arrangements: {outcome.concrete_count} concrete, {len(outcome.classes)} up to isometry")
    report.item(f"Nodes: {outcome.nodes:,}, time {outcome.elapsed:.2f}s")
    if outcome.classes:
        example = outcome.classes[0].representative
        report.section("ONE ARRANGEMENT")
        _queen_lines(report, example)
        missed = ", ".join(f"({sq.x},{sq.y})" for sq in example.uncovered()) or "none"
        report.item(f"Uncovered: {missed}")
    print(report.render())
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, settings: Settings) -> int:
    table = Table1Store().as_mapping()
    report = Report("LOWER BOUNDS AND REFERENCE VALUES")
    code = EXIT_OK
    if args.pair:
        m, n = sorted(args.pair)
        report.section(f"Q({m} x {n})")
        for name, value in best_lower(m, n).as_dict().items():
            if name not in ("m", "n") and value is not None:
                report.item(f"{name}: {value}")
        if (m, n) in table:
            report.item(f"reference gamma: {table[(m, n)]}")
    else:
        frame = bound_census(table)
        frame = frame[frame["m"].between(*args.m_range) & frame["n"].between(*args.n_range)]
        report.section("TABLE")
        report.block(frame.to_string(index=False))
        if args.census:
            summary = census_summary(bound_census(table))
            report.section("CENSUS")
            report.item(f"Bound achieved: {summary.achieved} pairs ({summary.achieved_small_m} with m <= 6)")
            report.item(f"Exceeded by one: {summary.gap1} pairs")
            report.item(f"Exceeded by two: {summary.gap2}")
            report.item(f"Conjectured bound holds everywhere: {summary.conjecture_holds}")
            report.item(f"Proved bounds hold everywhere: {summary.proved_bounds_hold}")
            if summary.matches(EXPECTED_CENSUS):
                report.item("Census matches the expected figures")
            else:
                report.item(f"CENSUS MISMATCH: expected {EXPECTED_CENSUS}")
                code = EXIT_FAILED
    if args.questions:
        drops = monotonicity_violations(table)
        report.section("OPEN QUESTIONS")
        report.item(f"gamma = (m+n-2)/4 with n < 3m+2: {tight_pairs(table)}")
        report.item(f"gamma drops when a row is added: {drops['row']}")
        report.item(f"gamma drops when a column is added: {drops['column']}")
    print(report.render())
    return code


def _strong_report(report: Report, strong: StrongSet) -> None:
    p = strong.params
    report.item(f"(m1, n1, k) = ({p.m1}, {p.n1}, {p.k}); board {p.m} x {p.n}; {strong.size} queens")
    report.item(f"Strict: {strong.strict}; auxiliary squared sum {sum_orth(p)}")
    report.item(f"Doubled-frame points: {list(strong.points)}")
    _queen_lines(report, strong.queens)
    boards = applicable_boards(strong)
    (m_lo, m_hi), (n_lo, n_hi) = boards.m_range, boards.n_range
    shape = "every pair" if boards.is_full_rectangle() else f"{len(boards.pairs)} pairs"
    report.item(f"gamma <= {strong.size} for {shape} with {m_lo} <= m <= {m_hi}, {n_lo} <= n <= {n_hi}")


def cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    report = Report(f"CONSTRUCTION: {args.scheme.upper()}")
    sets: List[QueenSet] = []
    if args.scheme == "strong":
        k = args.k if args.k is not None else largest_feasible_k(args.m1, args.n1)
        if k is None:
            raise InfeasiblePlan(f"no feasible k for (m1, n1) = ({args.m1}, {args.n1})")
        params = central_params(args.m1, args.n1, k)
        if args.prefer_wider:
            params = prefer_wider(params)
        found = centrally_strong_search(params, strict_only=args.strict, limit=args.limit)
        report.section("CENTRALLY STRONG SETS")
        if params.n1 != args.n1:
            report.item(f"Widened to (m1, n1, k) = ({params.m1}, {params.n1}, {params.k})")
        report.item(f"{len(found)} set(s) found")
        if not found:
            raise InfeasiblePlan(f"no centrally strong set for (m1, n1, k) = ({params.m1}, {params.n1}, {params.k})")
        _strong_report(report, found[0])
        sets = [ss.queens for ss in found]
    elif args.scheme == "zero-cover":
        d1, s1, r2 = args.d1, args.s1, args.r2
        report.section("LINE PLAN")
        report.item(f"Auxiliary options (d1, s1, r2): {example1_aux_options()}")
        report.item(f"Using d1={d1}, s1={s1}, r2={r2}")
        covers = zero_cover_search(EXAMPLE1_DIMS, 10, example1_plan(d1, s1, r2), exhaustive=args.exhaustive)
        report.section("0-COVERS")
        report.item(f"{len(covers)} 0-cover(s) realize the plan on {EXAMPLE1_DIMS.label()}")
        if not covers:
            raise InfeasiblePlan("the plan has no 0-cover realization")
        _queen_lines(report, covers[0])
        report.item(f"gamma({EXAMPLE1_DIMS.label()}) <= {len(covers[0])}")
        sets = covers
    else:
        report.section("FAMILY")
        if args.n1 == 1:
            s = family_prop5(args.m1 + 2)
            _queen_lines(report, s)
            report.item(f"gamma({s.dims.label()}) <= {len(s)}")
            sets = [s]
        else:
            strong = family_n1_5(args.m1) if args.n1 == 5 else family_n1_7(args.m1)
            _strong_report(report, strong)
            sets = [strong.queens]

    board = sets[0].dims
    sf = SolutionFile.from_sets(sets, len(sets[0]), "incomplete", generator=f"qdom construct {args.scheme}")
    report.section("OUTPUT")
    report.item(f"Dominates {board.label()}: {all(s.dominates for s in sets)}")
    _write(sf, args, settings, report)
    if args.augment:
        report.section("AUGMENTATION")
        for bigger in augmentation_chain(sets[0], args.augment)[1:]:
            report.item(f"gamma({bigger.dims.label()}) <= {len(bigger)}")
        bounds = family_bounds(sets[0], args.augment)
        report.item(f"{len(bounds)} board sizes bounded by this set and its augmentations")
    print(report.render())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    table = None if args.no_table else Table1Store()
    report = Report("SOLUTION FILE VERIFICATION")
    report.section("FILE")
    report.item(str(args.file))
    try:
        sf = verify_path(args.file, table)
    except VerificationFailed as exc:
        report.section("FAILURES")
        for failure in exc.failures:
            report.item(failure)
        print(report.render())
        return EXIT_FAILED
    report.section("RESULT")
    report.item(f"{sf.dims.label()}: {len(sf.records)} solution(s), gamma {sf.gamma} ({sf.status})")
    report.item("All checks passed")
    print(report.render())
    return EXIT_OK


def cmd_export_html(args: argparse.Namespace, settings: Settings) -> int:
    sf = read_solution_file(args.file)
    path = export_html(sf, args.out or settings.output_dir)
    print(f"HTML appendix written to {path}")
    return EXIT_OK


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def _add_budget_flags(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument("--nodes", type=int, default=settings.node_limit,
                        help=f"node budget (default: {settings.node_limit})")
    parser.add_argument("--seconds", type=float, default=settings.time_limit,
                        help="time budget in seconds (default: none)")


def _add_pruning_flags(parser: argparse.ArgumentParser, bounds: bool = True) -> None:
    if bounds:
        parser.add_argument("--no-bound-pruning", action="store_true", help="skip the lower-bound cutoff")
    parser.add_argument("--no-line-pruning", action="store_true", help="skip the per-line excess cutoff")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qdom",
        description="Queens domination on rectangular boards",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="exact domination number with one witness")
    solve.add_argument("m", type=int)
    solve.add_argument("n", type=int)
    solve.add_argument("--expect", action="store_true", help="compare with the reference table")
    solve.add_argument("--max-queens", type=int, default=None, help="give up above this many queens")
    solve.add_argument("--threads", type=int, default=settings.threads)
    solve.add_argument("--check-oracle", action="store_true",
                       help=f"cross-check with exhaustive search (boards up to {ORACLE_MAX_SQUARES} squares)")
    _add_budget_flags(solve, settings)
    _add_pruning_flags(solve)
    solve.set_defaults(handler=cmd_solve)

    enum = sub.add_parser("enumerate", help="all minimum dominating sets up to isometry")
    enum.add_argument("m", type=int)
    enum.add_argument("n", type=int)
    enum.add_argument("--threads", type=int, default=settings.threads)
    enum.add_argument("--output", "-o", help=f"output directory (default: {settings.output_dir})")
    enum.add_argument("--html", action="store_true", help="also write board diagrams")
    _add_budget_flags(enum, settings)
    _add_pruning_flags(enum)
    enum.set_defaults(handler=cmd_enumerate)

    near = sub.add_parser("near-dominate", help="largest coverage by k queens")
    near.add_argument("m", type=int)
    near.add_argument("n", type=int)
    near.add_argument("k", type=int)
    _add_budget_flags(near, settings)
    _add_pruning_flags(near, bounds=False)
    near.set_defaults(handler=cmd_near)

    bounds = sub.add_parser("bounds", help="lower bounds against the reference table")
    bounds.add_argument("--pair", type=int, nargs=2, metavar=("M", "N"))
    bounds.add_argument("--m-range", type=int, nargs=2, default=(4, 18), metavar=("LO", "HI"))
    bounds.add_argument("--n-range", type=int, nargs=2, default=(4, 18), metavar=("LO", "HI"))
    bounds.add_argument("--census", action="store_true", help="check the gap census")
    bounds.add_argument("--questions", action="store_true", help="tight pairs and monotonicity")
    bounds.set_defaults(handler=cmd_bounds)

    construct = sub.add_parser("construct", help="build dominating sets by construction")
    schemes = construct.add_subparsers(dest="scheme", required=True)
    strong = schemes.add_parser("strong", help="centrally strong sets")
    strong.add_argument("--m1", type=int, required=True)
    strong.add_argument("--n1", type=int, required=True)
    strong.add_argument("--k", type=int, default=None, help="default: largest feasible")
    strong.add_argument("--strict", action="store_true", help="only sets inside the central sub-board")
    strong.add_argument("--limit", type=int, default=None, help="stop after this many sets")
    strong.add_argument("--prefer-wider", action="store_true",
                        help="use (m1, n1 + 2, k + 1) when feasible: same queens, taller board")
    zero = schemes.add_parser("zero-cover", help="0-covers realizing a line plan")
    zero.add_argument("--preset", choices=["example1"], default="example1")
    zero.add_argument("--d1", type=int, default=13)
    zero.add_argument("--s1", type=int, default=7)
    zero.add_argument("--r2", type=int, default=2)
    zero.add_argument("--exhaustive", action="store_true", help="also search asymmetric placements")
    family = schemes.add_parser("family", help="explicit families")
    family.add_argument("--n1", type=int, choices=[1, 5, 7], required=True)
    family.add_argument("--m1", type=int, required=True)
    for scheme in (strong, zero, family):
        scheme.add_argument("--output", "-o", help=f"output directory (default: {settings.output_dir})")
        scheme.add_argument("--html", action="store_true")
        scheme.add_argument("--augment", type=int, default=0, metavar="STEPS",
                            help="also add STEPS corner augmentations")
        scheme.set_defaults(handler=cmd_construct)

    verify = sub.add_parser("verify", help="re-verify a solution file")
    verify.add_argument("file", type=Path)
    verify.add_argument("--no-table", action="store_true", help="skip the reference-table comparison")
    verify.set_defaults(handler=cmd_verify)

    html = sub.add_parser("export-html", help="render a solution file as HTML")
    html.add_argument("file", type=Path)
    html.add_argument("--out", help=f"output directory (default: {settings.output_dir})")
    html.set_defaults(handler=cmd_export_html)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        settings = load_settings()
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    args = build_parser(settings).parse_args(argv)
    configure_logging("DEBUG" if args.verbose else settings.log_level)
    try:
        return args.handler(args, settings)
    except (InfeasiblePlan, InvalidParams) as exc:
        LOGGER.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        LOGGER.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
