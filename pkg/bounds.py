"""
Lower Bounds
Closed-form lower bounds for the queens domination number, the box of a small dominating set,
the region split behind the (m+n-2)/4 bound, and census checks over reference values
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import pandas as pd

from board import QueenSet, Square, attacks, is_independent
from errors import NoEmptyLine, PreconditionNotMet

LOGGER = logging.getLogger(__name__)

SQUARE_BOARD_SOURCE = "proved (cited square-board result)"
SQUARE_BOARD_EXCEPTIONS = frozenset({3, 11})

# Census over the 4 <= m <= n <= 18 reference table, recomputed from the table values.
EXPECTED_CENSUS = {
    "achieved": 41,
    "achieved_small_m": 28,
    "gap1": 75,
    "gap2": [(12, 14), (13, 17), (14, 16), (15, 15)],
}


def ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


def _require_ordered(m: int, n: int) -> None:
    if m > n:
        raise ValueError(f"expected m <= n, got {m}x{n}; transpose the board first")


# ---------------------------------------------------------------------
# Closed-form bounds
# ---------------------------------------------------------------------

def prop1_exact(m: int, n: int) -> Optional[int]:
    """gamma = m once n >= 3m - 2 (each queen covers at most three squares of another row)."""
    _require_ordered(m, n)
    return m if n >= 3 * m - 2 else None


def thm2_lower(m: int, n: int) -> int:
    _require_ordered(m, n)
    return min(m, ceil_div(m + n - 2, 4))


def rvs_lower(n: int) -> int:
    """Square-board bound ceil((n-1)/2)."""
    return ceil_div(n - 1, 2)


def square_board_lower(n: int) -> int:
    """ceil(n/2) except for n in {3, 11}, where ceil((n-1)/2) is attained."""
    if n in SQUARE_BOARD_EXCEPTIONS:
        return rvs_lower(n)
    return ceil_div(n, 2)


def conjecture_lower(m: int, n: int) -> int:
    """min{m-1, floor(n/2)-1}; reported only, never used for pruning."""
    _require_ordered(m, n)
    return min(m - 1, n // 2 - 1)


@dataclass
class BoundReport:
    """Every applicable bound for one board"""
    m: int
    n: int
    prop1: Optional[int]
    thm2: int
    rvs: Optional[int]
    square_board: Optional[int]
    conjecture: int
    best_proved: int
    box_bound: Optional[int] = None
    provenance: Dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, object]:
        return {
            "m": self.m,
            "n": self.n,
            "prop1": self.prop1,
            "thm2": self.thm2,
            "rvs": self.rvs,
            "square_board": self.square_board,
            "box_bound": self.box_bound,
            "conjecture": self.conjecture,
            "best_proved": self.best_proved,
        }


def best_lower(m: int, n: int, witness: Optional[QueenSet] = None) -> BoundReport:
    """
    Aggregate the proved lower bounds for Q(m x n).

    Args:
        m, n: board size with m <= n
        witness: optional dominating set; when its box is defined the box bound for
            that set is reported (it bounds the witness, not gamma)

    Returns:
        BoundReport with best_proved = max of the proved bounds
    """
    _require_ordered(m, n)
    prop1 = prop1_exact(m, n)
    thm2 = thm2_lower(m, n)
    rvs = rvs_lower(n) if m == n else None
    square = square_board_lower(n) if m == n else None
    proved = [thm2] + [value for value in (prop1, rvs, square) if value is not None]
    provenance = {"thm2": "proved", "conjecture": "open question, not used for pruning"}
    if prop1 is not None:
        provenance["prop1"] = "exact"
    if rvs is not None:
        provenance["rvs"] = "proved"
    if square is not None:
        provenance["square_board"] = SQUARE_BOARD_SOURCE
    report = BoundReport(
        m=m,
        n=n,
        prop1=prop1,
        thm2=thm2,
        rvs=rvs,
        square_board=square,
        conjecture=conjecture_lower(m, n),
        best_proved=max(proved),
        provenance=provenance,
    )
    if witness is not None:
        try:
            box = box_of(witness)
            report.box_bound = box_bound(m, n, box.m_prime, box.n_prime)
        except NoEmptyLine:
            LOGGER.debug("witness %s has no box; box bound skipped", witness)
    return report


# ---------------------------------------------------------------------
# Box of a small dominating set
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Box:
    """Sub-board spanned by the extreme empty columns (a, b) and rows (c, d)"""
    a: int
    b: int
    c: int
    d: int

    @property
    def m_prime(self) -> int:
        return self.d - self.c + 1

    @property
    def n_prime(self) -> int:
        return self.b - self.a + 1

    def border(self) -> List[Square]:
        """Edge squares of the box, row-major."""
        squares = set()
        for x in range(self.a, self.b + 1):
            squares.add(Square(x, self.c))
            squares.add(Square(x, self.d))
        for y in range(self.c, self.d + 1):
            squares.add(Square(self.a, y))
            squares.add(Square(self.b, y))
        return sorted(squares)


def box_of(s: QueenSet) -> Box:
    m, n = s.dims.m, s.dims.n
    used_columns = {sq.x for sq in s}
    used_rows = {sq.y for sq in s}
    empty_columns = [x for x in range(1, n + 1) if x not in used_columns]
    empty_rows = [y for y in range(1, m + 1) if y not in used_rows]
    if len(empty_columns) < 2:
        raise NoEmptyLine(f"{s} leaves {len(empty_columns)} empty column(s); a box needs two")
    if len(empty_rows) < 2:
        raise NoEmptyLine(f"{s} leaves {len(empty_rows)} empty row(s); a box needs two")
    return Box(a=empty_columns[0], b=empty_columns[-1], c=empty_rows[0], d=empty_rows[-1])


def box_border(s: QueenSet) -> List[Square]:
    return box_of(s).border()


@dataclass
class RegionSplit:
    """Queens by region around the box; R corner regions, S side regions, C inside"""
    box: Box
    regions: Dict[str, int]
    inequalities: Dict[str, bool]

    @property
    def r(self) -> int:
        return sum(self.regions[name] for name in ("nw", "ne", "sw", "se"))

    @property
    def s(self) -> int:
        return sum(self.regions[name] for name in ("n", "e", "s", "w"))

    @property
    def c(self) -> int:
        return self.regions["inside"]

    @property
    def inequality_holds(self) -> bool:
        return self.inequalities["final"]


def _region(sq: Square, box: Box) -> str:
    horizontal = "w" if sq.x < box.a else ("e" if sq.x > box.b else "")
    vertical = "s" if sq.y < box.c else ("n" if sq.y > box.d else "")
    return (vertical + horizontal) or "inside"


def region_split(s: QueenSet) -> RegionSplit:
    box = box_of(s)
    m, n = s.dims.m, s.dims.n
    regions = {name: 0 for name in ("nw", "n", "ne", "e", "se", "s", "sw", "w", "inside")}
    for sq in s:
        regions[_region(sq, box)] += 1
    r = regions["nw"] + regions["ne"] + regions["sw"] + regions["se"]
    side = regions["n"] + regions["e"] + regions["s"] + regions["w"]
    inside = regions["inside"]
    width, height = box.b - box.a, box.d - box.c
    inequalities = {
        "left_columns": regions["sw"] + regions["w"] + regions["nw"] >= box.a - 1,
        "right_columns": regions["se"] + regions["e"] + regions["ne"] >= n - box.b,
        "lower_rows": regions["sw"] + regions["s"] + regions["se"] >= box.c - 1,
        "upper_rows": regions["nw"] + regions["n"] + regions["ne"] >= m - box.d,
        "outer_lines": 2 * r + side >= m + n - 2 - height - width,
        "border_coverage": 2 * r + 6 * side + 8 * inside >= 2 * height + 2 * width,
        "combined": 6 * r + 8 * side + 8 * inside >= 2 * (m + n - 2),
        "final": 8 * len(s) >= 2 * (m + n - 2 + r),
    }
    return RegionSplit(box=box, regions=regions, inequalities=inequalities)


def box_bound(m: int, n: int, m_prime: int, n_prime: int) -> int:
    """Lower bound on |D| from the box dimensions of D."""
    _require_ordered(m, n)
    if m_prime > n_prime:
        return ceil_div(n, 2)
    return max(0, ceil_div(n - 1 - (n_prime - m_prime), 2))


@dataclass
class Corollary3Report:
    preconditions: Dict[str, bool]
    conditions: Dict[str, bool]
    border_counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())


def corollary3_check(s: QueenSet, enforce_preconditions: bool = True) -> Corollary3Report:
    """
    Check the structure forced on a minimum dominating set of size (m+n-2)/4:
    at most m-2 queens, every box-border square covered exactly once, no two queens attacking.
    """
    m, n = s.dims.m, s.dims.n
    preconditions = {
        "m_le_n": m <= n,
        "dominates": s.dominates,
        "n_below_3m_plus_2": n < 3 * m + 2,
        "size_is_quarter_perimeter": 4 * len(s) == m + n - 2,
    }
    if enforce_preconditions:
        for name, ok in preconditions.items():
            if not ok:
                raise PreconditionNotMet(name, f"{s}")
    conditions = {"size_at_most_m_minus_2": len(s) <= m - 2}
    counts: Dict[Tuple[int, int], int] = {}
    try:
        box = box_of(s)
        for sq in box.border():
            counts[sq.as_pair()] = sum(1 for q in s if q == sq or attacks(q, sq))
        conditions["border_covered_once"] = all(count == 1 for count in counts.values())
    except NoEmptyLine:
        conditions["border_covered_once"] = False
    conditions["independent"] = is_independent(s)
    return Corollary3Report(preconditions=preconditions, conditions=conditions, border_counts=counts)


# ---------------------------------------------------------------------
# Census over reference values
# ---------------------------------------------------------------------

def bound_census(table: Mapping[Tuple[int, int], int]) -> pd.DataFrame:
    """One row per (m, n) with gamma, thm2, gap, conjecture and best proved bound."""
    rows = []
    for (m, n), gamma in sorted(table.items()):
        thm2 = thm2_lower(m, n)
        rows.append({
            "m": m,
            "n": n,
            "gamma": gamma,
            "thm2": thm2,
            "gap": gamma - thm2,
            "conjecture": conjecture_lower(m, n),
            "best_proved": best_lower(m, n).best_proved,
        })
    return pd.DataFrame(rows, columns=["m", "n", "gamma", "thm2", "gap", "conjecture", "best_proved"])


@dataclass
class CensusSummary:
    achieved: int
    achieved_small_m: int
    gap1: int
    gap2: List[Tuple[int, int]]
    larger_gaps: List[Tuple[int, int]]
    conjecture_holds: bool
    proved_bounds_hold: bool

    def matches(self, expected: Mapping[str, object] = None) -> bool:
        expected = expected or EXPECTED_CENSUS
        return (
            self.achieved == expected["achieved"]
            and self.achieved_small_m == expected["achieved_small_m"]
            and self.gap1 == expected["gap1"]
            and self.gap2 == list(expected["gap2"])
            and not self.larger_gaps
            and self.conjecture_holds
            and self.proved_bounds_hold
        )


def census_summary(frame: pd.DataFrame) -> CensusSummary:
    achieved = frame[frame["gap"] == 0]
    pairs = lambda sub: [(int(m), int(n)) for m, n in zip(sub["m"], sub["n"])]
    return CensusSummary(
        achieved=len(achieved),
        achieved_small_m=int((achieved["m"] <= 6).sum()),
        gap1=int((frame["gap"] == 1).sum()),
        gap2=pairs(frame[frame["gap"] == 2]),
        larger_gaps=pairs(frame[frame["gap"] > 2]),
        conjecture_holds=bool((frame["conjecture"] <= frame["gamma"]).all()),
        proved_bounds_hold=bool((frame["best_proved"] <= frame["gamma"]).all()),
    )


def tight_pairs(table: Mapping[Tuple[int, int], int]) -> List[Tuple[int, int]]:
    """Pairs with gamma = (m+n-2)/4 and n < 3m+2."""
    return sorted((m, n) for (m, n), gamma in table.items() if 4 * gamma == m + n - 2 and n < 3 * m + 2)


def monotonicity_violations(table: Mapping[Tuple[int, int], int]) -> Dict[str, List[Tuple[int, int]]]:
    """Pairs where gamma drops when a row (m+1) or a column (n+1) is added."""
    row_drops, column_drops = [], []
    for (m, n), gamma in sorted(table.items()):
        taller = table.get((m + 1, n))
        if taller is not None and m + 1 <= n and taller < gamma:
            row_drops.append((m, n))
        wider = table.get((m, n + 1))
        if wider is not None and wider < gamma:
            column_drops.append((m, n))
    return {"row": row_drops, "column": column_drops}


if __name__ == "__main__":
    for m, n in ((4, 4), (8, 11), (11, 11), (18, 18)):
        print(best_lower(m, n).as_dict())
