"""
Lower-bound tests: closed forms, box structure and the census over the reference table
"""

import pytest

from bounds import (
    EXPECTED_CENSUS,
    best_lower,
    bound_census,
    box_bound,
    box_border,
    box_of,
    census_summary,
    conjecture_lower,
    corollary3_check,
    monotonicity_violations,
    prop1_exact,
    region_split,
    square_board_lower,
    thm2_lower,
    tight_pairs,
)
from board import QueenSet, Square
from conftest import column_set
from errors import NoEmptyLine, PreconditionNotMet
from solver import enumerate_min


def test_closed_forms():
    assert thm2_lower(10, 17) == 7
    assert thm2_lower(4, 4) == 2
    assert prop1_exact(4, 10) == 4
    assert prop1_exact(4, 9) is None
    assert square_board_lower(11) == 5
    assert square_board_lower(12) == 6
    assert conjecture_lower(8, 11) == 4


def test_bounds_require_m_at_most_n():
    with pytest.raises(ValueError):
        thm2_lower(11, 8)


def test_best_lower_on_square_boards():
    report = best_lower(11, 11)
    assert report.thm2 == 5
    assert report.rvs == 5
    assert report.square_board == 5
    assert report.best_proved == 5
    assert "square_board" in report.provenance
    assert report.as_dict()["conjecture"] == 4


def test_best_lower_reports_box_bound_of_a_witness(eleven_set):
    report = best_lower(11, 11, witness=eleven_set)
    assert report.box_bound == 5


def test_proved_bounds_never_exceed_reference_values(table):
    for (m, n), gamma in table.as_mapping().items():
        assert best_lower(m, n).best_proved <= gamma, (m, n)
        assert conjecture_lower(m, n) <= gamma, (m, n)


def test_box_of_eleven_board_set_is_the_whole_board(eleven_set):
    box = box_of(eleven_set)
    assert (box.a, box.b, box.c, box.d) == (1, 11, 1, 11)
    assert (box.m_prime, box.n_prime) == (11, 11)
    border = box_border(eleven_set)
    assert len(border) == 40
    assert Square(1, 1) in border and Square(6, 6) not in border


def test_box_needs_two_empty_lines():
    with pytest.raises(NoEmptyLine):
        box_of(column_set(4, 4))


def test_region_split_meets_the_final_inequality(eleven_set):
    split = region_split(eleven_set)
    assert split.c == 5
    assert split.r == 0 and split.s == 0
    assert split.inequality_holds
    assert all(split.inequalities.values())


def test_box_bound():
    assert box_bound(11, 11, 11, 11) == 5
    assert box_bound(11, 13, 12, 11) == 7
    assert box_bound(8, 11, 6, 9) == 4


def test_tight_structure_of_eleven_board_set(eleven_set):
    report = corollary3_check(eleven_set)
    assert all(report.preconditions.values())
    assert report.passed
    assert set(report.border_counts.values()) == {1}


def test_structure_check_refuses_wrong_sizes():
    with pytest.raises(PreconditionNotMet) as info:
        corollary3_check(column_set(8, 11))
    assert info.value.condition == "size_is_quarter_perimeter"
    report = corollary3_check(column_set(8, 11), enforce_preconditions=False)
    assert not report.passed


def test_census_over_reference_table(table):
    frame = bound_census(table.as_mapping())
    assert len(frame) == 120
    summary = census_summary(frame)
    assert summary.achieved == EXPECTED_CENSUS["achieved"]
    assert summary.achieved_small_m == EXPECTED_CENSUS["achieved_small_m"]
    assert summary.gap1 == EXPECTED_CENSUS["gap1"]
    assert summary.gap2 == [(12, 14), (13, 17), (14, 16), (15, 15)]
    assert summary.larger_gaps == []
    assert summary.matches()


def test_tight_pairs_and_monotonicity(table):
    values = table.as_mapping()
    assert tight_pairs(values) == [(11, 11)]
    assert monotonicity_violations(values) == {"row": [(8, 11)], "column": []}


def test_census_flags_a_tampered_table(table):
    values = table.as_mapping()
    values[(4, 4)] = 1
    summary = census_summary(bound_census(values))
    assert not summary.proved_bounds_hold
    assert not summary.matches()


@pytest.mark.slow
def test_border_structure_of_first_eleven_by_twelve_classes():
    """The border is covered once, yet the sets are not independent"""
    outcome = enumerate_min((11, 12))
    assert outcome.exact
    assert outcome.gamma == 6
    assert len(outcome.classes) == 18
    for cls in outcome.classes[:4]:
        report = corollary3_check(cls.representative, enforce_preconditions=False)
        assert report.conditions["border_covered_once"]
        assert not report.conditions["independent"]


@pytest.mark.slow
@pytest.mark.parametrize("dims", [(9, 9), (7, 12)])
def test_region_inequalities_hold_on_every_minimum_set(dims):
    outcome = enumerate_min(dims)
    assert outcome.exact
    for cls in outcome.classes:
        for s in cls.members:
            split = region_split(s)
            assert all(split.inequalities.values()), (s, split.inequalities)
