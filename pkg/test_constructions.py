"""
Construction tests: line plans and 0-covers, centrally strong sets and the explicit families
"""

from dataclasses import replace

import pytest

from board import LineId, LineKind, QueenSet, Square
from conftest import EXAMPLE2_POINTS, NINE_SIX_TWO_POINTS
from constructions import (
    EXAMPLE1_DIMS,
    applicable_boards,
    below_half_width,
    central_params,
    centrally_strong_search,
    check_plan,
    detect_centrally_strong,
    example1_aux_options,
    example1_plan,
    family_bounds,
    family_n1_5,
    family_n1_7,
    family_prop5,
    is_orthodox,
    is_zero_cover,
    largest_feasible_k,
    linear_residuals,
    make_strong_set,
    place_in_window,
    prefer_wider,
    quadratic_residual,
    realized_plan,
    strong_violations,
    sum_orth,
    zero_cover_search,
)
from errors import InfeasiblePlan, InvalidM1, InvalidParams, InvalidParity, NegativeAuxCount


# ---------------------------------------------------------------------
# 0-covers
# ---------------------------------------------------------------------

def test_example1_set_is_a_zero_cover(example1_set):
    assert len(example1_set) == 10
    assert example1_set.dominates
    assert is_orthodox(example1_set)
    assert is_orthodox(example1_set, origin=(9, 7))
    assert not is_orthodox(example1_set, origin=(10, 7))
    assert is_zero_cover(example1_set) == Square(9, 7)


def test_non_orthodox_sets_are_not_zero_covers():
    assert not is_orthodox(QueenSet.of((4, 6), [(2, 2)]))
    assert is_zero_cover(QueenSet.of((3, 6), [(2, 2), (5, 2)])) is None


def test_example1_plan_satisfies_both_constraints():
    plan = example1_plan()
    assert plan.counts() == {kind: 10 for kind in LineKind}
    assert linear_residuals(plan) == (0, 0)
    assert quadratic_residual(plan) == 0
    check_plan(plan)


def test_auxiliary_options_for_example1():
    assert example1_aux_options() == [(7, 13, 2), (11, 11, 4), (13, 7, 2)]
    for d1, s1, r2 in example1_aux_options():
        check_plan(example1_plan(d1, s1, r2))


def test_broken_plans_are_infeasible():
    with pytest.raises(InfeasiblePlan, match="quadratic"):
        check_plan(example1_plan(13, 7, 4))
    plan = example1_plan()
    shifted = tuple(LineId(LineKind.ROW, 4) if line == LineId(LineKind.ROW, 0) else line
                    for line in plan.auxiliary_lines)
    with pytest.raises(InfeasiblePlan, match="linear"):
        check_plan(replace(plan, auxiliary_lines=shifted))
    with pytest.raises(InfeasiblePlan):
        zero_cover_search(EXAMPLE1_DIMS, 10, replace(plan, auxiliary_lines=shifted))


def test_plan_size_must_match_the_request():
    with pytest.raises(InfeasiblePlan):
        zero_cover_search(EXAMPLE1_DIMS, 9, example1_plan())


def test_plan_search_finds_example1(example1_set):
    found = zero_cover_search(EXAMPLE1_DIMS, 10, example1_plan(), exhaustive=False)
    assert example1_set in found
    for s in found:
        assert s.dominates
        assert len(s) == 10
        assert is_zero_cover(s) is not None


def test_every_zero_cover_found_realizes_its_plan():
    plan = example1_plan()
    found = zero_cover_search(EXAMPLE1_DIMS, 10, plan, exhaustive=False)
    assert found
    for s in found:
        realized = realized_plan(s, plan.frame)
        check_plan(realized)
        assert all(realized.numbers(kind) == plan.numbers(kind) for kind in LineKind)


# ---------------------------------------------------------------------
# Centrally strong sets
# ---------------------------------------------------------------------

def test_central_params():
    params = central_params(7, 4, 1)
    assert (params.m, params.n, params.g) == (13, 16, 8)
    assert central_params(9, 6, 2).dims.label() == "17x20"
    assert params.required_diagonals() == [-7, -5, -3, -1, 1, 3, 5, 7]
    assert params.columns() == [-3, -1, 1, 3]


def test_central_params_validation():
    with pytest.raises(InvalidParity):
        central_params(4, 4, 0)
    with pytest.raises(NegativeAuxCount):
        central_params(5, 5, 3)
    with pytest.raises(InvalidParams):
        central_params(3, 5, 0)
    with pytest.raises(InvalidParams):
        central_params(5, 3, -1)


@pytest.mark.parametrize("triple,expected", [((7, 4, 1), 36), ((9, 6, 2), 20), ((5, 5, 1), 32), ((6, 1, 0), 0)])
def test_sum_orth(triple, expected):
    assert sum_orth(central_params(*triple)) == expected


def test_example2_set(example2_set):
    params = central_params(7, 4, 1)
    assert strong_violations(EXAMPLE2_POINTS, params) == []
    assert example2_set.dominates
    assert len(example2_set) == 8
    assert detect_centrally_strong(example2_set) == params


def test_example2_is_found_by_the_strict_search():
    found = centrally_strong_search(central_params(7, 4, 1), strict_only=True)
    assert frozenset(EXAMPLE2_POINTS) in {frozenset(ss.points) for ss in found}
    assert all(ss.strict and ss.queens.dominates for ss in found)


def test_nine_six_two_set():
    params = central_params(9, 6, 2)
    assert strong_violations(NINE_SIX_TWO_POINTS, params) == []
    misprint = [p if p != (-1, 8) else (-1, 6) for p in NINE_SIX_TWO_POINTS]
    assert strong_violations(misprint, params)
    ss = make_strong_set(NINE_SIX_TWO_POINTS, params)
    assert ss.strict
    assert ss.queens.dominates


def test_nine_six_two_set_dominates_a_whole_range_of_boards():
    ss = make_strong_set(NINE_SIX_TWO_POINTS, central_params(9, 6, 2))
    covered = applicable_boards(ss)
    assert covered.m_range == (9, 17)
    assert covered.n_range == (6, 20)
    assert covered.is_full_rectangle()
    assert (12, 14) in covered


def test_strict_search_finds_the_nine_six_two_set():
    found = centrally_strong_search(central_params(9, 6, 2), strict_only=True)
    assert frozenset(NINE_SIX_TWO_POINTS) in {frozenset(ss.points) for ss in found}


@pytest.mark.parametrize("m1", [1, 3, 4, 6])
def test_single_column_strong_sets(m1):
    params = central_params(m1, 1, 0)
    found = centrally_strong_search(params)
    columns = [ss for ss in found if {x for x, _ in ss.points} == {0}]
    assert len(columns) == 1
    assert len(columns[0].queens) == m1
    assert all(ss.queens.dominates for ss in found)


@pytest.mark.parametrize("triple,strict,limit", [((7, 4, 1), False, 40), ((5, 5, 1), False, 40), ((9, 6, 2), True, None)])
def test_search_results_keep_the_auxiliary_bookkeeping(triple, strict, limit):
    params = central_params(*triple)
    found = centrally_strong_search(params, strict_only=strict, limit=limit)
    assert found
    for ss in found:
        assert strong_violations(ss.points, params) == []
        assert ss.size == params.g


@pytest.mark.parametrize("triple", [(7, 4, 1), (5, 5, 1), (9, 6, 2)])
def test_strong_sets_with_wide_sub_boards_use_half_the_width(triple):
    params = central_params(*triple)
    found = centrally_strong_search(params, limit=20)
    assert found
    for ss in found:
        assert 2 * ss.size >= params.n
        assert not below_half_width(ss.queens)


def test_largest_feasible_k():
    assert largest_feasible_k(7, 4) == 1
    assert largest_feasible_k(5, 1) == 0
    assert largest_feasible_k(5, 5) == 1


def test_prefer_wider_keeps_infeasible_params():
    params = central_params(5, 1, 0)
    assert prefer_wider(params) == params


def test_detection_rejects_other_sets(eleven_set):
    assert detect_centrally_strong(eleven_set) is None
    assert detect_centrally_strong(QueenSet.of((3, 6), [(2, 2), (5, 2)])) is None


def test_window_placement(example2_set):
    window = place_in_window(example2_set, 12, 15)
    assert window.dims.label() == "12x15"
    assert len(window) == 8
    bounds = family_bounds(example2_set, augment_steps=1)
    assert bounds[(13, 16)] == 8
    assert bounds[(14, 17)] == 9


def test_constructions_never_drop_below_half_width(example1_set, example2_set):
    assert not below_half_width(example1_set)
    assert not below_half_width(example2_set)
    assert not below_half_width(family_n1_7(9).queens)


# ---------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------

@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 9, 10])
def test_central_column_family(m, table):
    s = family_prop5(m)
    assert s.dims.label() == f"{m}x{2 * m - 3}"
    assert len(s) == m - 2
    assert s.dominates
    if table.get(m, 2 * m - 3) is not None:
        assert table.get(m, 2 * m - 3) == m - 2


def test_central_column_family_needs_three_rows():
    with pytest.raises(InvalidM1):
        family_prop5(2)


@pytest.mark.parametrize("m1", [5, 7, 9, 11, 13])
def test_n1_5_family(m1):
    ss = family_n1_5(m1)
    assert ss.size == m1 + 2
    assert ss.strict
    assert strong_violations(ss.points, ss.params) == []
    assert ss.queens.dominates


@pytest.mark.parametrize("m1", [5, 7, 9, 11, 13])
def test_n1_5_family_covers_its_whole_range(m1):
    """2i+1 queens dominate every board with 2i-1 <= m <= 2i+7 and 5 <= n <= 4i+1, i = (m1+1)/2"""
    i = (m1 + 1) // 2
    covered = applicable_boards(family_n1_5(m1))
    for m in range(2 * i - 1, 2 * i + 8):
        for n in range(5, 4 * i + 2):
            assert (m, n) in covered, (m, n)


def test_n1_5_family_smallest_member_is_the_thirteen_board_set():
    ss = family_n1_5(5)
    assert ss.queens.dims.label() == "13x13"
    assert len(ss.queens) == 7
    assert sorted(ss.unit_points()) == sorted([(0, 0), (-1, 2), (1, -2), (0, 2), (0, -2), (2, 1), (-2, -1)])


@pytest.mark.parametrize("m1,label", [(7, "17x17"), (9, "19x21"), (11, "21x25")])
def test_n1_7_family(m1, label):
    ss = family_n1_7(m1)
    assert ss.queens.dims.label() == label
    assert ss.size == m1 + 2
    assert strong_violations(ss.points, ss.params) == []
    assert ss.queens.dominates


@pytest.mark.extended
@pytest.mark.parametrize("m1", [13, 15, 17, 19, 21])
def test_n1_7_family_larger_members(m1):
    ss = family_n1_7(m1)
    assert ss.queens.dominates


def test_families_reject_bad_sizes():
    with pytest.raises(InvalidM1):
        family_n1_5(6)
    with pytest.raises(InvalidM1):
        family_n1_7(5)
