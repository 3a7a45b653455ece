from fractions import Fraction

import pytest

from treehost import (best_case_height, bracket_cost_bound, format_table,
                      gen, lb_exact, lb_instance, lb_simple, table1)

from _boundtable_expected import EXPECTED_ROWS


@pytest.mark.parametrize("c,delta,h", [
    (9, 3, 2),
    (1, 3, 1),
    (3, 3, 1),
    (0, 3, 0),
    (127, 3, 6),
    (12, 4, 2),
])
def test_best_case_height(c, delta, h):
    assert best_case_height(c, delta) == h


def test_height_rejects_bad_delta():
    with pytest.raises(ValueError):
        best_case_height(5, 2)


@pytest.mark.parametrize("c,val", [(9, 15), (1, 1), (127, 591), (64, 242),
                                   (100, 429), (0, 0)])
def test_lb_exact_anchor_values(c, val):
    assert lb_exact(c, 3) == val


def test_lb_exact_fractional_for_larger_delta():
    v = lb_exact(30, 5)
    assert isinstance(v, Fraction)
    h = best_case_height(30, 5)
    assert v == Fraction(30 * h) + Fraction(5 * h, 3) - Fraction(5 * (4 ** h - 1), 9)


def test_lb_simple_values():
    assert lb_simple(128, 3) == pytest.approx(128 * 3)
    assert lb_simple(1024, 3) == pytest.approx(1024 * 6)
    assert lb_simple(6, 3) < 0  # boundary case is vacuous but legal
    with pytest.raises(ValueError):
        lb_simple(5, 3)


def test_lb_simple_never_exceeds_lb_exact():
    for delta in (3, 4, 5):
        lo = delta * (delta - 1)
        for c in range(lo, 10_001):
            assert lb_simple(c, delta) <= float(lb_exact(c, delta))


def test_lb_instance_shapes():
    path = gen("path", 10)
    assert lb_instance(path) == 9
    star = gen("star", 10)  # center has 9 children
    assert lb_instance(star) == 15
    single = gen("path", 1)
    assert lb_instance(single) == 0


def test_lb_instance_floors_fractions():
    star = gen("star", 10)
    v = lb_instance(star, delta=5)
    assert isinstance(v, int)
    assert v >= 9


def test_table_round_trip_rows():
    rows = table1()
    assert len(rows) == 127
    by_c = {r.c: r for r in rows}
    assert (by_c[2].lb, by_c[2].ub, by_c[2].ratio_text) == (2, 4, "2")
    assert (by_c[9].lb, by_c[9].ub, by_c[9].ratio_text) == (15, 45, "3")
    assert (by_c[64].lb, by_c[64].ub, by_c[64].ratio_text) == (242, 448, "1.85")
    assert (by_c[100].lb, by_c[100].ub, by_c[100].ratio_text) == (429, 800, "1.86")
    assert (by_c[127].lb, by_c[127].ub, by_c[127].ratio_text) == (591, 1016, "1.71")


def test_table_matches_frozen_rows():
    rows = table1()
    got = [(r.c, r.lb, r.ub, r.ratio_text) for r in rows]
    assert got == EXPECTED_ROWS


def test_ratio_truncation_invariant():
    for r in table1():
        hund = r.ratio_hundredths
        assert hund * r.lb <= 100 * r.ub < (hund + 1) * r.lb


def test_upper_bound_within_three_times_lower():
    for r in table1():
        assert r.ub <= 3 * r.lb


def test_bracket_cost_bound_values():
    assert bracket_cost_bound(0) == 0
    assert bracket_cost_bound(1) == 1
    assert bracket_cost_bound(9) == 45
    assert bracket_cost_bound(128) == 128 * 8


def test_format_table_layouts():
    rows = table1()
    tsv = format_table(rows, "tsv")
    lines = tsv.strip().splitlines()
    assert lines[0] == "c\tLB\tUB\tRatio"
    assert len(lines) == 128
    assert lines[9] == "9\t15\t45\t3"
    text = format_table(rows, "text")
    assert "591" in text and "1016" in text and "1.71" in text
    # three column groups of 43 rows plus a header line
    assert len(text.strip().splitlines()) == 44
