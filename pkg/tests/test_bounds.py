"""Threshold functions, closed forms, and the settled-value lookup.

The two threshold tables are frozen here from the published values for
2 <= r <= 20; everything else is property-checked over wide ranges with
exact rational arithmetic.
"""

from fractions import Fraction

import pytest

from starcut.bounds import (
    EXACT,
    NO_CUT,
    UNKNOWN,
    OutOfValidity,
    ROutOfRange,
    conjectured_value,
    kappa_g_formula,
    known_value,
    min_guaranteed_dim,
    neighborhood_bound_formula,
    render_ratio,
    tables_tsv,
    threshold_fq,
    threshold_q,
)
from starcut.graphs import FQ, Q

THRESHOLD_Q_TABLE = {
    2: Fraction(5), 3: Fraction(5), 4: Fraction(6), 5: Fraction(6),
    6: Fraction(7), 7: Fraction(10), 8: Fraction(31, 3), 9: Fraction(15),
    10: Fraction(15), 11: Fraction(21), 12: Fraction(21), 13: Fraction(28),
    14: Fraction(28), 15: Fraction(36), 16: Fraction(36), 17: Fraction(45),
    18: Fraction(45), 19: Fraction(55), 20: Fraction(55),
}

THRESHOLD_FQ_TABLE = {
    2: Fraction(6), 3: Fraction(6), 4: Fraction(6), 5: Fraction(6),
    6: Fraction(6), 7: Fraction(9), 8: Fraction(28, 3), 9: Fraction(14),
    10: Fraction(14), 11: Fraction(20), 12: Fraction(20), 13: Fraction(27),
    14: Fraction(27), 15: Fraction(35), 16: Fraction(35), 17: Fraction(44),
    18: Fraction(44), 19: Fraction(54), 20: Fraction(54),
}


def test_threshold_tables_reproduced_entry_for_entry():
    for r, want in THRESHOLD_Q_TABLE.items():
        assert threshold_q(r) == want, r
    for r, want in THRESHOLD_FQ_TABLE.items():
        assert threshold_fq(r) == want, r


def test_threshold_out_of_range():
    with pytest.raises(ROutOfRange):
        threshold_q(1)
    with pytest.raises(ROutOfRange):
        threshold_fq(0)


def test_threshold_q_monotone_and_integral_except_eight():
    for r in range(2, 200):
        assert threshold_q(r + 1) >= threshold_q(r)
    for r in range(2, 201):
        assert (threshold_q(r).denominator == 1) == (r != 8), r


def test_threshold_q_odd_pair_closed_form():
    for r in range(9, 200, 2):
        want = Fraction(r * r + 4 * r + 3, 8)
        assert threshold_q(r) == want
        assert threshold_q(r + 1) == want


def test_threshold_q_strictly_exceeds_r():
    for r in range(2, 201):
        assert threshold_q(r) > r


def test_threshold_fq_at_least_r_and_odd_pair_form():
    for r in range(2, 201):
        assert threshold_fq(r) >= r
    for r in range(2, 200):
        assert threshold_fq(r + 1) >= threshold_fq(r)
    for r in range(2, 201):
        assert (threshold_fq(r).denominator == 1) == (r != 8), r
    for r in range(9, 200, 2):
        want = Fraction(r * r + 4 * r - 5, 8)
        assert threshold_fq(r) == want
        assert threshold_fq(r + 1) == want


def test_min_guaranteed_dim_examples():
    assert min_guaranteed_dim(Q, 8) == 11
    assert min_guaranteed_dim(Q, 9) == 16
    assert min_guaranteed_dim(FQ, 9) == 15
    assert min_guaranteed_dim(Q, 2) == 6
    assert min_guaranteed_dim(FQ, 2) == 7


def test_min_guaranteed_dim_is_strictly_above_threshold():
    for fam in (Q, FQ):
        for r in range(2, 60):
            t = threshold_q(r) if fam == Q else threshold_fq(r)
            d = min_guaranteed_dim(fam, r)
            assert d > t >= d - 1


# ----------------------------------------------------------------------
# closed forms


def test_kappa_g_formula_examples():
    assert kappa_g_formula(Q, 6, 3) == 15
    assert kappa_g_formula(Q, 6, 6) == 15
    assert kappa_g_formula(FQ, 7, 0) == 8
    assert kappa_g_formula(Q, 4, 0) == 4
    assert kappa_g_formula(Q, 4, 1) == 6


def test_kappa_g_formula_validity_window():
    with pytest.raises(OutOfValidity):
        kappa_g_formula(Q, 3, 0)
    with pytest.raises(OutOfValidity):
        kappa_g_formula(Q, 5, 6)
    with pytest.raises(OutOfValidity):
        kappa_g_formula(FQ, 6, 0)
    with pytest.raises(OutOfValidity):
        kappa_g_formula(FQ, 8, 10)


def test_kappa_g_formula_branches_agree_at_the_seam():
    # the linear-quadratic branch evaluated at the first constant-branch
    # point equals the constant
    for n in range(4, 65):
        g = n - 3
        branch1 = (g + 1) * n - 2 * g - g * (g - 1) // 2
        assert branch1 == n * (n - 1) // 2 == kappa_g_formula(Q, n, g)
    for n in range(7, 65):
        g = n - 2
        branch1 = (g + 1) * (n + 1) - 2 * g - g * (g - 1) // 2
        assert branch1 == n * (n + 1) // 2 == kappa_g_formula(FQ, n, g)


def test_neighborhood_bound_examples():
    assert neighborhood_bound_formula(Q, 4, 1) == 6
    assert neighborhood_bound_formula(Q, 5, 3) == 11
    assert neighborhood_bound_formula(FQ, 5, 1) == 10
    with pytest.raises(OutOfValidity):
        neighborhood_bound_formula(FQ, 5, 0)
    with pytest.raises(OutOfValidity):
        neighborhood_bound_formula(FQ, 4, 1)
    with pytest.raises(OutOfValidity):
        neighborhood_bound_formula(Q, 3, 1)


# ----------------------------------------------------------------------
# settled values


def test_known_value_examples():
    kv = known_value(Q, 3, 2, "structure")
    assert kv.kind == EXACT and kv.value == 2
    kv = known_value(Q, 6, 4, "substructure")
    assert kv.kind == EXACT and kv.value == 3
    assert known_value(Q, 8, 7).kind == UNKNOWN
    kv = known_value(FQ, 7, 3)
    assert kv.kind == EXACT and kv.value == 4


def test_known_value_edge_cases():
    assert known_value(Q, 2, 2, "structure").kind == NO_CUT
    assert known_value(Q, 2, 2, "substructure").kind == UNKNOWN
    assert known_value(Q, 2, 1).kind == UNKNOWN
    assert known_value(Q, 5, 1).value == 4
    assert known_value(FQ, 7, 1).value == 7
    assert known_value(FQ, 6, 1).kind == UNKNOWN
    assert known_value(Q, 4, 5).kind == UNKNOWN  # star wider than the cube


def test_known_value_low_dimensional_cases():
    assert known_value(Q, 4, 4).value == 2
    assert known_value(Q, 5, 4).value == 3
    assert known_value(Q, 5, 5).value == 3
    assert known_value(Q, 6, 5).value == 3
    assert known_value(Q, 6, 6).value == 3
    assert known_value(Q, 7, 6).value == 4
    assert known_value(Q, 7, 7).kind == UNKNOWN
    assert known_value(Q, 8, 8).kind == UNKNOWN


def test_known_value_consistency_with_thresholds():
    # wherever a settled value exists at or above the guaranteed dimension,
    # it is the half-dimension ceiling
    for fam in (Q, FQ):
        for n in range(2, 41):
            for r in range(2, 21):
                kv = known_value(fam, n, r)
                if kv.kind == EXACT and min_guaranteed_dim(fam, r) <= n:
                    assert kv.value == conjectured_value(fam, n), (fam, n, r)


def test_known_value_open_region_is_unknown():
    for r in range(7, 15):
        for n in range(r, 41):
            kv = known_value(Q, n, r)
            if n <= threshold_q(r):
                assert kv.kind == UNKNOWN, (n, r)
            else:
                assert kv.kind == EXACT, (n, r)
    for r in range(4, 15):
        for n in range(max(3, r - 1), 41):
            kv = known_value(FQ, n, r)
            if n <= threshold_fq(r):
                assert kv.kind == UNKNOWN, (n, r)
            else:
                assert kv.kind == EXACT, (n, r)


# ----------------------------------------------------------------------
# table emission


def test_render_ratio():
    assert render_ratio(Fraction(5)) == "5"
    assert render_ratio(Fraction(31, 3)) == "31/3"


def test_tables_tsv_rows():
    lines = tables_tsv(20).splitlines()
    assert lines[0] == "r\tthreshold_q\tthreshold_fq\tmin_dim_q\tmin_dim_fq"
    assert lines[1] == "2\t5\t6\t6\t7"
    assert lines[7] == "8\t31/3\t28/3\t11\t10"
    assert len(lines) == 20


def test_tables_tsv_validation():
    with pytest.raises(ROutOfRange):
        tables_tsv(1)
