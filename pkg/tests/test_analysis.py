from decimal import Decimal

import pytest

from published_tables import DIAGONALS, L_GT, N_GT, RATIO
from sgtree import CountTable
from sgtree.analysis import (
    HOLDS,
    PUBLISHED_LEAF_TYPE_MAXIMA,
    VACUOUS,
    VIOLATED,
    bras_amoros_check,
    check_column_monotonicity,
    check_row_unimodality,
    is_unimodal,
    leaf_type_bound,
    leaf_type_bound_report,
    max_leaf_types,
    observed_onset,
    ratio_series,
    ratio_trend_report,
    shift_bijection_report,
    stabilizer_report,
)


def published(rows, gmax):
    return CountTable.from_rows([rows[g] for g in range(1, gmax + 1)])


def test_is_unimodal():
    assert is_unimodal([8, 9, 12, 5, 3, 1, 1]) == (True, 2)
    assert is_unimodal([1, 2, 1, 2]) == (False, None)
    assert is_unimodal([5, 3, 0, 0, 0, 0]) == (True, 0)
    assert is_unimodal([1, 3, 3, 2]) == (True, 1)
    assert is_unimodal([4]) == (True, 0)
    with pytest.raises(ValueError):
        is_unimodal([])


def test_row_unimodality(stats22):
    for table in (stats22.counts, stats22.leaves):
        assert check_row_unimodality(table).verdict == HOLDS
    report = check_row_unimodality(stats22.counts)
    assert report.details["peaks"][7] == 3
    assert report.details["peaks"][22] == 6
    assert check_row_unimodality(CountTable.from_rows([[1]])).verdict == HOLDS


def test_row_unimodality_witness():
    report = check_row_unimodality(CountTable.from_rows([[1], [1, 1], [1, 0, 1]]))
    assert report.verdict == VIOLATED
    assert [(w.g, w.t) for w in report.witnesses] == [(3, 3)]


def test_column_monotonicity_from_two():
    # [PAPER] the column claim is made for t >= 2
    table = published(N_GT, 25)
    assert check_column_monotonicity(table).verdict == HOLDS


def test_column_monotonicity_type_one():
    table = published(N_GT, 23)
    report = check_column_monotonicity(table, [1])
    assert report.verdict == VIOLATED
    assert (22, 1, 546, 498) in [(w.g, w.t, w.lhs, w.rhs) for w in report.witnesses]
    # every drop or tie in the symmetric column below 23
    assert [w.g for w in report.witnesses] == [4, 7, 10, 16, 19, 22]


def test_column_monotonicity_vacuous():
    assert check_column_monotonicity(CountTable.from_rows([[1], [1, 1]]), []).verdict == VACUOUS


def test_stabilizer_report(stats22):
    sizes = {ell: v for ell, (_, v) in DIAGONALS.items()}
    report = stabilizer_report(stats22.counts, sizes)
    assert report.verdict == HOLDS
    d = report.details["diagonals"]
    assert d[5]["value"] == 35 and d[5]["threshold"] == 14
    assert d[1]["threshold"] == 2
    assert set(d) == {1, 2, 3, 4, 5, 6, 7}


def test_stabilizer_report_published_tail():
    table = published(N_GT, 33)
    sizes = {ell: v for ell, (_, v) in DIAGONALS.items()}
    report = stabilizer_report(table, sizes)
    assert report.verdict == HOLDS
    assert report.details["diagonals"][8]["threshold"] == 23
    assert report.details["diagonals"][8]["value"] == 367


def test_observed_onset():
    table = published(N_GT, 33)
    # the constant runs start no later than the proven threshold
    for ell, (g0, _) in DIAGONALS.items():
        assert observed_onset(table, ell) <= g0
    assert observed_onset(table, 33) is None


def test_stabilizer_mismatch_is_reported(stats22):
    report = stabilizer_report(stats22.counts, {2: 4})
    assert report.verdict == VIOLATED
    assert report.witnesses[0].g == 5


def test_leaf_type_bound():
    assert leaf_type_bound(14) == 6
    assert leaf_type_bound(23) == 11
    assert leaf_type_bound(4) == 1
    assert [leaf_type_bound(g) for g in range(7, 31)] == [PUBLISHED_LEAF_TYPE_MAXIMA[g] for g in range(7, 31)]


def test_leaf_type_bound_report(stats22):
    report = leaf_type_bound_report(stats22.leaves)
    assert report.verdict == HOLDS
    maxima = max_leaf_types(stats22.leaves)
    assert maxima[14] == 6 and maxima[19] == 9 and maxima[4] == 1
    assert maxima[1] is None


def test_leaf_bound_against_published_leaf_table():
    # the published leaf table itself has a leaf of type 16 at genus 33
    report = leaf_type_bound_report(published(L_GT, 33))
    assert report.verdict == VIOLATED
    assert [(w.g, w.t) for w in report.witnesses if isinstance(w.rhs, int)] == [(33, 16)]


def test_ratio_series(stats22):
    rows = ratio_series(stats22.counts, stats22.leaves)
    by_g = {r.g: r for r in rows}
    assert by_g[6][1:] == (8, 23, Decimal("0.3478"))
    assert by_g[1][1:] == (0, 1, Decimal("0"))
    assert by_g[20][1:] == (13751, 37396, Decimal("0.3677"))
    for r in rows:
        leaves, total, ratio = RATIO[r.g]
        assert (r.leaves, r.total) == (leaves, total)
        assert r.ratio == Decimal(ratio)


def test_ratio_trend():
    rows = [r for r in ratio_series(published(N_GT, 22), published(L_GT, 22))]
    assert ratio_trend_report(rows, 17).verdict == HOLDS
    report = ratio_trend_report(rows, 11)
    assert [w.g for w in report.witnesses] == [12, 13, 16]


def test_bras_amoros():
    totals = [sum(N_GT[g]) for g in range(1, 21)]
    strong, weak = bras_amoros_check(totals)
    assert strong.verdict == HOLDS and weak.verdict == HOLDS
    strong, weak = bras_amoros_check([1, 1, 1])
    assert strong.verdict == VIOLATED and strong.witnesses[0].g == 3
    assert weak.verdict == VIOLATED


def test_shift_bijection_report():
    report = shift_bijection_report(9)
    assert report.verdict == HOLDS
    assert report.checked > 0


def test_report_serialisation(stats22):
    d = check_row_unimodality(stats22.counts).to_dict()
    assert set(d) == {"name", "scope", "verdict", "witnesses", "details"}
    assert d["scope"]["g_max"] == 22
