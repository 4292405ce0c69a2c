import pytest

from semitrace.core import NumericalSemigroup as NS
from semitrace.errors import BadParams, BadRange, ThresholdViolation
from semitrace.ideals import trace_ideal
from semitrace.shifted import (
    VERDICTS,
    _onset,
    compute_row,
    scan,
    scan_general,
    semigroup_at,
    shift_params,
    symmetric_predicate,
)


@pytest.mark.parametrize("ab, D, T, k", [((1, 2), 1, 2, 2), ((2, 3), 1, 3, 6), ((2, 4), 2, 4, 4), ((4, 12), 4, 3, 12)])
def test_shift_params(ab, D, T, k):
    p = shift_params(*ab)
    assert (p.D, p.T, p.k) == (D, T, k)
    assert p.b % p.T == 0 and p.T > 1


def test_t_divides_b_on_grid():
    for b in range(2, 30):
        for a in range(1, b):
            p = shift_params(a, b)
            assert b % p.T == 0 and p.T > 1 and a % p.D == 0


@pytest.mark.parametrize("ab", [(0, 2), (3, 3), (5, 2)])
def test_shift_params_bad(ab):
    with pytest.raises(BadParams):
        shift_params(*ab)


@pytest.mark.parametrize(
    "ab, j, gens, degenerate",
    [((1, 2), 7, (7, 8, 9), False), ((2, 3), 9, (9, 11, 12), False), ((2, 4), 2, (1,), True)],
)
def test_semigroup_at(ab, j, gens, degenerate):
    H, flag = semigroup_at(shift_params(*ab), j)
    assert (H.gens, flag) == (gens, degenerate)


def test_semigroup_at_bad_shift():
    with pytest.raises(BadRange):
        semigroup_at(shift_params(1, 2), 0)


@pytest.mark.parametrize("ab, j, sym", [((2, 3), 9, True), ((2, 3), 7, False), ((1, 2), 8, True)])
def test_symmetric_predicate(ab, j, sym):
    p = shift_params(*ab)
    assert symmetric_predicate(p, j) is sym
    assert semigroup_at(p, j)[0].is_symmetric is sym


def test_symmetric_predicate_below_threshold():
    with pytest.raises(ThresholdViolation):
        symmetric_predicate(shift_params(2, 3), 6)


def test_scan_1_2():
    r = scan(shift_params(1, 2), 20)
    assert r.ok and set(r.verdicts) == set(VERDICTS)
    for row in r.rows:
        if row.j > 4:
            assert row.residue == row.j % 2
    assert r.empirical_onset <= 5


def test_scan_2_3():
    r = scan(shift_params(2, 3), 40)
    assert r.ok
    for row in r.rows:
        if row.j > 6:
            assert row.symmetric == (row.j % 3 == 0)
        if row.j > 12 and not row.symmetric:
            assert row.residue == min(row.matrix.a[1], row.matrix.b[1]) * 2 * 1


def test_scan_2_4():
    r = scan(shift_params(2, 4), 40)
    assert r.ok
    assert all(row.symmetric for row in r.rows if row.j > 4 and row.j % 4 == 0)


def test_scan_rows_are_independent_of_jobs():
    p = shift_params(3, 5)
    one = scan(p, 60)
    two = scan(p, 60, jobs=2)
    assert [r.to_dict() for r in one.rows] == [r.to_dict() for r in two.rows]


def test_scan_bad_range():
    with pytest.raises(BadRange):
        scan(shift_params(2, 3), 18)
    assert scan(shift_params(2, 3), 10, check_range=False).rows[-1].j == 10


def test_compute_row_matches_direct():
    row = compute_row((2, 3, 7))
    assert row.gens == (7, 9, 10)
    assert row.residue == row.residue3 == trace_ideal(NS([7, 9, 10])).residue
    assert row.matrix.a == (1, 1, 1)


def test_scan_detects_planted_violation(monkeypatch):
    import semitrace.shifted as shifted

    real = shifted.compute_row

    def tampered(task):
        row = real(task)
        if task[2] == 30:
            row.residue += 1
        return row

    monkeypatch.setattr(shifted, "compute_row", tampered)
    r = shifted.scan(shift_params(2, 3), 40)
    assert not r.ok
    assert 30 in r.violations["residue3_ok"] or 30 in r.violations["periodicity_ok"]


def test_to_dict_shape():
    d = scan(shift_params(1, 2), 20).to_dict()
    assert d["params"] == {"a": 1, "b": 2, "D": 1, "T": 2, "k": 2}
    assert d["theoretical_onset"] == 5
    assert [row["j"] for row in d["rows"]] == list(range(1, 21))


def test_onset():
    assert _onset([5, 0, 1, 0, 1, 0, 1], 2) == 2
    assert _onset([1, 1, 1], 1) == 1
    assert _onset([1, 2], 2) is None


def test_scan_general_three_generators_matches_scan():
    g = scan_general([0, 2, 3], 40)
    r = scan(shift_params(2, 3), 40)
    assert g.residues == [row.residue for row in r.rows]
    assert g.width == 3 and g.period == 3


def test_scan_general_four_generators():
    g = scan_general([0, 1, 3, 4], 60)
    assert g.width == 4 and len(g.residues) == 60
    assert g.period is not None and g.period_divides_width


def test_scan_general_bad_inputs():
    with pytest.raises(BadParams):
        scan_general([3, 3], 10)
    with pytest.raises(BadRange):
        scan_general([0, 1, 2], 0)
