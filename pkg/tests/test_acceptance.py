"""Acceptance criteria, one test each, with their time budgets.

Every test prints a ``[PASS]``/``[FAIL]`` line (collected again in the
terminal summary). Caches are cleared before timing so that no criterion
profits from work done by an earlier test.
"""

import json
from math import gcd
from pathlib import Path

import numpy as np
import pytest

from conftest import criterion
from oracles import dp_members

from semitrace.cli import main
from semitrace.core import NumericalSemigroup
from semitrace.enumeration import minimal_generating_sets, threegen_sets
from semitrace.errors import GcdFail
from semitrace.families import ArithmeticParams, arithmetic, family_tm_i, family_tm_ii, med_family
from semitrace.ideals import Position, canonical_ideal, trace_ideal, trace_mask_direct
from semitrace.shifted import scan, shift_params
from semitrace.threegen import conductor_family_index, frobenius3, residue3, structure_matrix

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def cold_cache():
    trace_ideal.cache_clear()


def _threegen_corpus(max_gen=60):
    return [NumericalSemigroup(g) for g in threegen_sets(max_gen)]


def test_ac01_conductor_family_residue(capsys):
    with criterion("AC1", "residue <3, 3a+1, 3a+2> = a for a = 1..50", 1.0):
        for a in range(1, 51):
            gens = [3, 3 * a + 1, 3 * a + 2]
            assert main(["residue", *map(str, gens)]) == 0
            assert capsys.readouterr().out == f"residue: {a}\n"
            H = NumericalSemigroup(gens)
            assert trace_ideal(H).residue == a
            assert residue3(H)[0] == a


def test_ac02_med_family():
    with criterion("AC2", "med family m = 3..10, q = 1..10", 5.0):
        for m in range(3, 11):
            for q in range(1, 11):
                H = med_family(m, q).semigroup
                assert H.pseudo_frobenius == tuple(range((q - 1) * m + 1, q * m))
                td = trace_ideal(H)
                assert td.equals_conductor and td.residue == q


def test_ac03_arithmetic_sequences():
    with criterion("AC3", "arithmetic sequences e = 3..6, a <= 30, d <= 5", 30.0):
        count = 0
        for e in range(3, 7):
            for a in range(e, 31):
                for d in range(1, 6):
                    if gcd(a, d) != 1:
                        continue
                    H = arithmetic(ArithmeticParams(a, d, e), verify=False).semigroup
                    k = (a - 2) // (e - 1)
                    tau = a - 1 - k * (e - 1)
                    fr = a * k + d * (a - 1)
                    assert H.frobenius == fr
                    assert H.pseudo_frobenius == tuple(fr - i * d for i in reversed(range(tau)))
                    assert trace_ideal(H).residue <= 1
                    sym = a % (e - 1) == 2 % (e - 1)
                    assert H.is_symmetric == sym
                    assert H.is_almost_symmetric == (a == e or sym)
                    count += 1
        assert count == sum(1 for e in range(3, 7) for a in range(e, 31) for d in range(1, 6) if gcd(a, d) == 1)


def test_ac04_threegen_oracle_equivalence():
    with criterion("AC4", "residue3 and frobenius3 vs general machinery, n3 <= 60", 120.0):
        checked = 0
        for H in _threegen_corpus():
            if H.is_symmetric:
                continue
            m = structure_matrix(H)
            assert residue3(H)[0] == trace_ideal(H).residue, H
            assert frobenius3(H, m) == H.frobenius, H
            checked += 1
        assert checked > 10000


def test_ac05_bounds_over_corpus():
    with criterion("AC5", "trace sandwich, residue <= n, residue <= g - n over n3 <= 60"):
        for H in _threegen_corpus():
            td = trace_ideal(H)
            c, n, g = H.conductor, H.nongaps_count, H.genus
            # conductor ideal <= tr(H) <= M (H itself when symmetric)
            assert all(td.ideal.member(x) for x in range(c, c + H.mult))
            assert all(H.contains(x) for x in td.ideal.gens)
            assert H.is_symmetric or not td.ideal.member(0)
            assert td.residue <= n
            assert (td.residue == n) == (td.position is Position.EQUALS_CONDUCTOR), H
            assert td.residue <= g - n


def test_ac06_trace_maximal_families():
    with criterion("AC6", "families with trace M, a, b, c <= 6", 30.0):
        built = 0
        for a in range(1, 7):
            for b in range(1, 7):
                for c in range(1, 7):
                    for make, fr in (
                        (family_tm_i, a * b * c + b * c - b - 1 + max(0, a * b - c)),
                        (family_tm_ii, 2 * a * b * c - 2),
                    ):
                        try:
                            fm = make(a, b, c, verify=False)
                        except GcdFail:
                            continue
                        H = fm.semigroup
                        td = trace_ideal(H)
                        assert td.equals_M and not H.is_symmetric, (make.__name__, a, b, c)
                        assert H.frobenius == fr
                        if make is family_tm_ii:
                            assert H.is_pseudo_symmetric
                        built += 1
        assert built == 354


def test_ac07_conductor_position_classification():
    with criterion("AC7", "trace = conductor exactly at <3, 3a+1, 3a+2>, n3 <= 60"):
        hits = []
        for H in _threegen_corpus():
            td = trace_ideal(H)
            is_family = conductor_family_index(H) is not None
            assert (td.position is Position.EQUALS_CONDUCTOR) == is_family, H
            if is_family:
                hits.append(H.gens)
        assert hits == [(3, 3 * a + 1, 3 * a + 2) for a in range(1, 20)]


def test_ac08_shift_grid():
    with criterion("AC8", "shifted families a < b <= 12, j <= 2k + 4b", 300.0):
        failed = {}
        for b in range(2, 13):
            for a in range(1, b):
                p = shift_params(a, b)
                r = scan(p, 2 * p.k + 4 * b)
                if not r.ok:
                    failed[(a, b)] = {k: v for k, v in r.violations.items() if v}
        assert not failed, failed


def test_ac09_question_evidence(capsys):
    with criterion("AC9", "experiment q12 over max gen <= 25, edim <= 5", 600.0):
        code = main(["experiment", "q12", "--kind", "bounded", "--N", "25", "--E", "5", "--json"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        s = doc["summary"]
        print(f"q12: checked {s['checked']}, findings {s['violations']}")
        assert s["checked"] > 8000
        assert s["violations"] == 0 and doc["rows"] == []


def test_ac10_property_suite(capsys):
    with criterion("AC10", "property suite over every corpus instance, golden files"):
        corpus = _threegen_corpus() + [NumericalSemigroup(g) for g in minimal_generating_sets(16, 5)]
        for H in corpus:
            fr = H.frobenius
            assert H.nongaps_count + H.genus == fr + 1
            hi = 3 * max(fr, 1)
            mem = dp_members(list(H.gens), hi)
            assert np.array_equal(H.mask(0, hi), mem)
            assert not H.contains(-1)
            if fr < 1:
                continue
            lo, hi = -fr, 3 * fr + 1
            td = trace_ideal(H)
            assert np.array_equal(td.ideal.mask(lo, hi), trace_mask_direct(H, lo, hi)), H
            if H.edim > 1:
                omega = canonical_ideal(H)
                bidual = omega.dual().dual()
                assert all(bidual.member(x) for x in omega.elements(lo, hi))
        for gens in ((3, 4, 5), (3, 7, 8), (5, 6, 7)):
            assert main(["info", *map(str, gens), "--json"]) == 0
            out = capsys.readouterr().out.encode()
            assert out == (GOLDEN / f"info_{'_'.join(map(str, gens))}.json").read_bytes()
