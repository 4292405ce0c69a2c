import pytest

from oracles import brute_invariants, brute_relation

from semitrace.core import NumericalSemigroup as NS
from semitrace.errors import LabelMismatch, NotMinimal, SymmetricInput
from semitrace.ideals import Position, trace_ideal
from semitrace.threegen import (
    StructureMatrix,
    conductor_family_index,
    cross_check,
    frobenius3,
    genus_identity_check,
    residue3,
    structure_matrix,
    symmetric3,
    trace_position3,
)


@pytest.mark.parametrize("gens, sym", [((9, 11, 12), True), ((3, 4, 5), False), ((4, 6, 9), True), ((7, 9, 10), False)])
def test_symmetric3(gens, sym):
    assert symmetric3(*gens) is sym
    assert NS(gens).is_symmetric is sym


@pytest.mark.parametrize("gens", [(3, 4, 7), (3, 6, 9), (4, 4, 5)])
def test_symmetric3_rejects_non_minimal(gens):
    with pytest.raises(NotMinimal):
        symmetric3(*gens)


@pytest.mark.parametrize(
    "gens, a, b, c",
    [
        ((3, 4, 5), (1, 1, 1), (2, 1, 1), (3, 2, 2)),
        ((7, 9, 10), (1, 1, 1), (3, 2, 2), (4, 3, 3)),
        ((3, 7, 8), (2, 1, 1), (3, 1, 1), (5, 2, 2)),
    ],
)
def test_structure_matrix(gens, a, b, c):
    m = structure_matrix(NS(gens))
    assert (m.a, m.b, m.c) == (a, b, c)
    assert m.relations_hold() and m.recovered_gens() == gens


def test_structure_matrix_relations_are_minimal():
    for gens in [(3, 4, 5), (7, 9, 10), (3, 7, 8), (5, 6, 7), (5, 7, 11), (8, 11, 13)]:
        m = structure_matrix(NS(gens))
        n = m.n
        # c1 n1 = b2 n2 + a3 n3 etc., each c the least with a representation
        for i, (j, k) in enumerate([(1, 2), (0, 2), (0, 1)]):
            c, reps = brute_relation(n[i], n[j], n[k])
            assert c == m.c[i] and len(reps) == 1
        assert reps[0] == (m.b[0], m.a[1])


def test_structure_matrix_symmetric_input():
    with pytest.raises(SymmetricInput):
        structure_matrix(NS([9, 11, 12]))


def test_structure_matrix_bad_inputs():
    with pytest.raises(NotMinimal):
        structure_matrix(NS([4, 5, 6, 7]))
    with pytest.raises(LabelMismatch):
        structure_matrix(NS([3, 4, 5]), labeling=(3, 4, 6))


def test_structure_matrix_labeling_rotation():
    m = structure_matrix(NS([3, 7, 8]), labeling=(7, 8, 3))
    assert m.relations_hold() and sorted(m.n) == [3, 7, 8]


def test_rows():
    m = StructureMatrix((3, 4, 5), (1, 1, 1), (2, 1, 1))
    assert m.rows() == [["x1^1", "x2^1", "x3^1"], ["x2^1", "x3^1", "x1^2"]]


@pytest.mark.parametrize("gens, res, d", [((3, 7, 8), 2, (2, 1, 1)), ((7, 9, 10), 1, (1, 1, 1)), ((9, 11, 12), 0, None)])
def test_residue3(gens, res, d):
    assert residue3(NS(gens)) == (res, d)
    assert trace_ideal(NS(gens)).residue == res


@pytest.mark.parametrize("gens, fr", [((3, 4, 5), 2), ((7, 9, 10), 22), ((3, 7, 8), 5)])
def test_frobenius3(gens, fr):
    assert frobenius3(NS(gens)) == fr == brute_invariants(list(gens))["frobenius"]


def test_frobenius3_requires_three_generators():
    with pytest.raises(NotMinimal):
        frobenius3(NS([2, 3]))


@pytest.mark.parametrize("gens, lhs, rhs", [((3, 4, 5), 1, (1, 2)), ((3, 7, 8), 2, (2, 3))])
def test_genus_identity(gens, lhs, rhs):
    gi = genus_identity_check(NS(gens))
    assert (gi.lhs, gi.rhs_set, gi.ok) == (lhs, rhs, True)


def test_genus_identity_797():
    H = NS([7, 9, 10])
    gi = genus_identity_check(H)
    assert gi.ok and gi.lhs == 2 * H.genus - 23


@pytest.mark.parametrize(
    "gens, pos, also_m",
    [
        ((3, 4, 5), Position.EQUALS_CONDUCTOR, True),
        ((3, 10, 11), Position.EQUALS_CONDUCTOR, False),
        ((3, 7, 8), Position.EQUALS_CONDUCTOR, False),
        ((7, 9, 10), Position.EQUALS_M, False),
        ((5, 6, 8), Position.STRICTLY_BETWEEN, False),
        ((9, 11, 12), Position.WHOLE_H, False),
    ],
)
def test_trace_position3(gens, pos, also_m):
    assert trace_position3(NS(gens)) == (pos, also_m)
    td = trace_ideal(NS(gens))
    assert (td.position, td.also_equals_M) == (pos, also_m)


def test_conductor_family_index():
    assert conductor_family_index(NS([3, 10, 11])) == 3
    assert conductor_family_index(NS([3, 5, 7])) is None
    assert conductor_family_index(NS([4, 5, 6])) is None


def test_cross_check_small_corpus(threegen60):
    for H in threegen60:
        if H.gens[2] > 30:
            continue
        assert all(cross_check(H).values()), H


def test_trace_equals_m_is_exactly_the_two_families(threegen60):
    # every generator is >= a, b, c, so parameters below the bound cover all
    # family members with generators <= 40
    from semitrace.errors import Degenerate, GcdFail
    from semitrace.families import family_tm_i, family_tm_ii

    bound = 40
    members = set()
    for make in (family_tm_i, family_tm_ii):
        for a in range(1, bound):
            for b in range(1, bound):
                for c in range(1, bound):
                    if make is family_tm_i:
                        gens = (a * b + b + 1, b + c + 1, a * c + a + c)
                    else:
                        gens = (b * c + b + 1, c * a + c + 1, a * b + a + 1)
                    if max(gens) > bound:
                        continue
                    try:
                        members.add(make(a, b, c, verify=False).semigroup.gens)
                    except (GcdFail, Degenerate):
                        pass
    equals_m = {H.gens for H in threegen60 if H.gens[2] <= bound and trace_ideal(H).equals_M}
    assert members == equals_m
