"""Three-generated semigroups through their structure matrix.

For non-symmetric H = <n1, n2, n3> the minimal relations

    c1*n1 = b2*n2 + a3*n3
    c2*n2 = a1*n1 + b3*n3
    c3*n3 = b1*n1 + a2*n2

have unique positive coefficients with c_i = a_i + b_i. The residue, the
Frobenius number and the trace position all follow from these six numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd, prod
from typing import Sequence

from .core import NumericalSemigroup, is_minimal_generating_set
from .errors import InternalInconsistency, LabelMismatch, NotMinimal, SymmetricInput, guard
from .ideals import Position, trace_ideal


@dataclass(frozen=True)
class StructureMatrix:
    n: tuple[int, int, int]
    a: tuple[int, int, int]
    b: tuple[int, int, int]

    @property
    def c(self) -> tuple[int, int, int]:
        return tuple(x + y for x, y in zip(self.a, self.b))

    @property
    def d(self) -> tuple[int, int, int]:
        return tuple(min(x, y) for x, y in zip(self.a, self.b))

    def recovered_gens(self) -> tuple[int, int, int]:
        (a1, a2, a3), (b1, b2, b3) = self.a, self.b
        return (
            a2 * a3 + b2 * a3 + b2 * b3,
            a1 * a3 + a1 * b3 + b1 * b3,
            a1 * a2 + b1 * a2 + b1 * b2,
        )

    def relations_hold(self) -> bool:
        (n1, n2, n3), (a1, a2, a3), (b1, b2, b3) = self.n, self.a, self.b
        c1, c2, c3 = self.c
        return (
            c1 * n1 == b2 * n2 + a3 * n3
            and c2 * n2 == a1 * n1 + b3 * n3
            and c3 * n3 == b1 * n1 + a2 * n2
        )

    def rows(self) -> list[list[str]]:
        """The 2x3 matrix of monomials, as strings."""
        (a1, a2, a3), (b1, b2, b3) = self.a, self.b
        return [
            [f"x1^{a1}", f"x2^{a2}", f"x3^{a3}"],
            [f"x2^{b2}", f"x3^{b3}", f"x1^{b1}"],
        ]


def symmetric3(n1: int, n2: int, n3: int) -> bool:
    """Herzog's criterion: up to permutation gcd(n1, n2) = d > 1 and
    n3 lies in <n1/d, n2/d>."""
    if not is_minimal_generating_set([n1, n2, n3]) or gcd(n1, n2, n3) != 1:
        raise NotMinimal(f"({n1}, {n2}, {n3}) is not a minimal generating set")
    for x, y, z in permutations((n1, n2, n3)):
        d = gcd(x, y)
        if d > 1 and _in_span(z, x // d, y // d):
            return True
    return False


def _in_span(t: int, u: int, v: int) -> bool:
    return any((t - i * u) % v == 0 for i in range(t // u + 1))


def _representations(total: int, u: int, v: int) -> list[tuple[int, int]]:
    out = []
    for i in range(total // u + 1):
        rest = total - i * u
        if rest % v == 0:
            out.append((i, rest // v))
    return out


def _minimal_relation(ni: int, nj: int, nk: int) -> tuple[int, int, int]:
    """Least c with c*ni in <nj, nk>, and the coefficients (of nj, nk).

    Raises SymmetricInput when the representation is not unique or uses a
    zero coefficient."""
    # c = nj always works (nj*ni = ni*nj), so the loop is bounded
    for c in range(1, nj * nk + 1):
        reps = _representations(c * ni, nj, nk)
        if reps:
            if len(reps) != 1 or 0 in reps[0]:
                raise SymmetricInput(f"{c}*{ni} = {reps} over ({nj}, {nk})")
            return (c, *reps[0])
    raise InternalInconsistency("no relation found below nj*nk")


def _matrix_for(n1: int, n2: int, n3: int) -> StructureMatrix:
    c1, b2, a3 = _minimal_relation(n1, n2, n3)
    c2, a1, b3 = _minimal_relation(n2, n1, n3)
    c3, b1, a2 = _minimal_relation(n3, n1, n2)
    m = StructureMatrix((n1, n2, n3), (a1, a2, a3), (b1, b2, b3))
    if m.c != (c1, c2, c3):
        raise LabelMismatch(f"c != a + b for {m}")
    return m


def structure_matrix(H, labeling: Sequence[int] | None = None) -> StructureMatrix:
    """Structure matrix of a non-symmetric 3-generated semigroup.

    ``labeling`` fixes (n1, n2, n3); the default is increasing order. If the
    slot pattern does not close up, the cyclic relabelings are tried before
    giving up with LabelMismatch.
    """
    gens = tuple(H.gens) if isinstance(H, NumericalSemigroup) else tuple(H)
    if len(gens) != 3:
        raise NotMinimal(f"expected three minimal generators, got {gens}")
    n = tuple(labeling) if labeling is not None else tuple(sorted(gens))
    if sorted(n) != sorted(gens):
        raise LabelMismatch(f"labeling {n} is not a permutation of {gens}")
    guard(n[0] * n[1] * n[2])

    herzog = symmetric3(*n)
    try:
        m = None
        for rot in range(3):
            lab = n[rot:] + n[:rot]
            try:
                m = _matrix_for(*lab)
                break
            except LabelMismatch:
                continue
        if m is None:
            raise LabelMismatch(f"no cyclic labeling of {n} fits the relation pattern")
    except SymmetricInput:
        if not herzog:
            raise InternalInconsistency(f"{n}: degenerate relation but Herzog says non-symmetric")
        raise
    if herzog:
        raise InternalInconsistency(f"{n}: positive unique relations but Herzog says symmetric")
    if m.recovered_gens() != m.n or not m.relations_hold():
        raise LabelMismatch(f"generator recovery failed for {m}")
    return m


def _three(H) -> NumericalSemigroup:
    H = H if isinstance(H, NumericalSemigroup) else NumericalSemigroup(H)
    if H.edim != 3:
        raise NotMinimal(f"{H} has embedding dimension {H.edim}, not 3")
    return H


def residue3(H) -> tuple[int, tuple[int, int, int] | None]:
    """res(H) = d1*d2*d3 with d_i = min(a_i, b_i); (0, None) if symmetric."""
    H = _three(H)
    if symmetric3(*H.gens):
        return 0, None
    d = structure_matrix(H).d
    return prod(d), d


def frobenius3(H, matrix: StructureMatrix | None = None) -> int:
    """max(c1*n1 + b3*n3, c2*n2 + a3*n3) - (n1 + n2 + n3)."""
    H = _three(H)
    m = matrix or structure_matrix(H)
    (n1, n2, n3), c = m.n, m.c
    return max(c[0] * n1 + m.b[2] * n3, c[1] * n2 + m.a[2] * n3) - (n1 + n2 + n3)


@dataclass(frozen=True)
class GenusIdentity:
    lhs: int
    rhs_set: tuple[int, int]
    ok: bool


def genus_identity_check(H, matrix: StructureMatrix | None = None) -> GenusIdentity:
    """2g - (Fr + 1) must be one of a1*a2*a3, b1*b2*b3."""
    H = _three(H)
    m = matrix or structure_matrix(H)
    lhs = 2 * H.genus - (H.frobenius + 1)
    rhs = (prod(m.a), prod(m.b))
    return GenusIdentity(lhs, rhs, lhs in rhs)


def conductor_family_index(H) -> int | None:
    """a if H = <3, 3a+1, 3a+2>, else None."""
    g = tuple(H.gens) if isinstance(H, NumericalSemigroup) else tuple(sorted(H))
    if len(g) == 3 and g[0] == 3 and g[1] % 3 == 1 and g[2] == g[1] + 1:
        return (g[1] - 1) // 3
    return None


def trace_position3(H) -> tuple[Position, bool]:
    """Trace position read off the matrix alone; returns (position, also_equals_M).

    Same convention as ``ideals.trace_ideal``: when M = C_H (only <3,4,5>
    among 3-generated semigroups) the position is EQUALS_CONDUCTOR with the
    flag set.
    """
    H = _three(H)
    if symmetric3(*H.gens):
        return Position.WHOLE_H, False
    a = conductor_family_index(H)
    if a is not None:
        return Position.EQUALS_CONDUCTOR, a == 1
    if structure_matrix(H).d == (1, 1, 1):
        return Position.EQUALS_M, False
    return Position.STRICTLY_BETWEEN, False


def cross_check(H) -> dict:
    """Compare every closed form against the general machinery."""
    H = _three(H)
    td = trace_ideal(H)
    res3, _ = residue3(H)
    pos3 = trace_position3(H)
    out = {
        "residue": res3 == td.residue,
        "position": pos3 == (td.position, td.also_equals_M),
    }
    if not H.is_symmetric:
        m = structure_matrix(H)
        out["frobenius"] = frobenius3(H, m) == H.frobenius
        out["genus_identity"] = genus_identity_check(H, m).ok
    return out
