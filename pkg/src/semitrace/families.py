"""Parametrized families with closed-form invariants.

Each constructor returns a ``FamilyMember`` carrying the predicted invariants;
``check()`` compares them against the general machinery in ``core``/``ideals``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Any

from .core import NumericalSemigroup, is_minimal_generating_set
from .errors import BadParams, Degenerate, GcdFail, PredictionMismatch
from .ideals import is_nearly_gorenstein, trace_ideal


@dataclass(frozen=True)
class ArithmeticParams:
    """<a, a+d, ..., a+(e-1)d> with e > 2, gcd(a, d) = 1 and e <= a."""

    a: int
    d: int
    e: int

    def __post_init__(self):
        if self.e <= 2 or self.d < 1 or self.a < self.e or gcd(self.a, self.d) != 1:
            raise BadParams(f"need e > 2, d >= 1, e <= a, gcd(a, d) = 1; got {self}")

    @property
    def k(self) -> int:
        return (self.a - 2) // (self.e - 1)

    @property
    def tau(self) -> int:
        return self.a - 1 - self.k * (self.e - 1)


@dataclass
class FamilyMember:
    kind: str
    params: dict[str, int]
    semigroup: NumericalSemigroup
    labeling: tuple[int, ...]  # generators in the family's own order
    predictions: dict[str, Any]
    applicable: bool = True
    note: str = ""
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def order(self) -> tuple[int, ...]:
        """Index into ``labeling`` for each generator of the sorted semigroup."""
        return tuple(self.labeling.index(g) for g in self.semigroup.gens)

    def observed(self) -> dict[str, Any]:
        H = self.semigroup
        td = trace_ideal(H)
        values = {
            "pf": H.pseudo_frobenius,
            "frobenius": H.frobenius,
            "type": H.type,
            "residue": td.residue,
            "symmetric": H.is_symmetric,
            "almost_symmetric": H.is_almost_symmetric,
            "pseudo_symmetric": H.is_pseudo_symmetric,
            "nearly_gorenstein": is_nearly_gorenstein(H),
            "trace_equals_M": td.equals_M,
            "trace_equals_conductor": td.equals_conductor,
        }
        return {k: values[k] for k in self.predictions}

    def check(self) -> dict[str, bool]:
        obs = self.observed()
        self.checks = {k: obs[k] == v for k, v in self.predictions.items()}
        return self.checks


def _finish(member: FamilyMember, verify: bool) -> FamilyMember:
    if verify and member.applicable:
        failed = [k for k, ok in member.check().items() if not ok]
        if failed:
            raise PredictionMismatch(f"{member.kind}{member.params}: {failed} mismatch: {member.observed()}")
    return member


def _positive(**kw):
    bad = {k: v for k, v in kw.items() if v < 1}
    if bad:
        raise BadParams(f"parameters must be positive: {bad}")


def _minimal_triple(labeling: tuple[int, ...]) -> NumericalSemigroup:
    if len(set(labeling)) != len(labeling) or not is_minimal_generating_set(list(labeling)):
        raise Degenerate(f"{labeling} is not a minimal generating set")
    return NumericalSemigroup(labeling)


def arithmetic(params: ArithmeticParams, verify: bool = True) -> FamilyMember:
    a, d, e = params.a, params.d, params.e
    k, tau = params.k, params.tau
    fr = a * k + d * (a - 1)
    labeling = tuple(a + i * d for i in range(e))
    member = FamilyMember(
        "arithmetic",
        {"a": a, "d": d, "e": e},
        NumericalSemigroup(labeling),
        labeling,
        {
            "pf": tuple(fr - i * d for i in reversed(range(tau))),
            "frobenius": fr,
            "type": tau,
            "nearly_gorenstein": True,
            "symmetric": a % (e - 1) == 2 % (e - 1),
            "almost_symmetric": a == e or a % (e - 1) == 2 % (e - 1),
        },
    )
    return _finish(member, verify)


def med_family(m: int, q: int, verify: bool = True) -> FamilyMember:
    """<m, qm+1, ..., qm+m-1>: minimal multiplicity, trace equal to the conductor."""
    if m < 2 or q < 1:
        raise BadParams(f"need m > 1, q > 0; got m={m}, q={q}")
    labeling = (m,) + tuple(q * m + i for i in range(1, m))
    member = FamilyMember(
        "med",
        {"m": m, "q": q},
        NumericalSemigroup(labeling),
        labeling,
        {
            "pf": tuple(range((q - 1) * m + 1, q * m)),
            "trace_equals_conductor": True,
            "residue": q,
        },
    )
    if m == 2:
        member.applicable = False
        member.note = "m = 2 gives a 2-generated, hence symmetric, semigroup"
    return _finish(member, verify)


def family_tm_i(a: int, b: int, c: int, verify: bool = True) -> FamilyMember:
    """<ab+b+1, b+c+1, ac+a+c>, trace equal to M.

    The generators are coprime iff gcd(b+c+1, ab-c) = 1.
    """
    _positive(a=a, b=b, c=c)
    if gcd(b + c + 1, a * b - c) != 1:
        raise GcdFail(f"gcd(b+c+1, ab-c) = {gcd(b + c + 1, a * b - c)} for (a,b,c)=({a},{b},{c})")
    labeling = (a * b + b + 1, b + c + 1, a * c + a + c)
    member = FamilyMember(
        "tm1",
        {"a": a, "b": b, "c": c},
        _minimal_triple(labeling),
        labeling,
        {
            "trace_equals_M": True,
            "frobenius": a * b * c + b * c - b - 1 + max(0, a * b - c),
            "residue": 1,
            "nearly_gorenstein": True,
        },
    )
    return _finish(member, verify)


def family_tm_ii(a: int, b: int, c: int, verify: bool = True) -> FamilyMember:
    """<bc+b+1, ca+c+1, ab+a+1>: pseudo-symmetric with trace equal to M."""
    _positive(a=a, b=b, c=c)
    labeling = (b * c + b + 1, c * a + c + 1, a * b + a + 1)
    if gcd(labeling[0], labeling[1]) != 1:
        raise GcdFail(f"gcd(bc+b+1, ca+c+1) = {gcd(labeling[0], labeling[1])} for (a,b,c)=({a},{b},{c})")
    member = FamilyMember(
        "tm2",
        {"a": a, "b": b, "c": c},
        _minimal_triple(labeling),
        labeling,
        {
            "trace_equals_M": True,
            "frobenius": 2 * a * b * c - 2,
            "pseudo_symmetric": True,
            "residue": 1,
        },
    )
    return _finish(member, verify)


def conductor_family(a: int, verify: bool = True) -> FamilyMember:
    """<3, 3a+1, 3a+2>: trace equal to the conductor ideal, residue a."""
    _positive(a=a)
    labeling = (3, 3 * a + 1, 3 * a + 2)
    member = FamilyMember(
        "conductor",
        {"a": a},
        NumericalSemigroup(labeling),
        labeling,
        {"trace_equals_conductor": True, "residue": a},
    )
    if a == 1:
        member.note = "M = C_H here, so the trace is both M and the conductor"
    return _finish(member, verify)


KINDS = {
    "arithmetic": lambda a, d, e: arithmetic(ArithmeticParams(a, d, e)),
    "med": med_family,
    "tm1": family_tm_i,
    "tm2": family_tm_ii,
    "conductor": conductor_family,
}
