"""Relative ideals of a numerical semigroup and the canonical trace.

A relative ideal is stored by its minimal generators only. Element sets are
materialised on explicit windows whose bounds are exact: for a dual the tail
starts at ``c(H) - min(gens)``, and for the trace everything above ``Fr(H)``
is a member.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .core import NumericalSemigroup, normalize
from .errors import BaseMismatch, EmptyInput, InternalInconsistency, TrivialSemigroup, guard


class RelativeIdeal:
    """``gens + H`` for a finite set of integer generators."""

    def __init__(self, base: NumericalSemigroup, gens: Iterable[int]):
        cand = sorted(set(int(g) for g in gens))
        if not cand:
            raise EmptyInput("a relative ideal needs at least one generator")
        guard(*cand)
        kept: list[int] = []
        for g in cand:
            if not any(base.contains(g - k) for k in kept):
                kept.append(g)
        self.base = base
        self.gens = tuple(kept)

    @classmethod
    def _from_mask(cls, base: NumericalSemigroup, lo: int, members: np.ndarray) -> "RelativeIdeal":
        # x is a minimal generator iff x - n is outside the ideal for every generator n of H
        minimal = members.copy()
        for n in base.gens:
            shifted = np.zeros_like(members)
            if n < len(members):
                shifted[n:] = members[:-n]
            minimal &= ~shifted
        gens = (np.flatnonzero(minimal) + lo).tolist()
        if not gens:
            raise InternalInconsistency(f"empty ideal over window starting at {lo}")
        self = cls.__new__(cls)
        self.base = base
        self.gens = tuple(int(g) for g in gens)
        return self

    def __repr__(self):
        return f"RelativeIdeal({self.base}, {list(self.gens)})"

    def __eq__(self, other):
        return isinstance(other, RelativeIdeal) and self.base == other.base and self.gens == other.gens

    def __hash__(self):
        return hash((self.base, self.gens))

    def __contains__(self, x: int) -> bool:
        return self.member(x)

    def member(self, x: int) -> bool:
        return any(self.base.contains(x - g) for g in self.gens)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.zeros(hi - lo + 1, dtype=bool)
        for g in self.gens:
            out |= self.base.mask(lo - g, hi - g)
        return out

    def elements(self, lo: int, hi: int) -> list[int]:
        return (np.flatnonzero(self.mask(lo, hi)) + lo).tolist()

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        if self.base != other.base:
            raise BaseMismatch(f"{self.base} != {other.base}")
        return RelativeIdeal(self.base, (g + h for g in self.gens for h in other.gens))

    def dual_window(self) -> tuple[int, int]:
        """Scan range for ``H - I``: below it nothing is a member, above it
        every element is a member but none is a minimal generator."""
        lo = -min(self.gens)
        tail = self.base.conductor - min(self.gens)
        return lo, tail + self.base.mult - 1

    def dual(self, pad: int = 0) -> "RelativeIdeal":
        """``H - I = {x : x + I is contained in H}``.

        ``pad`` widens (or, if negative, narrows) the scan window on both sides;
        anything but 0 exists only to stress the window bound.
        """
        lo, hi = self.dual_window()
        lo, hi = lo - pad, hi + pad
        if hi < lo:
            raise InternalInconsistency(f"dual window [{lo}, {hi}] is empty")
        members = np.ones(hi - lo + 1, dtype=bool)
        for g in self.gens:
            members &= self.base.mask(lo + g, hi + g)
        return RelativeIdeal._from_mask(self.base, lo, members)

    def dual_member(self, x: int) -> bool:
        """Membership in ``H - I`` straight from the definition."""
        return all(self.base.contains(x + g) for g in self.gens)


def rel_ideal(H: NumericalSemigroup, gens: Sequence[int]) -> RelativeIdeal:
    return RelativeIdeal(H, gens)


def ideal_sum(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    return I + J


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    if H.mult == 1:
        raise TrivialSemigroup("<1> has no pseudo-Frobenius numbers")
    return RelativeIdeal(H, (-f for f in H.pseudo_frobenius))


def conductor_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    c = H.conductor
    return RelativeIdeal(H, range(c, c + H.mult))


def conductor(H: NumericalSemigroup) -> int:
    return H.conductor


class Position(str, enum.Enum):
    """Where tr(H) sits in the chain C_H <= tr(H) <= H."""

    WHOLE_H = "WHOLE_H"
    EQUALS_M = "EQUALS_M"
    STRICTLY_BETWEEN = "STRICTLY_BETWEEN"
    EQUALS_CONDUCTOR = "EQUALS_CONDUCTOR"


@dataclass(frozen=True)
class TraceData:
    base: NumericalSemigroup
    ideal: RelativeIdeal
    sporadic: tuple[int, ...]
    residue: int
    position: Position
    # set when M = C_H, e.g. <3,4,5>; position then reads EQUALS_CONDUCTOR
    also_equals_M: bool = field(default=False)

    @property
    def equals_M(self) -> bool:
        return self.position is Position.EQUALS_M or self.also_equals_M

    @property
    def equals_conductor(self) -> bool:
        # C_H misses all of [0, Fr]; this also covers <1>, where C_H = H
        return not self.sporadic


def trace_mask_direct(H: NumericalSemigroup, lo: int, hi: int) -> np.ndarray:
    """tr(H) on ``lo..hi``: x is in tr(H) iff for some f in PF(H),
    x + f - g lies in H for every g in PF(H)."""
    pf = H.pseudo_frobenius
    if not pf:
        return H.mask(lo, hi)
    out = np.zeros(hi - lo + 1, dtype=bool)
    for f in pf:
        acc = np.ones_like(out)
        for g in pf:
            acc &= H.mask(lo + f - g, hi + f - g)
        out |= acc
    return out


@lru_cache(maxsize=8192)
def trace_ideal(H: NumericalSemigroup, pad: int = 0) -> TraceData:
    """Compute tr(H) as Omega + dual(Omega) and check it against the direct
    pseudo-Frobenius membership rule. ``pad`` is passed to ``dual``."""
    fr = H.frobenius
    if H.is_symmetric:
        return TraceData(H, RelativeIdeal(H, [0]), H.small_elements, 0, Position.WHOLE_H)

    omega = canonical_ideal(H)
    tr = omega + omega.dual(pad)
    lo, hi = -H.mult, fr + H.mult
    via_sum = tr.mask(lo, hi)
    if not np.array_equal(via_sum, trace_mask_direct(H, lo, hi)):
        raise InternalInconsistency(f"{H}: trace via ideal sum and via PF rule disagree")
    if not via_sum[fr + 1 - lo:].all():
        raise InternalInconsistency(f"{H}: conductor ideal not inside the trace")

    sporadic = tuple(x for x in H.small_elements if via_sum[x - lo])
    residue = H.nongaps_count - len(sporadic)
    nonzero = H.small_elements[1:]
    also_m = False
    if residue == 0:
        position = Position.WHOLE_H
    elif not sporadic:
        position = Position.EQUALS_CONDUCTOR
        also_m = not nonzero
    elif sporadic == nonzero:
        position = Position.EQUALS_M
    else:
        position = Position.STRICTLY_BETWEEN
    return TraceData(H, tr, sporadic, residue, position, also_m)


def _as_semigroup(H) -> NumericalSemigroup:
    if isinstance(H, NumericalSemigroup):
        return H
    return normalize(H)[0]


def residue(H, pad: int = 0) -> int:
    """|H \\ tr(H)|. A generator list with a common factor is normalized first."""
    return trace_ideal(_as_semigroup(H), pad).residue


def is_nearly_gorenstein(H, pad: int = 0) -> bool:
    """M is inside tr(H); checked on the generators of H and cross-checked
    against res(H) <= 1."""
    H = _as_semigroup(H)
    td = trace_ideal(H, pad)
    by_gens = all(td.ideal.member(n) for n in H.gens) if H.mult > 1 else True
    if by_gens != (td.residue <= 1):
        raise InternalInconsistency(f"{H}: M in tr(H) disagrees with res(H) <= 1")
    return by_gens


@dataclass(frozen=True)
class BoundsReport:
    res: int
    n: int
    g: int
    cor13_ok: bool
    q12_ok: bool
    cor13_tight: bool


def bounds_report(H, pad: int = 0) -> BoundsReport:
    """Check res <= n(H) (with equality exactly at tr = C_H) and record
    whether res <= g(H) - n(H). The latter is an open question in general,
    so a failure is reported, never raised."""
    H = _as_semigroup(H)
    td = trace_ideal(H, pad)
    n, g, r = H.nongaps_count, H.genus, td.residue
    return BoundsReport(
        res=r,
        n=n,
        g=g,
        cor13_ok=r <= n,
        q12_ok=r <= g - n,
        cor13_tight=(r == n) == td.equals_conductor,
    )
