"""Numerical semigroups: membership, Apéry sets, gaps and the pseudo-Frobenius set.

Everything is derived from the Apéry set with respect to the multiplicity,
computed with a round-robin shortest-path relaxation over residue classes.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyInput,
    InternalInconsistency,
    InvalidGenerator,
    NonPrimitive,
    NotAnElement,
    guard,
)

_INF = float("inf")


def _round_robin(modulus: int, gens: Iterable[int], dist: list | None = None) -> list:
    """Least element of the monoid generated by ``gens`` (plus ``modulus``)
    in each residue class mod ``modulus``; ``inf`` where a class is unreachable.

    ``dist`` may carry a previous result so generators can be added one at a time.
    """
    if dist is None:
        dist = [_INF] * modulus
        dist[0] = 0
    for g in gens:
        step = g % modulus
        if step == 0:
            continue
        d = gcd(step, modulus)
        cycle = modulus // d
        for p in range(d):
            # start the walk at the cheapest vertex of this cycle
            best, start = _INF, p
            r = p
            for _ in range(cycle):
                if dist[r] < best:
                    best, start = dist[r], r
                r = (r + step) % modulus
            if best == _INF:
                continue
            r = start
            for _ in range(cycle):
                nxt = (r + step) % modulus
                cand = dist[r] + g
                if cand < dist[nxt]:
                    dist[nxt] = cand
                r = nxt
    return dist


def _clean(gens: Iterable[int]) -> list[int]:
    try:
        gens = [int(g) for g in gens]
    except (TypeError, ValueError) as exc:
        raise InvalidGenerator(f"generators must be integers: {exc}") from None
    if not gens:
        raise EmptyInput("generator list is empty")
    bad = [g for g in gens if g <= 0]
    if bad:
        raise InvalidGenerator(f"generators must be positive, got {bad}")
    guard(*gens)
    return sorted(set(gens))


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Instances are immutable; invariants are computed on first use and cached.

    >>> H = NumericalSemigroup([4, 6, 9, 13])
    >>> H.gens
    (4, 6, 9)
    >>> H.frobenius, H.pseudo_frobenius
    (11, (11,))
    """

    def __init__(self, gens: Iterable[int]):
        gens = _clean(gens)
        if gcd(*gens) != 1:
            raise NonPrimitive(f"gcd{tuple(gens)} = {gcd(*gens)} != 1; use normalize()")
        m = gens[0]
        dist = _round_robin(m, ())
        kept = [m]
        for g in gens[1:]:
            # g is redundant iff it already lies in <kept>; larger gens cannot help
            if dist[g % m] <= g:
                continue
            kept.append(g)
            _round_robin(m, (g,), dist)
        object.__setattr__(self, "gens", tuple(kept))
        object.__setattr__(self, "_apery", tuple(int(w) for w in dist))
        self._check_counts()

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.gens)})"

    def __str__(self):
        return "<" + ", ".join(map(str, self.gens)) + ">"

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    # cached_property writes straight into __dict__, bypassing __setattr__

    @property
    def mult(self) -> int:
        return self.gens[0]

    @property
    def edim(self) -> int:
        return len(self.gens)

    def contains(self, x: int) -> bool:
        return x >= 0 and x >= self._apery[x % self.gens[0]]

    def apery_set(self, n: int | None = None) -> tuple[int, ...]:
        """Entry ``i`` is the least element of H congruent to ``i`` mod ``n``."""
        if n is None or n == self.mult:
            return self._apery
        if n <= 0 or not self.contains(n):
            raise NotAnElement(f"{n} is not a nonzero element of {self}")
        return tuple(int(w) for w in _round_robin(n, self.gens))

    def mask(self, lo: int, hi: int) -> np.ndarray:
        """Boolean membership vector for the integers ``lo..hi`` inclusive."""
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        ap = np.asarray(self._apery, dtype=np.int64)
        return (xs >= 0) & (xs >= ap[xs % self.mult])

    @cached_property
    def frobenius(self) -> int:
        return max(self._apery) - self.mult

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        m = self.mult
        out = []
        for w in self._apery:
            out.extend(range(w - m, 0, -m))
        return tuple(sorted(out))

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def nongaps_count(self) -> int:
        """n(H): number of elements of H below the Frobenius number."""
        fr, m = self.frobenius, self.mult
        return sum((fr - 1 - w) // m + 1 for w in self._apery if w < fr)

    @cached_property
    def small_elements(self) -> tuple[int, ...]:
        """H intersected with [0, Fr(H)]."""
        fr = self.frobenius
        return tuple(x for x in range(fr + 1) if self.contains(x))

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Maximal Apéry elements under the order of H, shifted down by mult."""
        if self.mult == 1:
            return ()
        m, ap = self.mult, self._apery
        out = []
        for w in ap:
            if all(ap[(w + g) % m] != w + g for g in self.gens[1:]):
                out.append(w - m)
        return tuple(sorted(out))

    @property
    def type(self) -> int:
        return max(1, len(self.pseudo_frobenius))

    @cached_property
    def is_symmetric(self) -> bool:
        by_type = self.type == 1
        by_count = self.nongaps_count == self.genus
        if by_type != by_count:
            raise InternalInconsistency(f"{self}: type test and n(H)=g(H) test disagree")
        return by_type

    @cached_property
    def is_almost_symmetric(self) -> bool:
        pf = self.pseudo_frobenius
        if len(pf) <= 1:
            return True
        fr, rest = pf[-1], pf[:-1]
        return all(rest[i] + rest[-1 - i] == fr for i in range(len(rest)))

    @property
    def is_pseudo_symmetric(self) -> bool:
        pf = self.pseudo_frobenius
        return len(pf) == 2 and 2 * pf[0] == pf[1]

    def _check_counts(self):
        if self.nongaps_count + self.genus != self.frobenius + 1:
            raise InternalInconsistency(f"{self}: n(H) + g(H) != Fr(H) + 1")


def normalize(gens: Sequence[int]) -> tuple[NumericalSemigroup, int]:
    """Divide out the gcd; returns the primitive semigroup and the divisor."""
    gens = _clean(gens)
    d = gcd(*gens)
    return NumericalSemigroup([g // d for g in gens]), d


def is_minimal_generating_set(gens: Sequence[int]) -> bool:
    """True if no element of ``gens`` lies in the monoid spanned by the others."""
    raw = list(gens)
    gens = _clean(raw)
    if len(gens) != len(raw):
        return False
    m = gens[0]
    dist = _round_robin(m, ())
    for g in gens[1:]:
        if dist[g % m] <= g:
            return False
        _round_robin(m, (g,), dist)
    return True
