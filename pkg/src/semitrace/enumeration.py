"""Generator-bounded enumeration of numerical semigroups and an ordered
parallel map used by the corpus experiments."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Callable, Iterable, Iterator, TypeVar

from .errors import BadRange

T = TypeVar("T")
R = TypeVar("R")


def minimal_generating_sets(max_gen: int, max_edim: int, min_edim: int = 1) -> Iterator[tuple[int, ...]]:
    """All minimal generating sets of numerical semigroups with every
    generator <= max_gen and min_edim <= edim <= max_edim, in lexicographic order.

    A sorted tuple is minimal iff no entry lies in the monoid spanned by the
    smaller entries, so a depth-first walk carrying that monoid's membership
    bitmap (truncated at max_gen) is enough.
    """
    if max_gen < 1 or max_edim < 1 or min_edim > max_edim:
        raise BadRange(f"bad bounds max_gen={max_gen} edim=[{min_edim},{max_edim}]")
    if min_edim <= 1:
        yield (1,)

    def walk(prefix: tuple[int, ...], mem: list[bool], g: int):
        for nxt in range(prefix[-1] + 1, max_gen + 1):
            if mem[nxt]:
                continue
            child = prefix + (nxt,)
            if len(child) >= min_edim and gcd(g, nxt) == 1:
                yield child
            if len(child) < max_edim:
                new = mem[:]
                for x in range(nxt, max_gen + 1):
                    if new[x - nxt]:
                        new[x] = True
                yield from walk(child, new, gcd(g, nxt))

    for first in range(2, max_gen + 1):
        mem = [x % first == 0 for x in range(max_gen + 1)]
        yield from walk((first,), mem, first)


def threegen_sets(max_gen: int) -> Iterator[tuple[int, int, int]]:
    """Minimal triples n1 < n2 < n3 <= max_gen with gcd 1."""
    return minimal_generating_sets(max_gen, 3, 3)


def ordered_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1, chunksize: int = 64) -> Iterator[R]:
    """``map`` that fans out over ``jobs`` worker processes while yielding
    results in input order."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=chunksize)
