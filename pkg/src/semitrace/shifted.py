"""Shifted families H_j = <j, j+a, j+b> and their eventual periodicity.

Each row of a scan is recomputed from scratch (trace ideal and structure
matrix); the shift rules are then checked as verdicts over the rows, never
used to produce them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .core import NumericalSemigroup, normalize
from .enumeration import ordered_map
from .errors import BadParams, BadRange, ThresholdViolation
from .ideals import is_nearly_gorenstein, trace_ideal
from .threegen import StructureMatrix, residue3, structure_matrix


def _nu(p: int, n: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ShiftParams:
    a: int
    b: int

    def __post_init__(self):
        if not 0 < self.a < self.b:
            raise BadParams(f"need 0 < a < b, got a={self.a}, b={self.b}")

    @property
    def D(self) -> int:
        return gcd(self.a, self.b)

    @property
    def T(self) -> int:
        """Period of the symmetric members: product of p^nu_p(b) over primes
        with nu_p(a) < nu_p(b)."""
        t = 1
        for p in _prime_factors(self.b):
            if _nu(p, self.a) < _nu(p, self.b):
                t *= p ** _nu(p, self.b)
        return t

    @property
    def k(self) -> int:
        D = self.D
        return max(self.b * ((self.b - self.a) // D - 1), self.b * self.a // D)

    def step(self, j: int) -> int:
        """Increment of the last matrix column when j moves to j + b."""
        return self.D // gcd(j, self.a, self.b)

    @property
    def stable_factor(self) -> int:
        return self.a * (self.b - self.a) // self.D**2


def shift_params(a: int, b: int) -> ShiftParams:
    return ShiftParams(a, b)


def semigroup_at(params: ShiftParams, j: int) -> tuple[NumericalSemigroup, bool]:
    """Normalized H_j and a flag that is set when the triple is not a minimal
    system of three generators after normalization."""
    if j < 1:
        raise BadRange(f"shift must be positive, got {j}")
    H, _ = normalize([j, j + params.a, j + params.b])
    return H, H.edim < 3


def symmetric_predicate(params: ShiftParams, j: int) -> bool:
    if j <= params.k:
        raise ThresholdViolation(f"j={j} <= k={params.k}: no claim is made there")
    return j % params.T == 0


@dataclass
class ShiftRow:
    j: int
    gens: tuple[int, ...]
    divisor: int
    degenerate: bool
    residue: int
    residue3: int | None
    symmetric: bool
    nearly_gorenstein: bool
    almost_symmetric: bool
    matrix: StructureMatrix | None = None

    def to_dict(self) -> dict:
        out = {
            "j": self.j,
            "gens": list(self.gens),
            "divisor": self.divisor,
            "degenerate": self.degenerate,
            "residue": self.residue,
            "residue3": self.residue3,
            "symmetric": self.symmetric,
            "nearly_gorenstein": self.nearly_gorenstein,
            "almost_symmetric": self.almost_symmetric,
            "matrix_a": list(self.matrix.a) if self.matrix else None,
            "matrix_b": list(self.matrix.b) if self.matrix else None,
        }
        return out


def compute_row(task: tuple[int, int, int]) -> ShiftRow:
    a, b, j = task
    raw = [j, j + a, j + b]
    H, d = normalize(raw)
    td = trace_ideal(H)
    res3, matrix = None, None
    if H.edim == 3:
        res3, _ = residue3(H)
        if not H.is_symmetric:
            matrix = structure_matrix(H)
    return ShiftRow(
        j=j,
        gens=H.gens,
        divisor=d,
        degenerate=H.edim < 3,
        residue=td.residue,
        residue3=res3,
        symmetric=H.is_symmetric,
        nearly_gorenstein=is_nearly_gorenstein(H),
        almost_symmetric=H.is_almost_symmetric,
        matrix=matrix,
    )


VERDICTS = (
    "residue3_ok",
    "periodicity_ok",
    "lemma33_ok",
    "middle_eq_ok",
    "stable_formula_ok",
    "matrix_step_ok",
    "cor34_div_ok",
    "cor34_bound_ok",
    "nearly_g_periodic_ok",
)


@dataclass
class ShiftScanReport:
    params: ShiftParams
    j_max: int
    rows: list[ShiftRow]
    violations: dict[str, list[int]] = field(default_factory=dict)
    empirical_onset: int | None = None
    pseudo_symmetric_late: list[int] = field(default_factory=list)

    @property
    def verdicts(self) -> dict[str, bool]:
        return {name: not self.violations.get(name) for name in VERDICTS}

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        p = self.params
        return {
            "params": {"a": p.a, "b": p.b, "D": p.D, "T": p.T, "k": p.k},
            "j_max": self.j_max,
            "verdicts": self.verdicts,
            "violations": {k: v for k, v in self.violations.items() if v},
            "empirical_onset": self.empirical_onset,
            "theoretical_onset": 2 * p.k + 1,
            "pseudo_symmetric_late": self.pseudo_symmetric_late,
            "rows": [r.to_dict() for r in self.rows],
        }


def scan(params: ShiftParams, j_max: int, jobs: int = 1, check_range: bool = True) -> ShiftScanReport:
    """Compute every H_j for 1 <= j <= j_max and evaluate the shift theorems
    on the j-ranges where they are claimed."""
    a, b, k, T = params.a, params.b, params.k, params.T
    if check_range and j_max <= 2 * k + 2 * b:
        raise BadRange(f"j_max={j_max} must exceed 2k + 2b = {2 * k + 2 * b}")
    rows = list(ordered_map(compute_row, [(a, b, j) for j in range(1, j_max + 1)], jobs=jobs))
    by_j = {r.j: r for r in rows}
    v: dict[str, list[int]] = {name: [] for name in VERDICTS}
    D = params.D

    for r in rows:
        j = r.j
        if r.degenerate:
            continue
        nxt = by_j.get(j + b)
        if r.residue3 is not None and r.residue3 != r.residue:
            v["residue3_ok"].append(j)
        if j > k and r.symmetric != symmetric_predicate(params, j):
            v["lemma33_ok"].append(j)
        if j > k and not r.symmetric:
            m = r.matrix
            if m is None or (m.c[1], m.a[0], m.b[2]) != (b // D, (b - a) // D, a // D):
                v["middle_eq_ok"].append(j)
            if nxt is not None and not nxt.degenerate:
                e = params.step(j)
                n = nxt.matrix
                if (
                    n is None
                    or (n.a[0], n.a[1], n.b[1], n.b[2]) != (m.a[0], m.a[1], m.b[1], m.b[2])
                    or (n.a[2], n.b[0]) != (m.a[2] + e, m.b[0] + e)
                ):
                    v["matrix_step_ok"].append(j)
        if j > 2 * k:
            if nxt is not None and not nxt.degenerate:
                if r.residue != nxt.residue:
                    v["periodicity_ok"].append(j)
                if r.nearly_gorenstein != nxt.nearly_gorenstein:
                    v["nearly_g_periodic_ok"].append(j)
            if not r.symmetric:
                m = r.matrix
                if m is None or r.residue != min(m.a[1], m.b[1]) * params.stable_factor:
                    v["stable_formula_ok"].append(j)
                if r.residue % params.stable_factor:
                    v["cor34_div_ok"].append(j)
            if not 27 * D**3 * r.residue < 8 * b**3:
                v["cor34_bound_ok"].append(j)

    report = ShiftScanReport(params, j_max, rows, v)
    report.empirical_onset = _onset([r.residue for r in rows], b)
    report.pseudo_symmetric_late = [
        r.j for r in rows if r.j > k + b and r.almost_symmetric and not r.symmetric
    ]
    return report


def _onset(values: Sequence[int], period: int, first: int = 1) -> int | None:
    """Least j0 such that values repeat with ``period`` from j0 to the end
    (values[i] belongs to j = first + i). None if the tail is too short to
    show even one repetition."""
    n = len(values)
    if n <= period:
        return None
    i = n - period - 1
    while i >= 0 and values[i] == values[i + period]:
        i -= 1
    return first + i + 1


@dataclass
class GeneralScanReport:
    base: tuple[int, ...]
    j_min: int
    j_max: int
    residues: list[int]
    width: int
    width_onset: int | None
    period: int | None
    period_onset: int | None

    @property
    def period_divides_width(self) -> bool | None:
        return None if self.period is None else self.width % self.period == 0

    def to_dict(self) -> dict:
        return {
            "base": list(self.base),
            "j_min": self.j_min,
            "j_max": self.j_max,
            "width": self.width,
            "width_onset": self.width_onset,
            "period": self.period,
            "period_onset": self.period_onset,
            "period_divides_width": self.period_divides_width,
            "rows": [{"j": self.j_min + i, "residue": r} for i, r in enumerate(self.residues)],
        }


def _general_residue(task: tuple[tuple[int, ...], int]) -> int:
    base, j = task
    H, _ = normalize([x + j for x in base])
    return trace_ideal(H).residue


def scan_general(base: Sequence[int], j_max: int, jobs: int = 1) -> GeneralScanReport:
    """Residues of <a_1 + j, ..., a_e + j> and the smallest eventual period
    seen in the window. Evidence only: nothing is asserted."""
    base = tuple(sorted(base))
    if len(set(base)) != len(base) or len(base) < 2:
        raise BadParams(f"need at least two distinct integers, got {base}")
    j_min = max(0, 1 - base[0])
    if j_max <= j_min:
        raise BadRange(f"j_max={j_max} must exceed {j_min}")
    tasks = [(base, j) for j in range(j_min, j_max + 1)]
    res = list(ordered_map(_general_residue, tasks, jobs=jobs))
    width = base[-1] - base[0]
    period = period_onset = None
    for p in range(1, len(res) // 3 + 1):
        start = _onset(res, p, j_min)
        # require the repeating tail to span at least two periods
        if start is not None and j_max - start + 1 >= 3 * p:
            period, period_onset = p, start
            break
    return GeneralScanReport(base, j_min, j_max, res, width, _onset(res, width, j_min), period, period_onset)
