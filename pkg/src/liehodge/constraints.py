"""Numerical constraints on subvarieties derived from Hodge rows.

Everything here is integer arithmetic on top of a :class:`SearchResult`:
upper bounds on the ambient dimension ``g``, the ``d < g/2`` feasibility
table, Euler characteristic tests for ample divisors, lower bounds on
``(-1)^(d-p) chi(X, Omega^p)``, and the Chern-number bookkeeping for a
surface with ``chi(O) = 6`` and ``c2 = 27``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import DomainError, InconsistentInputError, UsageError
from .search import HodgeRow, SearchResult

GROUP_DIM = {"E6": 27, "E7": 56}


@lru_cache(maxsize=None)
def eulerian_number(g: int, i: int) -> int:
    """Number of permutations of ``g`` letters with exactly ``i`` descents."""
    if g < 1 or not 0 <= i < g:
        raise UsageError(f"Eulerian number A({g}, {i}) needs g >= 1 and 0 <= i < g")
    if g == 1:
        return 1
    total = 0
    if i < g - 1:
        total += (i + 1) * eulerian_number(g - 1, i)
    if i > 0:
        total += (g - i) * eulerian_number(g - 1, i - 1)
    return total


def divisor_euler_exclusion(e: int, g: int) -> bool:
    """True when an ample divisor in a ``g``-dimensional abelian variety cannot have Euler characteristic ``e``.

    For such a divisor ``|chi_top| = n * sum_i A(g, i) = n * g!``.
    """
    if g < 1:
        raise UsageError("g must be positive")
    return abs(e) % factorial(g) != 0


def _outer_bounds(d: int, top: int) -> tuple[int, ...]:
    out = []
    for p in range(d + 1):
        if p in (0, d):
            out.append(top)
        elif p in (1, d - 1):
            out.append(2)
        else:
            out.append(1)
    return tuple(out)


def hodge_lower_bounds(d: int, g: int) -> tuple[int, ...]:
    if d < 1:
        raise UsageError("d must be positive")
    if d > g - 2:
        raise DomainError(f"bounds need codimension at least 2 (d <= g - 2), got d={d}, g={g}")
    return _outer_bounds(d, g - d + 1)


def subspace_hodge_bounds(d: int, dim_v: int) -> tuple[int, ...]:
    if d < 1:
        raise UsageError("d must be positive")
    if dim_v <= d + 1:
        raise DomainError(f"bounds need dim V > d + 1, got d={d}, dim V={dim_v}")
    return _outer_bounds(d, dim_v - d + 1)


def dimension_from_level(row: HodgeRow) -> int:
    return row.ell


def g_max_table(group: str, result: SearchResult) -> dict[int, int]:
    """``g <= d - 1 + h^0`` maximised over the rows of length ``d``."""
    best: dict[int, int] = {}
    for hits in result.rows:
        d = dimension_from_level(hits.row)
        best[d] = max(best.get(d, 0), hits.row.h[0])
    return {d: d - 1 + h0 for d, h0 in sorted(best.items())}


@dataclass(frozen=True)
class FeasibilityEntry:
    group: str
    d: int
    g_range: tuple[int, int]
    hodge_row: HodgeRow
    euler: int

    @property
    def gs(self) -> list[int]:
        return list(range(self.g_range[0], self.g_range[1] + 1))


def feasibility_table(group: str, result: SearchResult, filter_half: bool = True) -> list[FeasibilityEntry]:
    """One entry per Hodge row with a nonempty admissible range of ``g``.

    ``g`` ranges over ``d + 2 <= g <= d - 1 + h^0`` (codimension at least two
    and the outer Hodge estimate), further cut to ``g > 2d`` with ``filter_half``.
    """
    group = group.upper()
    dim_v = GROUP_DIM.get(group, None)
    entries = []
    for hits in result.rows:
        row = hits.row
        d = dimension_from_level(row)
        lo = 2 * d + 1 if filter_half else d + 2
        hi = d - 1 + row.h[0]
        if lo > hi:
            continue
        dv = dim_v if dim_v is not None else row.dim
        entries.append(FeasibilityEntry(group, d, (lo, hi), row, (-1) ** d * dv))
    return sorted(entries, key=lambda e: (e.d, e.hodge_row))


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


@dataclass(frozen=True)
class SurfaceLedger:
    chi_O: int
    c2: int
    c1_sq: int
    chi_omega1: int
    c2_N: int
    deg_pi_candidates: tuple[int, ...]
    deg_gamma_candidates: tuple[int, ...]
    deg_Y_candidates: tuple[int, ...]


def surface_ledger(chi_O: int = 6, c2: int = 27, deg_d_min: int = 6, c1_sq: int | None = None) -> SurfaceLedger:
    """Chern-number ledger of a surface in an abelian variety.

    ``c1_sq`` defaults to Noether's value ``12 chi(O) - c2``; passing it
    explicitly lets callers check externally supplied numbers.
    """
    noether = 12 * chi_O - c2
    if c1_sq is None:
        c1_sq = noether
    elif c1_sq != noether:
        raise InconsistentInputError(f"Noether's formula fails: 12*chi(O) = {12 * chi_O} but c1^2 + c2 = {c1_sq + c2}")
    if c1_sq < 0:
        raise InconsistentInputError(f"Noether's formula gives c1^2 = {c1_sq} < 0 for chi(O)={chi_O}, c2={c2}")
    num = c1_sq - 5 * c2
    if num % 6:
        raise InconsistentInputError(f"chi(Omega^1) = ({c1_sq} - 5*{c2})/6 is not an integer")
    c2_N = c1_sq - c2
    if c2_N <= 0:
        raise InconsistentInputError(f"c2(N) = c1^2 - c2 = {c2_N} must be positive")
    deg_pi = tuple(k for k in _divisors(c2_N) if k >= deg_d_min)
    pi_divisors = {k for p in deg_pi for k in _divisors(p)}
    deg_gamma = tuple(sorted(k for k in pi_divisors if c1_sq % k == 0)) if c1_sq else tuple(sorted(pi_divisors))
    deg_Y = tuple(sorted(c2_N // p for p in deg_pi))
    return SurfaceLedger(chi_O, c2, c1_sq, num // 6, c2_N, deg_pi, deg_gamma, deg_Y)


def minimal_degree_ok(degree: int, codim: int) -> bool:
    """``deg Y >= 1 + codim Y`` for a nondegenerate variety."""
    return degree >= 1 + codim


def fano_hilbert_polynomial(i: int) -> int:
    if i < 0:
        raise UsageError("i must be nonnegative")
    return 45 * (i + 1) * i // 2 - 45 * i + 6
