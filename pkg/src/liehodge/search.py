"""Exhaustive search for cocharacters with Hodge-like gradings.

A cocharacter ``lam`` of the simply connected group is an element of the
coroot lattice.  It grades a representation ``V`` by ``n = <lam, chi>`` over
the weights ``chi`` of ``V``.  The search keeps the gradings satisfying

* H1  ``dim V^n = dim V^-n``;
* H2  the nonzero levels are exactly ``{2i - ell : 0 <= i <= ell}``;
* H3  ``dim V^(ell-2) >= 2`` and ``dim V^ell >= 3``.

Up to conjugacy it is enough to look at dominant ``lam``, and every level is
bounded by ``dim V - 1`` once H2 holds, so the search space is finite.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

import numpy as np

from . import lattice as L
from .errors import DomainError, InvariantViolation, UsageError
from .lattice import Coweight, RootSystem
from .reps import Character, dual_highest_weight, minuscule_character

try:
    from ._scan import BACKEND, scan as _kernel_scan
except ImportError:  # extension not built
    from ._scan_py import BACKEND, scan as _kernel_scan

log = logging.getLogger(__name__)

DEFAULT_NODE = {"E6": 1, "E7": 7, "A1": 1, "A2": 1, "A3": 1, "D4": 1}


@dataclass(frozen=True)
class Grading:
    levels: Mapping[int, int]

    def __post_init__(self):
        object.__setattr__(self, "levels", dict(sorted((int(n), int(m)) for n, m in self.levels.items() if m)))

    @property
    def dim(self) -> int:
        return sum(self.levels.values())

    @property
    def span(self) -> int:
        return max(self.levels) - min(self.levels) if self.levels else 0

    def dims(self) -> tuple[int, ...]:
        return tuple(self.levels.values())

    def support(self) -> tuple[int, ...]:
        return tuple(self.levels)


@dataclass(frozen=True, order=True)
class HodgeRow:
    ell: int
    h: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        if len(self.h) != self.ell + 1:
            raise UsageError(f"a row of length {self.ell} needs {self.ell + 1} entries, got {len(self.h)}")

    @property
    def dim(self) -> int:
        return sum(self.h)

    def __str__(self):
        return "(" + ",".join(map(str, self.h)) + ")"


class RowHits(NamedTuple):
    row: HodgeRow
    witnesses: tuple[Coweight, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)


@dataclass(frozen=True)
class SearchResult:
    label: str
    rows: tuple[RowHits, ...]
    bound: int
    parity: Optional[str]
    candidates: int = field(default=0)

    def row_set(self) -> list[HodgeRow]:
        return [r.row for r in self.rows]

    def find(self, row: HodgeRow) -> RowHits:
        for r in self.rows:
            if r.row == row:
                return r
        raise DomainError(f"row {row} does not occur in the {self.label} search result")


class NamedCocharacter(NamedTuple):
    coweight: Coweight
    simple_root_values: tuple[int, ...]
    description: str


def grading(c: Character, lam: Coweight) -> Grading:
    lam = tuple(lam)
    if len(lam) != c.rs.rank:
        raise UsageError(f"rank mismatch: coweight of length {len(lam)} for {c.rs.label}")
    levels: dict[int, int] = {}
    for w, m in c.mults.items():
        n = L.pairing(lam, w)
        levels[n] = levels.get(n, 0) + m
    return Grading(levels)


def check_hodge_properties(g: Grading) -> Optional[HodgeRow]:
    lv = g.levels
    if not lv:
        return None
    if any(lv.get(-n, 0) != m for n, m in lv.items()):
        return None
    ell = max(lv)
    if ell < 0 or set(lv) != {2 * i - ell for i in range(ell + 1)}:
        return None
    if lv.get(ell - 2, 0) < 2 or lv.get(ell, 0) < 3:
        return None
    return HodgeRow(ell, tuple(lv[2 * i - ell] for i in range(ell + 1)))


def default_representation(rs: RootSystem) -> Character:
    return minuscule_character(rs, DEFAULT_NODE[rs.label])


def _constraint_rows(rs: RootSystem, rep: Character) -> list[tuple[int, ...]]:
    """Linear forms in ``d`` giving ``det * <lam, chi>`` for the extreme weights.

    For dominant ``lam`` the largest level comes from a dominant weight and
    the most negative one from the negative of a dominant weight of the dual.
    """
    if not rep.mults:
        raise UsageError("cannot search on an empty character")
    extremes = set()
    for w in rep.dominant_part():
        extremes.add(w)
        extremes.add(dual_highest_weight(rs, w))
    adj = rs.cartan_adjugate
    rows = {tuple(sum(adj[j][i] * w[i] for i in range(rs.rank)) for j in range(rs.rank)) for w in extremes}
    rows = {r for r in rows if any(r)}
    # drop forms dominated entrywise by another one
    kept = sorted(r for r in rows if not any(o != r and all(x <= y for x, y in zip(r, o)) for o in rows))
    covered = [any(r[j] > 0 for r in kept) for j in range(rs.rank)]
    if not all(covered):
        raise DomainError(f"{rs.label} representation has positive-dimensional kernel; search space is infinite")
    return kept


def enumerate_dominant_cocharacters(rs: RootSystem, rep: Character, bound: int) -> Iterator[Coweight]:
    """Dominant coroot-lattice points with every ``|<lam, chi>| <= bound``.

    Points come out in lexicographic order of their simple-root values ``C . lam``.
    """
    if bound < 1:
        raise UsageError("bound must be at least 1")
    cons = _constraint_rows(rs, rep)
    det = rs.fundamental_group_order
    adj = rs.cartan_adjugate
    r = rs.rank

    def rec(prefix: list[int], budgets: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(prefix)
        if j == r:
            yield tuple(prefix)
            return
        v = 0
        while all(b - v * k[j] >= 0 for b, k in zip(budgets, cons)):
            yield from rec(prefix + [v], [b - v * k[j] for b, k in zip(budgets, cons)])
            v += 1

    for d in rec([], [bound * det] * len(cons)):
        scaled = [sum(adj[i][j] * d[j] for j in range(r)) for i in range(r)]
        if all(x % det == 0 for x in scaled):
            yield tuple(x // det for x in scaled)


def _prefixes(cons: Sequence[Sequence[int]], budget: int, depth: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, budgets):
        j = len(prefix)
        if j == depth:
            out.append(tuple(prefix))
            return
        v = 0
        while all(b - v * k[j] >= 0 for b, k in zip(budgets, cons)):
            rec(prefix + [v], [b - v * k[j] for b, k in zip(budgets, cons)])
            v += 1

    rec([], [budget] * len(cons))
    return out


def _split(items: list, k: int) -> list[list]:
    k = max(1, min(k, len(items))) if items else 1
    return [items[i::k] for i in range(k)]


def _verify_row(rs, rep, lam) -> HodgeRow:
    row = check_hodge_properties(grading(rep, lam))
    if row is None:
        raise InvariantViolation(f"kernel reported {lam} but its grading fails H1-H3")
    return row


def scan_hits(
    rs: RootSystem,
    rep: Character,
    bound: int,
    *,
    chunks: int = 1,
    threads: int = 1,
    scanner=None,
) -> tuple[list[Coweight], int]:
    """Dominant coweights passing H1-H3, sorted by ``C . lam``; plus the candidate count."""
    scanner = scanner or _kernel_scan
    cons = _constraint_rows(rs, rep)
    det = rs.fundamental_group_order
    adj = np.array(rs.cartan_adjugate, dtype=np.int64)
    weights = np.array(rep.instances(), dtype=np.int64)
    budget = bound * det
    depth = max(0, rs.rank - 4)
    prefixes = _prefixes(cons, budget, depth)
    groups = _split(prefixes, chunks)

    def run(group):
        found = []
        total = 0
        for p in group:
            hits, n = scanner(adj, det, weights, np.array(cons, dtype=np.int64), budget, np.array(p, dtype=np.int64))
            found.extend(tuple(int(x) for x in h) for h in hits)
            total += n
        return found, total

    if threads > 1 and len(groups) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, groups))
    else:
        parts = [run(g) for g in groups]
    values = sorted({d for found, _ in parts for d in found})
    candidates = sum(n for _, n in parts)
    coweights = []
    for d in values:
        scaled = [sum(adj[i][j] * d[j] for j in range(rs.rank)) for i in range(rs.rank)]
        coweights.append(tuple(int(x) // det for x in scaled))
    return coweights, candidates


def search_hodge_rows(
    rs: RootSystem,
    rep: Optional[Character] = None,
    bound: Optional[int] = None,
    parity: Optional[str] = None,
    *,
    chunks: int = 1,
    threads: int = 1,
    scanner=None,
) -> SearchResult:
    rep = rep if rep is not None else default_representation(rs)
    if bound is None:
        bound = rep.dim - 1
    if parity not in (None, "odd", "even"):
        raise UsageError(f"parity must be 'odd', 'even' or None, got {parity!r}")
    hits, candidates = scan_hits(rs, rep, bound, chunks=chunks, threads=threads, scanner=scanner)
    log.debug("%s: %d candidates, %d hits (backend %s)", rs.label, candidates, len(hits), BACKEND)
    by_row: dict[HodgeRow, list[Coweight]] = {}
    for lam in hits:
        row = _verify_row(rs, rep, lam)
        if parity == "odd" and row.ell % 2 == 0:
            continue
        if parity == "even" and row.ell % 2 == 1:
            continue
        by_row.setdefault(row, []).append(lam)
    rows = tuple(
        RowHits(row, tuple(sorted(ws, key=lambda lam: L.coweight_values(rs, lam))))
        for row, ws in sorted(by_row.items())
    )
    return SearchResult(rs.label, rows, bound, parity, candidates)


@lru_cache(maxsize=8)
def default_search(label: str) -> SearchResult:
    """The search with the default representation, bound and parity of a group."""
    rs = L.root_system(label)
    parity = "odd" if rs.label == "E7" else None
    return search_hodge_rows(rs, parity=parity)


def describe_coweight(rs: RootSystem, lam: Coweight) -> str:
    parts = [f"coroot coordinates {tuple(lam)}"]
    theta = rs.positive_coroots[rs.positive_roots.index(rs.highest_root)]
    ratio = {Fraction(a, t) for a, t in zip(lam, theta)}
    if len(ratio) == 1:
        (k,) = ratio
        if k.denominator == 1 and k > 0:
            parts.append(f"{k} x coroot of the highest root")
    values = L.coweight_values(rs, lam)
    nonzero = [j for j, v in enumerate(values, start=1) if v]
    if len(nonzero) == 1:
        j = nonzero[0]
        parts.append(f"{values[j - 1]} x fundamental coweight {j}")
    return "; ".join(parts)


def identify_named_cocharacter(
    rs: RootSystem, row: HodgeRow, result: Optional[SearchResult] = None
) -> list[NamedCocharacter]:
    result = result if result is not None else default_search(rs.label)
    hits = result.find(row)
    return [NamedCocharacter(lam, L.coweight_values(rs, lam), describe_coweight(rs, lam)) for lam in hits.witnesses]
