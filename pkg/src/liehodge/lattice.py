"""Root systems, Weyl group orbits and lattice pairings for simply-laced types.

Coordinates
-----------
Weights (including roots and highest weights) are tuples of Dynkin labels,
i.e. their pairings with the simple coroots.  Coweights are tuples of
coordinates in the simple-coroot basis.  With these conventions the pairing
of a coweight with a weight is a plain integer dot product, and a simple root
``alpha_j`` has Dynkin labels equal to the j-th column of the Cartan matrix.

Node numbering follows Bourbaki.  For E6 the nodes 1-3-4-5-6 form a chain
and node 2 hangs off node 4; E7 extends the chain by node 7.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import ConfigurationError, UsageError

Weight = tuple[int, ...]
Coweight = tuple[int, ...]

SUPPORTED = ("A1", "A2", "A3", "D4", "E6", "E7")

# Bourbaki edges of the Dynkin diagram, 1-based.
_EDGES = {
    "A1": (),
    "A2": ((1, 2),),
    "A3": ((1, 2), (2, 3)),
    "D4": ((1, 2), (2, 3), (2, 4)),
    "E6": ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    "E7": ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
}
_RANK = {"A1": 1, "A2": 2, "A3": 3, "D4": 4, "E6": 6, "E7": 7}


def cartan_matrix(label: str) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix of a supported simply-laced type."""
    key = str(label).upper()
    if key not in _EDGES:
        raise ConfigurationError(f"unsupported root system {label!r}; expected one of {SUPPORTED}")
    n = _RANK[key]
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _EDGES[key]:
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = -1
    return tuple(tuple(r) for r in rows)


def _determinant(m: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    assert det.denominator == 1
    return int(det)


def _inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum of a simple simply-laced type."""

    label: str

    def __post_init__(self):
        object.__setattr__(self, "label", str(self.label).upper())
        cartan_matrix(self.label)  # validates

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return cartan_matrix(self.label)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def fundamental_group_order(self) -> int:
        return _determinant(self.cartan)

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan)

    @cached_property
    def cartan_adjugate(self) -> tuple[tuple[int, ...], ...]:
        """``det(C) * C^-1``, an integer matrix."""
        det = self.fundamental_group_order
        out = []
        for row in self.cartan_inverse:
            scaled = [x * det for x in row]
            assert all(x.denominator == 1 for x in scaled)
            out.append(tuple(int(x) for x in scaled))
        return tuple(out)

    @property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    def simple_root(self, j: int) -> Weight:
        """Dynkin labels of the simple root at 1-based node ``j``."""
        self._check_node(j)
        return tuple(row[j - 1] for row in self.cartan)

    def fundamental_weight(self, i: int) -> Weight:
        self._check_node(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def root_coordinates(self, w: Weight) -> tuple[Fraction, ...]:
        """Expansion of ``w`` in the basis of simple roots."""
        inv = self.cartan_inverse
        return tuple(sum((inv[i][k] * w[k] for k in range(self.rank)), Fraction(0)) for i in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        roots = set()
        for j in range(1, self.rank + 1):
            roots |= weyl_orbit(self, self.simple_root(j))
        pos = [r for r in roots if all(c >= 0 for c in self.root_coordinates(r))]
        return tuple(sorted(pos, key=lambda r: (self.height(r), r)))

    @cached_property
    def positive_coroots(self) -> tuple[Coweight, ...]:
        """Coroots of :attr:`positive_roots` in the simple-coroot basis (same order)."""
        return tuple(tuple(int(c) for c in self.root_coordinates(r)) for r in self.positive_roots)

    @cached_property
    def highest_root(self) -> Weight:
        return max(self.positive_roots, key=self.height)

    def height(self, root: Weight) -> int:
        h = sum(self.root_coordinates(root))
        assert h.denominator == 1
        return int(h)

    def _check_node(self, j: int) -> None:
        if not 1 <= j <= self.rank:
            raise UsageError(f"node {j} out of range 1..{self.rank} for {self.label}")

    def _check_weight(self, w: Sequence[int]) -> None:
        if len(w) != self.rank:
            raise UsageError(f"expected a vector of length {self.rank} for {self.label}, got {len(w)}")


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    return RootSystem(label)


def positive_roots(rs: RootSystem) -> list[Weight]:
    return list(rs.positive_roots)


def simple_reflection(rs: RootSystem, j: int, w: Weight) -> Weight:
    """Apply ``s_j``: ``w - <w, alpha_j^vee> alpha_j`` in Dynkin labels."""
    m = w[j - 1]
    if m == 0:
        return tuple(w)
    col = j - 1
    return tuple(w[k] - m * rs.cartan[k][col] for k in range(len(w)))


def reflect_coweight(rs: RootSystem, j: int, lam: Coweight) -> Coweight:
    """Apply ``s_j`` to a coweight given in simple-coroot coordinates."""
    c = rs.cartan[j - 1]
    value = sum(c[k] * lam[k] for k in range(len(lam)))  # <lam, alpha_j>
    out = list(lam)
    out[j - 1] -= value
    return tuple(out)


def weyl_orbit(rs: RootSystem, w: Weight) -> set[Weight]:
    w = tuple(int(x) for x in w)
    rs._check_weight(w)
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for j in range(1, rs.rank + 1):
            if x[j - 1] != 0:
                y = simple_reflection(rs, j, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return seen


def is_dominant(w: Iterable[int]) -> bool:
    return all(x >= 0 for x in w)


def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    w = tuple(w)
    while True:
        for j, m in enumerate(w, start=1):
            if m < 0:
                w = simple_reflection(rs, j, w)
                break
        else:
            return w


def is_dominant_coweight(rs: RootSystem, lam: Coweight) -> bool:
    return all(sum(c * x for c, x in zip(row, lam)) >= 0 for row in rs.cartan)


def coweight_values(rs: RootSystem, lam: Coweight) -> tuple[int, ...]:
    """Values ``<lam, alpha_j>`` on the simple roots, i.e. ``C . lam``."""
    return tuple(sum(c * x for c, x in zip(row, lam)) for row in rs.cartan)


def pairing(lam: Coweight, mu: Weight) -> int:
    if len(lam) != len(mu):
        raise UsageError(f"rank mismatch: coweight of length {len(lam)} vs weight of length {len(mu)}")
    return sum(a * m for a, m in zip(lam, mu))


def inner_product(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    """Invariant form normalised so that every root has squared length 2."""
    rs._check_weight(mu)
    rs._check_weight(nu)
    adj = rs.cartan_adjugate
    n = rs.rank
    total = sum(mu[i] * adj[i][k] * nu[k] for i in range(n) for k in range(n))
    return Fraction(total, rs.fundamental_group_order)


def add(mu: Weight, nu: Weight) -> Weight:
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Weight, nu: Weight) -> Weight:
    return tuple(a - b for a, b in zip(mu, nu))


def scale(k: int, mu: Weight) -> Weight:
    return tuple(k * a for a in mu)
