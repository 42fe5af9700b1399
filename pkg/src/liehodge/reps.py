"""Characters of irreducible representations and their tensor calculus.

A :class:`Character` is a Weyl-invariant map from weights to multiplicities.
Irreducible characters come from the Freudenthal recursion; arbitrary
characters are split into irreducibles by peeling off the weight of largest
``(mu + rho, mu + rho)`` until nothing is left.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from . import lattice as L
from .errors import DomainError, NotACharacterError, UsageError
from .lattice import RootSystem, Weight


@dataclass(frozen=True)
class Character:
    rs: RootSystem
    mults: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(w): int(m) for w, m in self.mults.items() if m != 0}
        object.__setattr__(self, "mults", clean)

    @property
    def dim(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, w: Weight) -> int:
        return self.mults.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.mults)

    def weights(self) -> list[Weight]:
        return sorted(self.mults)

    def instances(self) -> list[Weight]:
        """Weights repeated by multiplicity, in a fixed order."""
        return [w for w in sorted(self.mults) for _ in range(self.mults[w])]

    def dominant_part(self) -> dict[Weight, int]:
        return {w: m for w, m in self.mults.items() if L.is_dominant(w)}

    def __add__(self, other: "Character") -> "Character":
        _same_rs(self, other)
        acc = Counter(self.mults)
        acc.update(other.mults)
        return Character(self.rs, acc)

    def __sub__(self, other: "Character") -> "Character":
        _same_rs(self, other)
        acc = dict(self.mults)
        for w, m in other.mults.items():
            acc[w] = acc.get(w, 0) - m
        return Character(self.rs, acc)

    def scaled(self, k: int) -> "Character":
        return Character(self.rs, {w: k * m for w, m in self.mults.items()})

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.rs == other.rs and self.mults == other.mults

    def __hash__(self):
        return hash((self.rs, frozenset(self.mults.items())))


@dataclass(frozen=True)
class OrbitCharacter:
    """A character written in the basis of Weyl orbit sums ``[mu]``."""

    rs: RootSystem
    coeffs: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(w): int(c) for w, c in self.coeffs.items() if c != 0}
        for w in clean:
            if not L.is_dominant(w):
                raise UsageError(f"orbit keys must be dominant, got {w}")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, w: Weight) -> int:
        return self.coeffs.get(tuple(w), 0)

    def __add__(self, other: "OrbitCharacter") -> "OrbitCharacter":
        acc = Counter(self.coeffs)
        acc.update(other.coeffs)
        return OrbitCharacter(self.rs, acc)

    def expand(self) -> Character:
        mults: dict[Weight, int] = {}
        for mu, c in self.coeffs.items():
            for w in L.weyl_orbit(self.rs, mu):
                mults[w] = mults.get(w, 0) + c
        return Character(self.rs, mults)


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of irreducible summands keyed by highest weight."""

    rs: RootSystem
    summands: Mapping[Weight, int]

    def __post_init__(self):
        object.__setattr__(self, "summands", dict(sorted((tuple(k), int(v)) for k, v in self.summands.items())))

    @property
    def dim(self) -> int:
        return sum(m * weyl_dimension(self.rs, hw) for hw, m in self.summands.items())

    def items_by_dimension(self) -> list[tuple[Weight, int, int]]:
        """``(highest weight, dimension, multiplicity)`` sorted by decreasing dimension."""
        rows = [(hw, weyl_dimension(self.rs, hw), m) for hw, m in self.summands.items()]
        return sorted(rows, key=lambda r: (-r[1], r[0]))

    def character(self) -> Character:
        total = Character(self.rs)
        for hw, m in self.summands.items():
            total = total + freudenthal_character(self.rs, hw).scaled(m)
        return total


class FormType(str, Enum):
    NONE = "none"
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"


def _same_rs(a, b) -> None:
    if a.rs != b.rs:
        raise UsageError(f"characters live on different root systems ({a.rs.label} vs {b.rs.label})")


def _require_dominant(lam: Weight) -> Weight:
    lam = tuple(int(x) for x in lam)
    if not L.is_dominant(lam):
        raise UsageError(f"highest weight must be dominant, got {lam}")
    return lam


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    lam = _require_dominant(lam)
    rs._check_weight(lam)
    shifted = L.add(lam, rs.weyl_vector)
    num = den = 1
    for coroot in rs.positive_coroots:
        num *= L.pairing(coroot, shifted)
        den *= L.pairing(coroot, rs.weyl_vector)
    dim = Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


def _norm_key(rs: RootSystem, mu: Weight) -> Fraction:
    shifted = L.add(mu, rs.weyl_vector)
    return L.inner_product(rs, shifted, shifted)


def dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights of the irreducible module ``V_lam``.

    Every dominant weight below ``lam`` is reachable from ``lam`` by
    subtracting positive roots without leaving the dominant chamber.
    """
    lam = _require_dominant(lam)
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for alpha in rs.positive_roots:
            nu = L.sub(mu, alpha)
            if L.is_dominant(nu) and nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda mu: (-_norm_key(rs, mu), mu))


@lru_cache(maxsize=256)
def dominant_multiplicities(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """Freudenthal multiplicities on the dominant weights of ``V_lam``."""
    lam = _require_dominant(lam)
    rs._check_weight(lam)
    order = dominant_weights(rs, lam)
    top = _norm_key(rs, lam)
    mult: dict[Weight, int] = {lam: 1}

    def lookup(nu: Weight) -> int:
        return mult.get(L.dominant_representative(rs, nu), 0)

    for mu in order[1:]:
        acc = 0
        for alpha, coroot in zip(rs.positive_roots, rs.positive_coroots):
            nu = L.add(mu, alpha)
            while True:
                m = lookup(nu)
                if m == 0:
                    break  # root strings are unbroken
                acc += m * L.pairing(coroot, nu)
                nu = L.add(nu, alpha)
        value = Fraction(2 * acc) / (top - _norm_key(rs, mu))
        if value.denominator != 1:
            raise AssertionError(f"non-integral Freudenthal multiplicity at {mu}: {value}")
        mult[mu] = int(value)
    return tuple((mu, mult[mu]) for mu in order)


def freudenthal_character(rs: RootSystem, lam: Weight) -> Character:
    mults: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(rs, tuple(lam)):
        for w in L.weyl_orbit(rs, mu):
            mults[w] = m
    return Character(rs, mults)


def is_minuscule(rs: RootSystem, i: int) -> bool:
    w = rs.fundamental_weight(i)
    return len(L.weyl_orbit(rs, w)) == weyl_dimension(rs, w)


def minuscule_character(rs: RootSystem, i: int) -> Character:
    w = rs.fundamental_weight(i)
    orbit = L.weyl_orbit(rs, w)
    dim = weyl_dimension(rs, w)
    if len(orbit) != dim:
        raise DomainError(
            f"node {i} of {rs.label} is not minuscule: orbit of size {len(orbit)} but dimension {dim}"
        )
    return Character(rs, {mu: 1 for mu in orbit})


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {(0,) * rs.rank: 1})


def adjoint_character(rs: RootSystem) -> Character:
    mults = {(0,) * rs.rank: rs.rank}
    for alpha in rs.positive_roots:
        mults[alpha] = 1
        mults[L.scale(-1, alpha)] = 1
    return Character(rs, mults)


def dual_highest_weight(rs: RootSystem, lam: Weight) -> Weight:
    lam = _require_dominant(lam)
    return L.dominant_representative(rs, L.scale(-1, lam))


def dual_character(c: Character) -> Character:
    return Character(c.rs, {L.scale(-1, w): m for w, m in c.mults.items()})


def tensor_character(c1: Character, c2: Character) -> Character:
    _same_rs(c1, c2)
    acc: dict[Weight, int] = {}
    for w1, m1 in c1.mults.items():
        for w2, m2 in c2.mults.items():
            w = L.add(w1, w2)
            acc[w] = acc.get(w, 0) + m1 * m2
    return Character(c1.rs, acc)


def _square(c: Character, strict: bool) -> Character:
    inst = c.instances()
    acc: dict[Weight, int] = {}
    for i, w1 in enumerate(inst):
        for w2 in inst[i + 1 if strict else i:]:
            w = L.add(w1, w2)
            acc[w] = acc.get(w, 0) + 1
    return Character(c.rs, acc)


def sym2_character(c: Character) -> Character:
    return _square(c, strict=False)


def alt2_character(c: Character) -> Character:
    return _square(c, strict=True)


def decompose(rs: RootSystem, c: Character) -> Decomposition:
    """Split a character into irreducibles by greedy peeling."""
    if c.rs != rs:
        raise UsageError("character does not belong to the given root system")
    remaining = dict(c.mults)
    summands: dict[Weight, int] = {}
    while remaining:
        top = max(remaining, key=lambda mu: (_norm_key(rs, mu), mu))
        k = remaining[top]
        if k < 0 or not L.is_dominant(top):
            raise NotACharacterError(f"not a true character: weight {top} has multiplicity {k} when peeled")
        summands[top] = summands.get(top, 0) + k
        for mu, m in freudenthal_character(rs, top).mults.items():
            left = remaining.get(mu, 0) - k * m
            if left < 0:
                raise NotACharacterError(
                    f"not a true character: weight {mu} goes negative ({left}) after removing {k} x V{top}"
                )
            if left:
                remaining[mu] = left
            else:
                remaining.pop(mu, None)
    return Decomposition(rs, summands)


def orbit_character(rs: RootSystem, c: Character) -> OrbitCharacter:
    """Coefficients in the orbit-sum basis.

    Distinct dominant weights have disjoint orbits, so the coefficient of
    ``[mu]`` is simply the multiplicity of ``mu``.
    """
    if c.rs != rs:
        raise UsageError("character does not belong to the given root system")
    return OrbitCharacter(rs, c.dominant_part())


class CycleLedger(NamedTuple):
    without_unit: OrbitCharacter
    with_unit: OrbitCharacter
    summands: tuple[tuple[Weight, OrbitCharacter], ...]


def cc_multiplicity_ledger(rs: RootSystem) -> CycleLedger:
    """Orbit ledger of the non-trivial summands of ``V (x) V^dual`` for the 27 of E6."""
    if rs.label != "E6":
        raise DomainError(f"the multiplicity ledger is defined for E6 only, got {rs.label}")
    v = minuscule_character(rs, 1)
    square = tensor_character(v, dual_character(v))
    dec = decompose(rs, square)
    zero = (0,) * rs.rank
    parts = []
    total = OrbitCharacter(rs)
    for hw in dec.summands:
        if hw == zero:
            continue
        oc = orbit_character(rs, freudenthal_character(rs, hw)).coeffs
        oc = OrbitCharacter(rs, {w: c * dec.summands[hw] for w, c in oc.items()})
        parts.append((hw, oc))
        total = total + oc
    with_unit = total + OrbitCharacter(rs, {zero: dec.summands.get(zero, 0)})
    return CycleLedger(total, with_unit, tuple(parts))


def invariant_form_type(rs: RootSystem, lam: Weight) -> FormType:
    lam = _require_dominant(lam)
    if dual_highest_weight(rs, lam) != lam:
        return FormType.NONE
    zero = (0,) * rs.rank
    v = freudenthal_character(rs, lam)
    alt = decompose(rs, alt2_character(v)).summands.get(zero, 0)
    sym = decompose(rs, sym2_character(v)).summands.get(zero, 0)
    if (alt, sym) == (1, 0):
        return FormType.SYMPLECTIC
    if (alt, sym) == (0, 1):
        return FormType.ORTHOGONAL
    raise AssertionError(f"self-dual irreducible with trivial multiplicities alt={alt}, sym={sym}")


def character_from_weights(rs: RootSystem, weights: Iterable[Weight]) -> Character:
    return Character(rs, Counter(tuple(w) for w in weights))
