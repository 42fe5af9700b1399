import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liehodge import lattice as L
from liehodge.errors import ConfigurationError, UsageError

WEYL_ORDER = {"A1": 2, "A2": 6, "A3": 24, "D4": 192, "E6": 51840, "E7": 2903040}
N_POS = {"A1": 1, "A2": 3, "A3": 6, "D4": 12, "E6": 36, "E7": 63}
DET = {"A1": 2, "A2": 3, "A3": 4, "D4": 4, "E6": 3, "E7": 2}


def test_cartan_small():
    assert L.cartan_matrix("A1") == ((2,),)
    assert L.cartan_matrix("A2") == ((2, -1), (-1, 2))


def test_cartan_e6_bourbaki():
    c = L.cartan_matrix("E6")
    assert c[1][3] == c[3][1] == -1
    for i, j in [(1, 3), (3, 4), (4, 5), (5, 6)]:
        assert c[i - 1][j - 1] == c[j - 1][i - 1] == -1
    assert sum(x for row in c for x in row if x < 0) == -10


def test_unsupported_label():
    with pytest.raises(ConfigurationError):
        L.cartan_matrix("G2")
    with pytest.raises(ConfigurationError):
        L.root_system("B3")


@pytest.mark.parametrize("label", L.SUPPORTED)
def test_root_system_invariants(label):
    rs = L.root_system(label)
    c = rs.cartan
    assert all(c[i][i] == 2 for i in range(rs.rank))
    assert all(c[i][j] == c[j][i] and c[i][j] in (0, -1) for i in range(rs.rank) for j in range(rs.rank) if i != j)
    assert len(rs.positive_roots) == N_POS[label]
    assert rs.fundamental_group_order == DET[label]
    assert rs.weyl_vector == (1,) * rs.rank
    # adjoint dimension: roots plus Cartan
    assert 2 * len(rs.positive_roots) + rs.rank == {"A1": 3, "A2": 8, "A3": 15, "D4": 28, "E6": 78, "E7": 133}[label]


def test_positive_roots_a2():
    assert set(L.positive_roots(L.root_system("A2"))) == {(2, -1), (-1, 2), (1, 1)}


def test_simple_reflection_examples():
    assert L.simple_reflection(L.root_system("A1"), 1, (1,)) == (-1,)
    assert L.simple_reflection(L.root_system("A2"), 1, (1, 0)) == (-1, 1)


def test_simple_reflection_involution():
    rng = random.Random(7)
    for _ in range(1000):
        rs = L.root_system(rng.choice(L.SUPPORTED))
        w = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
        j = rng.randint(1, rs.rank)
        assert L.simple_reflection(rs, j, L.simple_reflection(rs, j, w)) == w


@pytest.mark.parametrize(
    "label, weight, size",
    [
        ("E6", (1, 0, 0, 0, 0, 0), 27),
        ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
        ("E6", (1, 0, 0, 0, 0, 1), 270),
        ("E6", (0, 1, 0, 0, 0, 0), 72),
    ],
)
def test_orbit_sizes(label, weight, size):
    rs = L.root_system(label)
    orbit = L.weyl_orbit(rs, weight)
    assert len(orbit) == size
    assert WEYL_ORDER[label] % size == 0
    assert [w for w in orbit if L.is_dominant(w)] == [weight]


def test_orbit_ledger_consistency_e6():
    rs = L.root_system("E6")
    sizes = [len(L.weyl_orbit(rs, w)) for w in [(0,) * 6, (0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 1)]]
    assert 20 * sizes[0] + 5 * sizes[1] + sizes[2] == 650


def test_dominant_representative():
    assert L.dominant_representative(L.root_system("A1"), (-3,)) == (3,)
    rs = L.root_system("E6")
    for w in L.weyl_orbit(rs, (1, 0, 0, 0, 0, 0)):
        assert L.dominant_representative(rs, w) == (1, 0, 0, 0, 0, 0)
    for w in [(0, 0, 0, 0, 0, 0), (2, 1, 0, 3, 0, 1)]:
        assert L.dominant_representative(rs, w) == w


def test_dominant_representative_constant_on_orbit():
    rs = L.root_system("D4")
    orbit = L.weyl_orbit(rs, (1, 1, 0, 2))
    assert {L.dominant_representative(rs, w) for w in orbit} == {(1, 1, 0, 2)}


def test_pairing_dual_bases_and_rank_check():
    for i in range(6):
        for j in range(6):
            e_i = tuple(int(k == i) for k in range(6))
            e_j = tuple(int(k == j) for k in range(6))
            assert L.pairing(e_i, e_j) == int(i == j)
    with pytest.raises(UsageError):
        L.pairing((1, 2), (1, 2, 3))


def test_pairing_doubled_highest_coroot_with_first_weight():
    rs = L.root_system("E6")
    theta = rs.positive_coroots[rs.positive_roots.index(rs.highest_root)]
    assert L.pairing(L.scale(2, theta), (1, 0, 0, 0, 0, 0)) == 2


@given(
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.integers(-4, 4),
)
def test_pairing_bilinear(a, b, m, k):
    lhs = L.pairing(tuple(x + k * y for x, y in zip(a, b)), tuple(m))
    assert lhs == L.pairing(tuple(a), tuple(m)) + k * L.pairing(tuple(b), tuple(m))


def test_inner_product_examples():
    assert L.inner_product(L.root_system("A1"), (1,), (1,)) == Fraction(1, 2)
    e6 = L.root_system("E6")
    assert L.inner_product(e6, (1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0)) == Fraction(4, 3)


@pytest.mark.parametrize("label", L.SUPPORTED)
def test_roots_have_norm_two_and_integral_pairings(label):
    rs = L.root_system(label)
    rng = random.Random(label)
    for alpha, coroot in zip(rs.positive_roots, rs.positive_coroots):
        assert L.inner_product(rs, alpha, alpha) == 2
        mu = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
        assert 2 * L.inner_product(rs, mu, alpha) / L.inner_product(rs, alpha, alpha) == L.pairing(coroot, mu)


@settings(max_examples=60)
@given(st.data())
def test_reflection_preserves_inner_product(data):
    label = data.draw(st.sampled_from(L.SUPPORTED))
    rs = L.root_system(label)
    vec = st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank).map(tuple)
    mu, nu = data.draw(vec), data.draw(vec)
    j = data.draw(st.integers(1, rs.rank))
    assert L.inner_product(rs, L.simple_reflection(rs, j, mu), L.simple_reflection(rs, j, nu)) == L.inner_product(rs, mu, nu)


def test_inner_product_positive_definite():
    rs = L.root_system("E7")
    rng = random.Random(3)
    for _ in range(200):
        mu = tuple(rng.randint(-3, 3) for _ in range(7))
        if any(mu):
            assert L.inner_product(rs, mu, mu) > 0


def test_coweight_dominance_agrees_with_pairings():
    rs = L.root_system("E6")
    rng = random.Random(11)
    simple = [rs.simple_root(j) for j in range(1, 7)]
    for _ in range(300):
        lam = tuple(rng.randint(-4, 6) for _ in range(6))
        assert L.is_dominant_coweight(rs, lam) == all(L.pairing(lam, a) >= 0 for a in simple)


def test_reflect_coweight_matches_weight_side():
    # <s_j lam, mu> = <lam, s_j mu>
    rs = L.root_system("E7")
    rng = random.Random(5)
    for _ in range(200):
        lam = tuple(rng.randint(-5, 5) for _ in range(7))
        mu = tuple(rng.randint(-5, 5) for _ in range(7))
        j = rng.randint(1, 7)
        assert L.pairing(L.reflect_coweight(rs, j, lam), mu) == L.pairing(lam, L.simple_reflection(rs, j, mu))
