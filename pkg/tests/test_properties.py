"""Randomized algebraic laws over the core types."""

from hypothesis import given, settings
from hypothesis import strategies as st

from qblocks.charring import FormalCharacter, Truncation, subset_sum_P, verma_char
from qblocks.filtration import FlagMultiset, verma_flag_extract
from qblocks.lattice import (
    Weight,
    height,
    leq,
    rho,
    weight_from_simple_coefficients,
)
from qblocks.weyl import Perm, same_block

ranks = st.integers(min_value=2, max_value=5)


@st.composite
def weights(draw, rank=None):
    n = rank if rank is not None else draw(ranks)
    coords = draw(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n)
    )
    return Weight(tuple(coords))


@st.composite
def cone_elements(draw, rank):
    coeffs = draw(
        st.lists(
            st.integers(0, 4), min_size=rank - 1, max_size=rank - 1
        )
    )
    return weight_from_simple_coefficients(rank, tuple(coeffs))


@st.composite
def weight_cone_pairs(draw):
    n = draw(ranks)
    lam = draw(weights(rank=n))
    u = draw(cone_elements(rank=n))
    v = draw(cone_elements(rank=n))
    return lam, u, v


@st.composite
def perms(draw, rank=None):
    n = rank if rank is not None else draw(ranks)
    images = draw(st.permutations(list(range(1, n + 1))))
    return Perm(tuple(images))


@st.composite
def perm_pairs_with_weight(draw):
    n = draw(ranks)
    return draw(perms(rank=n)), draw(perms(rank=n)), draw(weights(rank=n))


@given(weights())
def test_leq_reflexive(lam):
    assert leq(lam, lam)


@given(weight_cone_pairs())
def test_leq_transitive_up_the_cone(data):
    lam, u, v = data
    assert leq(lam, lam + u)
    assert leq(lam + u, lam + u + v)
    assert leq(lam, lam + u + v)


@given(weight_cone_pairs())
def test_leq_antisymmetric(data):
    lam, u, _ = data
    if leq(lam + u, lam):
        assert u == Weight.zero(lam.rank)


@given(weight_cone_pairs())
def test_height_additive(data):
    _, u, v = data
    assert height(u + v) == height(u) + height(v)


@given(perm_pairs_with_weight())
def test_plain_action_composes(data):
    u, v, lam = data
    assert (u * v).act(lam) == u.act(v.act(lam))


@given(perm_pairs_with_weight())
def test_dot_action_composes(data):
    u, v, lam = data
    assert (u * v).dot(lam) == u.dot(v.dot(lam))


@given(perm_pairs_with_weight())
def test_actions_invert(data):
    u, _, lam = data
    assert u.inverse().act(u.act(lam)) == lam
    assert u.inverse().dot(u.dot(lam)) == lam


@given(perms())
def test_identity_fixes_everything(w):
    n = w.rank
    e = Perm.identity(n)
    assert e * w == w * e == w


@given(weights(), st.randoms(use_true_random=False))
def test_dominant_rearrangement_tops_orbit(lam, rng):
    dominant = Weight(tuple(sorted(lam.coords, reverse=True)))
    images = list(range(1, lam.rank + 1))
    rng.shuffle(images)
    w = Perm(tuple(images))
    assert leq(w.act(dominant), dominant)


@given(perm_pairs_with_weight())
def test_block_membership_is_symmetric(data):
    u, _, lam = data
    mu = u.dot(lam)
    assert same_block(lam, mu)
    assert same_block(mu, lam)


@st.composite
def sparse_characters(draw, rank=3):
    entries = draw(
        st.dictionaries(
            weights(rank=rank),
            st.integers(-5, 5).filter(bool),
            max_size=5,
        )
    )
    return FormalCharacter(rank, entries)


@given(sparse_characters(), sparse_characters())
def test_mass_multiplies(a, b):
    assert (a * b).mass() == a.mass() * b.mass()


@given(sparse_characters(), sparse_characters(), sparse_characters())
def test_convolution_laws(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c


@st.composite
def small_flags(draw):
    # multiplicity pattern over the height-2 region below a rank-2 base
    base = Weight((4, -4))
    offsets = [Weight.zero(2)] + [
        weight_from_simple_coefficients(2, (k,)) for k in (1, 2)
    ]
    mults = draw(st.lists(st.integers(0, 3), min_size=3, max_size=3))
    return base, {base - off: m for off, m in zip(offsets, mults) if m}


@given(small_flags())
@settings(deadline=None)
def test_extraction_recovers_planted_flags(data):
    base, flag = data
    bound = 2
    t = Truncation(base, bound)
    total = FormalCharacter(2, {})
    for mu, m in flag.items():
        inner = Truncation(mu, bound - height(base - mu))
        total = total + m * verma_char(mu, inner)
    got = verma_flag_extract(total, t)
    assert got == FlagMultiset(flag.items())


@given(st.integers(2, 5))
def test_subset_sum_support_is_palindromic(n):
    P = subset_sum_P(n)
    top = rho(n) + rho(n)
    assert all(P.coefficient(top - v) == c for v, c in P.items())
