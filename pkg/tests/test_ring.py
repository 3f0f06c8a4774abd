from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symqh.relations import classical_relation
from symqh.ring import (Ambient, CohClass, canonical_basis, cup, dim_invariant_subring,
                        eval_top, monomials, pair, reduce, render)


def cls(amb, terms):
    return CohClass(amb, terms)


# -- eval_top -------------------------------------------------------------

def test_eval_top_fundamental_eta_power():
    for g, d in [(0, 1), (2, 2), (5, 3), (4, 9)]:
        assert eval_top((0, d), Ambient(g, d)) == 1


def test_eval_top_mixed_g2_d2():
    # 2!/(2-1)! = 2
    assert eval_top((1, 1), Ambient(2, 2)) == 2


def test_eval_top_theta_beyond_genus():
    assert eval_top((3, 0), Ambient(2, 3)) == 0


def test_eval_top_degree_mismatch():
    with pytest.raises(ValueError):
        eval_top((1, 0), Ambient(2, 2))


# -- cup ------------------------------------------------------------------

def test_cup_examples():
    a22 = Ambient(2, 2)
    assert cup(CohClass.eta(a22), CohClass.eta(a22)) == CohClass.eta(a22, 2)
    a23 = Ambient(2, 3)
    assert cup(CohClass.theta(a23), CohClass.theta(a23)) == CohClass.monomial(a23, 2, 0)
    a25 = Ambient(2, 5)
    assert not cup(CohClass.theta(a25, 2), CohClass.theta(a25))


def test_cup_drops_above_dimension():
    amb = Ambient(3, 2)
    assert not cup(CohClass.eta(amb, 2), CohClass.eta(amb))


def test_cup_is_not_reduced():
    amb = Ambient(2, 2)
    x = cup(CohClass.theta(amb), CohClass.eta(amb)) - CohClass.eta(amb, 2) * 2
    assert x  # th*et - 2 et^2, structurally nonzero
    assert x.is_zero()


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        cup(CohClass.eta(Ambient(2, 2)), CohClass.eta(Ambient(2, 3)))


def test_bad_ambient():
    with pytest.raises(ValueError):
        Ambient(-1, 2)
    with pytest.raises(ValueError):
        Ambient(2, 0)


# -- pair -----------------------------------------------------------------

def test_pair_examples():
    amb = Ambient(2, 2)
    eta, theta = CohClass.eta(amb), CohClass.theta(amb)
    assert pair(eta, eta) == 1
    assert pair(theta - eta, eta) == 1
    assert pair(theta - eta, theta) == 0


def test_pair_needs_complementary_degrees():
    amb = Ambient(2, 3)
    with pytest.raises(ValueError):
        pair(CohClass.eta(amb), CohClass.eta(amb))


# -- reduce / basis -------------------------------------------------------

def test_reduce_examples():
    a32 = Ambient(3, 2)
    x = cls(a32, {(2, 0): Fraction(1, 2), (1, 1): -1})
    assert reduce(x) == CohClass.zero(a32)
    for g, d in [(0, 2), (2, 2), (5, 4), (3, 7)]:
        amb = Ambient(g, d)
        assert reduce(CohClass.eta(amb)) == CohClass.eta(amb)
    a22 = Ambient(2, 2)
    assert not reduce(cls(a22, {(1, 1): 1, (0, 2): -2}))


def test_dim_examples():
    amb = Ambient(2, 2)
    assert dim_invariant_subring(amb, 0) == 1
    assert dim_invariant_subring(amb, 2) == 1
    assert dim_invariant_subring(amb, 1) == 2
    with pytest.raises(ValueError):
        dim_invariant_subring(amb, 3)


def test_canonical_basis_prefers_low_theta():
    amb = Ambient(2, 2)
    assert canonical_basis(amb, 2) == ((0, 2),)
    assert canonical_basis(amb, 1) == ((0, 1), (1, 0))


def _sympy_rank(amb, k):
    rows = monomials(amb, k)
    cols = monomials(amb, amb.d - k)
    mat = sympy.Matrix([[factorial(amb.g) // factorial(amb.g - (m.a + n.a)) if m.a + n.a <= amb.g else 0
                         for n in cols] for m in rows])
    return mat.rank() if rows and cols else 0


@pytest.mark.parametrize("g", range(0, 7))
def test_dim_matches_independent_rank(g):
    for d in range(1, 2 * g + 3):
        amb = Ambient(g, d)
        for k in range(d + 1):
            assert dim_invariant_subring(amb, k) == _sympy_rank(amb, k)


@pytest.mark.parametrize("g", range(0, 8))
def test_dim_symmetry(g):
    for d in range(1, 2 * g + 3):
        amb = Ambient(g, d)
        for k in range(d + 1):
            assert dim_invariant_subring(amb, k) == dim_invariant_subring(amb, d - k)


def test_dim_full_below_relations():
    for g in range(0, 6):
        for d in range(2 * g - 1, 2 * g + 4):
            if d < 1:
                continue
            amb = Ambient(g, d)
            for k in range(0, d - g + 1):
                assert dim_invariant_subring(amb, k) == min(g, k) + 1


@pytest.mark.parametrize("g", range(0, 9))
def test_classical_relation_vanishes(g):
    for d in range(max(g, 1), 2 * g - 1):
        assert not reduce(classical_relation(Ambient(g, d)))


def test_classical_relation_survives_above_range():
    # above 2g-2 only et^(d-2g+1) times the product vanishes
    amb = Ambient(2, 5)
    assert reduce(classical_relation(amb))


def test_render():
    amb = Ambient(3, 4)
    x = cls(amb, {(1, 0): 1, (0, 1): -1, (2, 1): Fraction(-3, 2), (0, 0): 2})
    assert render(x) == "2 + th - et - 3/2*th^2*et"
    assert render(CohClass.zero(amb)) == "0"
    assert render(-CohClass.eta(amb, 2)) == "-et^2"


# -- properties -----------------------------------------------------------

ambients = st.builds(Ambient, st.integers(0, 6), st.integers(1, 8))


@st.composite
def classes(draw, amb=None, degree=None):
    amb = amb or draw(ambients)
    keys = st.tuples(st.integers(0, amb.g), st.integers(0, amb.d)) if degree is None else \
        st.integers(0, min(amb.g, degree)).map(lambda a: (a, degree - a))
    terms = draw(st.dictionaries(keys, st.fractions(max_denominator=6).filter(bool), max_size=5))
    return CohClass(amb, terms)


@st.composite
def class_pairs(draw, n=2, homogeneous=False):
    amb = draw(ambients)
    k = draw(st.integers(0, amb.d)) if homogeneous else None
    return amb, [draw(classes(amb, k)) for _ in range(n)]


@given(class_pairs())
def test_cup_commutes(data):
    _, (x, y) = data
    assert cup(x, y) == cup(y, x)


@given(class_pairs(3))
def test_cup_associates(data):
    _, (x, y, z) = data
    assert cup(cup(x, y), z) == cup(x, cup(y, z))


@given(class_pairs(homogeneous=True), st.data())
def test_pair_symmetric_and_reduce_projection(data, draw):
    amb, (x, _) = data
    k = x.homogeneous_degree if x else 0
    y = draw.draw(classes(amb, amb.d - k))
    if x:
        assert pair(x, y) == pair(y, x)
        assert pair(reduce(x), y) == pair(x, y)


@settings(max_examples=60)
@given(class_pairs())
def test_reduce_linear_idempotent(data):
    _, (x, y) = data
    assert reduce(reduce(x)) == reduce(x)
    assert reduce(x + y) == reduce(x) + reduce(y)
    assert reduce(x * Fraction(3, 7)) == reduce(x) * Fraction(3, 7)


@given(class_pairs())
def test_reduced_terms_lie_in_basis(data):
    amb, (x, _) = data
    for m, _ in reduce(x).items():
        assert m in canonical_basis(amb, m.degree)
