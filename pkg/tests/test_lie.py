import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poisson_hpa.lie import (GValued, LieAlgebra, LieAlgebraError, TwoCocycle, affine_bivector,
                             ce_differential, graded_bracket, kk_bivector)
from poisson_hpa.symcore import Multivector, Poly, coordinates, poisson_bracket, schouten

from samples import lie_algebras, random_multivector, random_poly

ALGEBRAS = lie_algebras()
seeds = st.integers(0, 10**6)


def random_form(rng, g, n, p, k):
    values = {}
    for I in combinations(range(g.dim), p):
        if rng.random() < 0.7:
            values[I] = (Multivector.function(random_poly(rng, n)) if k == 0
                         else random_multivector(rng, n, k, 0.7))
    return GValued(g, n, p, k, values)


def test_stock_algebras_satisfy_jacobi():
    for g in ALGEBRAS:
        assert g.jacobi_violations() == []


def test_jacobi_violation_names_triple():
    with pytest.raises(LieAlgebraError) as info:
        LieAlgebra.from_entries(3, [[1, 2, 3, 1], [1, 3, 1, 1]])
    assert info.value.triple == (0, 1, 2)
    g = LieAlgebra.from_entries(3, [[1, 2, 3, 1], [1, 3, 1, 1]], check=False)
    assert g.jacobi_violations() == [(0, 1, 2)]


def test_bracket_is_antisymmetric_and_bilinear():
    g = LieAlgebra.so3()
    u = (Fraction(1), Fraction(2), Fraction(0))
    v = (Fraction(0), Fraction(1), Fraction(-1))
    assert g.bracket(u, v) == tuple(-x for x in g.bracket(v, u))
    # [e1 + 2 e2, e2 - e3] = [e1, e2] - [e1, e3] - 2 [e2, e3] = e3 + e2 - 2 e1
    assert g.bracket(u, v) == (Fraction(-2), Fraction(1), Fraction(1))


@pytest.mark.parametrize("g", ALGEBRAS, ids=repr)
def test_kk_is_poisson_with_linear_brackets(g):
    pi = kk_bivector(g)
    assert schouten(pi, pi).is_zero()
    y = coordinates(g.dim)
    for i, j in combinations(range(g.dim), 2):
        want = Poly.zero(g.dim)
        for k, c in g.bracket_basis(i, j).items():
            want = want + y[k].scale(c)
        assert poisson_bracket(pi, y[i], y[j]) == want


def test_kk_detects_bad_structure_constants():
    g = LieAlgebra.from_entries(3, [[1, 2, 3, 1], [1, 3, 1, 1]], check=False)
    pi = kk_bivector(g)
    assert not schouten(pi, pi).is_zero()


def test_ce_differential_on_one_forms():
    g = LieAlgebra.from_entries(2, [[1, 2, 2, 1]])
    alpha = GValued.from_polys(g, 0, 1, {(1,): Poly.const(0, 1)})
    # (d alpha)(e1, e2) = -alpha([e1, e2]) = -alpha(e2)
    assert ce_differential(alpha).poly(0, 1) == Poly.const(0, -1)


@pytest.mark.parametrize("g", ALGEBRAS, ids=repr)
@given(seeds, st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=10, deadline=None)
def test_ce_differential_squares_to_zero(g, seed, p, k):
    rng = random.Random(seed)
    if p > g.dim:
        return
    alpha = random_form(rng, g, 2, p, k)
    assert ce_differential(ce_differential(alpha)).is_zero()


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_graded_bracket_in_form_degree_zero_is_schouten(seed):
    rng = random.Random(seed)
    g = LieAlgebra.abelian(2)
    P = random_multivector(rng, 3, 2, 0.7, 1)
    Q = random_multivector(rng, 3, 1, 0.7)
    a = GValued(g, 3, 0, 2, {(): P})
    b = GValued(g, 3, 0, 1, {(): Q})
    assert graded_bracket(a, b)() == schouten(P, Q)


def test_graded_bracket_sign_on_one_forms():
    # [e^1 (x) X, e^2 (x) Y] with vector fields: (-1)^{0 * 1} e^1^e^2 (x) [X, Y]
    g = LieAlgebra.abelian(2)
    x, y = coordinates(2)
    X = Multivector.vector([y, Poly.zero(2)])
    Y = Multivector.vector([Poly.zero(2), x])
    a = GValued(g, 2, 1, 1, {(0,): X})
    b = GValued(g, 2, 1, 1, {(1,): Y})
    assert graded_bracket(a, b)(0, 1) == schouten(X, Y)
    # bivector against 1-form picks up (-1)^{1 * 1}
    pi = Multivector.coordinate(2, [0, 1])
    c = GValued(g, 2, 0, 2, {(): pi})
    assert graded_bracket(c, b)(1) == -schouten(pi, Y)


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_d_is_a_derivation_of_the_bracket(seed):
    rng = random.Random(seed)
    g = rng.choice([a for a in ALGEBRAS if a.dim >= 2])
    a = random_form(rng, g, 2, 1, 1)
    b = random_form(rng, g, 2, 0, 2)
    # |a| = 1 + 0 = 1 in total degree (form degree + shifted multivector degree)
    lhs = ce_differential(graded_bracket(a, b))
    rhs = graded_bracket(ce_differential(a), b) - graded_bracket(a, ce_differential(b))
    assert lhs == rhs


def test_two_cocycle_identity():
    g = LieAlgebra.from_entries(3, [[1, 2, 2, 1]])
    bad = TwoCocycle.from_entries(g, [[2, 3, 1]])
    assert bad.violations() == [((0, 1, 2), Fraction(1))]
    good = TwoCocycle.from_entries(g, [[1, 2, 5]])
    assert good.is_cocycle()
    with pytest.raises(ValueError):
        TwoCocycle.from_entries(g, [[1, 2, 1], [1, 2, 2]])


@pytest.mark.parametrize("g", [a for a in ALGEBRAS if a.dim == 3], ids=repr)
@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3))
@settings(max_examples=20, deadline=None)
def test_affine_bivector_poisson_iff_cocycle(g, coeffs):
    omega = TwoCocycle.from_entries(g, [[1, 2, coeffs[0]], [1, 3, coeffs[1]], [2, 3, coeffs[2]]])
    pi, ok = affine_bivector(g, omega)
    assert ok == omega.is_cocycle()
    assert ok == schouten(pi, pi).is_zero()
