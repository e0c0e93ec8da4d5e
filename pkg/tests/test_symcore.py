import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from poisson_hpa.symcore import (DimensionError, Multivector, Poly, PolySyntaxError, coordinates,
                                 embed, hamiltonian_vf, lie_derivative, monomials, odd_schouten,
                                 odd_wedge, parse_poly, poisson_bracket, schouten, sort_sign, wedge)

from samples import P, random_multivector, random_poly, vf

NAMES = ("x", "y", "z")
SYMS = sympy.symbols("x y z")


def to_sympy(p: Poly):
    out = sympy.Integer(0)
    for _, exps, c in p.terms():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(SYMS, exps):
            term *= s ** e
        out += term
    return sympy.expand(out)


polys = st.builds(lambda seed: random_poly(random.Random(seed), 3, 3, 4), st.integers(0, 10**6))
seeds = st.integers(0, 10**6)


# -- polynomials --------------------------------------------------------------

@given(polys, polys)
def test_arithmetic_matches_sympy(f, g):
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f + g) == sympy.expand(to_sympy(f) + to_sympy(g))
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))


@given(polys, st.integers(0, 2))
def test_diff_matches_sympy(f, i):
    assert to_sympy(f.diff(i)) == sympy.expand(sympy.diff(to_sympy(f), SYMS[i]))


@given(polys, polys, polys, polys)
def test_substitute_matches_sympy(f, a, b, c):
    want = sympy.expand(to_sympy(f).subs(dict(zip(SYMS, map(to_sympy, (a, b, c)))),
                                         simultaneous=True))
    assert to_sympy(f.substitute([a, b, c])) == want


@given(polys)
def test_text_round_trip(f):
    assert parse_poly(f.to_str(NAMES), NAMES) == f


def test_canonical_rendering():
    f = P("y + x^2 - 1/2 h y + 3", NAMES[:2], 2)
    assert f.to_str(NAMES[:2]) == "x^2 - 1/2 h y + y + 3"
    assert str(Poly.zero(2)) == "0"
    assert P("2 * x * x", NAMES) == P("2 x^2", NAMES)


def test_truncation_drops_high_hbar_powers():
    f = P("1 + h x + h^2 y + h^3 z", NAMES, 3)
    assert f == P("1 + h x + h^2 y", NAMES, 3)
    g = P("h^2", NAMES, 3)
    assert (g * g).is_zero()
    assert P("h x", NAMES, 3).div_hbar() == P("x", NAMES, 3)
    assert f.hbar_coefficient(1) == P("x", NAMES, 3)


def test_mixed_orders_rejected():
    with pytest.raises(DimensionError):
        P("x", NAMES, 2) + P("x", NAMES, 3)
    with pytest.raises(DimensionError):
        Poly.var(2, 0) + Poly.var(3, 0)


@pytest.mark.parametrize("text, position", [
    ("x + 2 w", 7),
    ("x + $", 5),
    ("x^", 3),
    ("(x + y)^2", 1),
])
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, NAMES)
    assert info.value.position + 1 == position


def test_hbar_requires_order_free_name():
    assert parse_poly("h", NAMES, 2) == Poly.hbar(3, 2)


def test_monomials_count():
    # monomials of degree <= 2 in 3 variables
    assert len(list(monomials(3, 2))) == 10
    assert len(list(monomials(3, 2, min_degree=1))) == 9
    assert coordinates(2)[1] == Poly.var(2, 1)


# -- multivectors and the Schouten bracket ------------------------------------------

def test_sort_sign():
    assert sort_sign([2, 0, 1]) == (1, (0, 1, 2))
    assert sort_sign([1, 0]) == (-1, (0, 1))
    assert sort_sign([0, 0])[0] == 0


def test_unsorted_components_pick_up_signs():
    a = Multivector.from_components(2, 2, {(1, 0): Poly.const(2, 1)})
    assert a == Multivector.coordinate(2, [0, 1]).scale(-1)


def test_vector_field_bracket_by_hand():
    X = vf(NAMES[:2], "y^2", "x")
    Y = vf(NAMES[:2], "x y", "1")
    assert schouten(X, Y) == vf(NAMES[:2], "y^3 + x^2 - 2 y", "-x y")


@given(seeds)
@settings(max_examples=30)
def test_vector_bracket_is_commutator(seed):
    rng = random.Random(seed)
    X = random_multivector(rng, 3, 1, 0.8)
    Y = random_multivector(rng, 3, 1, 0.8)
    f = random_poly(rng, 3, 3, 4)
    assert schouten(X, Y)(f) == X(Y(f)) - Y(X(f))
    assert schouten(X, Multivector.function(f)).as_poly() == X(f)
    assert lie_derivative(X, f) == X(f)


@given(seeds, st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_schouten_agrees_with_superfunction_model(seed, p, q):
    rng = random.Random(seed)
    A = random_multivector(rng, 3, p, 0.7)
    B = random_multivector(rng, 3, q, 0.7)
    assert schouten(A, B) == odd_schouten(A, B)
    if p + q <= 3:
        assert wedge(A, B) == odd_wedge(A, B)


@given(seeds, st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_graded_antisymmetry(seed, p, q):
    rng = random.Random(seed)
    A = random_multivector(rng, 3, p, 0.7)
    B = random_multivector(rng, 3, q, 0.7)
    sign = -1 if (p - 1) * (q - 1) % 2 == 0 else 1
    assert schouten(A, B) == schouten(B, A).scale(sign)


@given(seeds, st.integers(1, 2), st.integers(1, 2), st.integers(1, 2))
@settings(max_examples=25, deadline=None)
def test_graded_jacobi(seed, p, q, r):
    rng = random.Random(seed)
    A = random_multivector(rng, 3, p, 0.6, 1)
    B = random_multivector(rng, 3, q, 0.6, 1)
    C = random_multivector(rng, 3, r, 0.6, 1)
    s = lambda k: (-1) ** k  # noqa: E731
    lhs = schouten(A, schouten(B, C))
    rhs = schouten(schouten(A, B), C) + schouten(B, schouten(A, C)).scale(s((p - 1) * (q - 1)))
    assert lhs == rhs


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_bivector_jacobiator_is_half_the_schouten_square(seed):
    rng = random.Random(seed)
    pi = random_multivector(rng, 3, 2, 0.8, 1)
    x = coordinates(3)
    pb = lambda f, g: poisson_bracket(pi, f, g)  # noqa: E731
    jac = pb(x[0], pb(x[1], x[2])) + pb(x[1], pb(x[2], x[0])) + pb(x[2], pb(x[0], x[1]))
    assert schouten(pi, pi).component((0, 1, 2)) == jac.scale(2)


def test_poisson_bracket_and_hamiltonian_field():
    pi = Multivector.coordinate(2, [0, 1])
    x, y = coordinates(2)
    assert poisson_bracket(pi, x, y) == Poly.const(2, 1)
    f = P("x^2 y", NAMES[:2])
    g = P("y^3", NAMES[:2])
    assert hamiltonian_vf(pi, f)(g) == poisson_bracket(pi, f, g)
    assert poisson_bracket(pi, f, g) == P("6 x y^3", NAMES[:2])


def test_embed_shifts_indices():
    pi = Multivector.coordinate(2, [0, 1], P("x", NAMES[:2]))
    big = embed(pi, 4, 2)
    assert big.component((2, 3)) == Poly.var(4, 2)
    assert len(big) == 1


def test_multivector_coefficients_are_exact():
    pi = Multivector.coordinate(2, [0, 1]).scale(Fraction(1, 3))
    assert pi.component((0, 1)).constant_value() == Fraction(1, 3)
    assert pi.to_str(NAMES[:2]) == "1/3 dx^dy"
