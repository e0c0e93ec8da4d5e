import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poisson_hpa.bundle import (BlockError, BundleBivector, MomentMapData, assemble, disassemble,
                                bundle_jacobi_equivalence, fiber_invariance, fiber_moment,
                                fiber_names, hamiltonianize, induced_action, moment_check,
                                universal_property_witness)
from poisson_hpa.hpa import Hpa, mc_check
from poisson_hpa.lie import LieAlgebra, TwoCocycle, kk_bivector
from poisson_hpa.symcore import Multivector, Poly, coordinates, poisson_bracket, schouten

from samples import (XY, P, broken_mc1, central_extension, coadjoint, mc_examples, random_hpa,
                     rotation, symplectic, translation, vf)

seeds = st.integers(0, 10**6)
EQUIVALENCE = ("equivalence", "kk-bracket-is-d", "expansion", "blockwise-residuals")


def test_fiber_names_avoid_clashes():
    assert fiber_names(("x", "y"), 2) == ("y1", "y2")
    assert fiber_names(("y1", "x"), 2) == ("_y1", "y2")


def test_zero_hpa_assembles_to_zero():
    h = Hpa.build(LieAlgebra.abelian(2), 2)
    assert assemble(h).pi.is_zero()


def test_translation_bivector():
    B = assemble(translation())
    names = B.variables
    assert names == ("x", "y", "y1", "y2")
    assert B.pi.to_str(names) == "1 dx^dy - 1 dx^dy1 - 1 dy^dy2"
    # the fiber coordinates generate the action: {y_a, f} = sigma1(e_a) f
    f = P("x^2 y", names)
    y1, y2 = coordinates(4)[2:]
    assert poisson_bracket(B.pi, y1, f) == f.diff(0)
    assert poisson_bracket(B.pi, y2, f) == f.diff(1)


def test_rotation_bivector():
    B = assemble(rotation())
    names = B.variables
    assert B.pi.to_str(names) == "1 dx^dy + y dx^dy1 - x dy^dy1"
    y1 = coordinates(3)[2]
    assert poisson_bracket(B.pi, y1, P("x", names)) == P("-y", names)
    assert poisson_bracket(B.pi, y1, P("y", names)) == P("x", names)


def test_central_extension_bivector():
    B = assemble(central_extension())
    assert B.pi == Multivector.coordinate(2, [0, 1])


@pytest.mark.parametrize("name", sorted(mc_examples()))
def test_round_trip(name):
    h = mc_examples()[name]
    back = disassemble(assemble(h))
    assert (back.sigma0, back.sigma1, back.sigma2) == (h.sigma0, h.sigma1, h.sigma2)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_round_trip_random(seed):
    h = random_hpa(random.Random(seed))
    back = disassemble(assemble(h))
    assert (back.sigma0, back.sigma1, back.sigma2) == (h.sigma0, h.sigma1, h.sigma2)


def test_disassemble_names_offending_block():
    h = translation()
    B = assemble(h)
    y1 = Poly.var(4, 2)
    bad = BundleBivector(B.g, B.n, B.pi + Multivector.coordinate(4, [0, 1], y1), B.variables)
    with pytest.raises(BlockError) as info:
        disassemble(bad)
    assert info.value.block == "wedge2-TM"
    bad = BundleBivector(B.g, B.n, B.pi + Multivector.coordinate(4, [0, 3], y1), B.variables)
    with pytest.raises(BlockError) as info:
        disassemble(bad)
    assert info.value.block == "TM-x-g*"


def test_kk_on_point_base_disassembles_to_zero():
    g = LieAlgebra.so3()
    B = BundleBivector(g, 0, kk_bivector(g))
    h = disassemble(B)
    assert h.sigma0.is_zero() and h.sigma1.is_zero() and h.sigma2.is_zero()


@pytest.mark.parametrize("name", sorted(mc_examples()))
def test_mc_examples_give_poisson_bundles(name):
    rep = bundle_jacobi_equivalence(mc_examples()[name])
    assert rep.passed, rep.to_text()


def test_broken_mc1_bundle_residual():
    rep = bundle_jacobi_equivalence(broken_mc1())
    assert rep.check("bundle-jacobi").status == "fail"
    assert rep.check("maurer-cartan").status == "fail"
    for c in EQUIVALENCE:
        assert rep.check(c).passed
    B = assemble(broken_mc1())
    # [Pi, Pi] = 2 d_{y1} ^ [sigma1(e), sigma0] = -2 dx^dy^dy1
    assert schouten(B.pi, B.pi).to_str(B.variables) == "-2 dx^dy^dy1"


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_equivalence_on_random_triples(seed):
    h = random_hpa(random.Random(seed))
    rep = bundle_jacobi_equivalence(h)
    for c in EQUIVALENCE:
        assert rep.check(c).passed, rep.to_text()
    assert rep.check("bundle-jacobi").passed == mc_check(h).passed


@pytest.mark.parametrize("name", sorted(mc_examples()))
def test_fiber_translations_are_poisson(name):
    assert fiber_invariance(assemble(mc_examples()[name])).passed


# -- moment maps ----------------------------------------------------------------

def test_identity_moment_map_on_dual():
    g = LieAlgebra.so3()
    pi = kk_bivector(g)
    d = MomentMapData(pi, g, coordinates(3))
    assert moment_check(d).passed
    assert induced_action(d) == [coadjoint().V(a) for a in range(3)]


def test_non_equivariant_moment_map_needs_affine_target():
    g = LieAlgebra.abelian(2)
    mu = (P("y", XY), P("-x", XY))
    rep = moment_check(MomentMapData(symplectic(), g, mu, variables=XY))
    assert not rep.passed
    assert rep.check("bracket(e1,e2)").residuals == ["1"]
    omega = TwoCocycle.from_entries(g, [[1, 2, 1]])
    assert moment_check(MomentMapData(symplectic(), g, mu, omega, XY)).passed


def test_zero_moment_map():
    g = LieAlgebra.abelian(2)
    d = MomentMapData(symplectic(), g, (Poly.zero(2), Poly.zero(2)))
    assert moment_check(d).passed
    assert all(X.is_zero() for X in induced_action(d))


@pytest.mark.parametrize("name", ["translation", "rotation", "coadjoint", "rotations"])
def test_hamiltonianize(name):
    h = mc_examples()[name]
    B, d, rep = hamiltonianize(h)
    assert rep.passed, rep.to_text()
    assert moment_check(d).passed
    assert fiber_moment(B).mu == d.mu


def test_hamiltonianize_zero_action_is_product():
    g = LieAlgebra.so3()
    h = Hpa.build(g, 2, symplectic())
    B, _, rep = hamiltonianize(h)
    assert rep.passed
    assert B.pi == assemble(h).pi
    assert disassemble(B).sigma1.is_zero()


def test_hamiltonianize_preconditions():
    with pytest.raises(ValueError):
        hamiltonianize(broken_mc1())
    with pytest.raises(ValueError):
        hamiltonianize(central_extension())


def test_hamiltonianize_with_affine_target():
    g = LieAlgebra.abelian(2)
    omega = TwoCocycle.from_entries(g, [[1, 2, 1]])
    B, d, rep = hamiltonianize(translation(), omega)
    assert rep.passed, rep.to_text()
    y1, y2 = coordinates(4)[2:]
    assert poisson_bracket(B.pi, y1, y2) == Poly.const(4, 1)
    assert d.omega == omega


def test_universal_property_identity():
    h = translation()
    B, mu, _ = hamiltonianize(h)
    proj = list(coordinates(B.dim)[:h.n])
    rep = universal_property_witness(B.pi, mu, proj, h, B.variables)
    assert rep.passed, rep.to_text()
    assert rep.data["ftilde"] == list(B.variables)


def test_universal_property_affine_point():
    g = LieAlgebra.abelian(2)
    omega = TwoCocycle.from_entries(g, [[1, 2, 1]])
    mu = MomentMapData(symplectic(), g, (P("y", XY), P("-x", XY)), omega, XY)
    rep = universal_property_witness(symplectic(), mu, [], central_extension(), XY)
    assert rep.passed, rep.to_text()
    assert rep.data["ftilde"] == ["y", "-x"]


def test_universal_property_names_non_equivariant_direction():
    h = translation()
    B, mu, _ = hamiltonianize(h)
    x, y = coordinates(B.dim)[:2]
    # swapping the base coordinates is Poisson up to sign but not equivariant
    rep = universal_property_witness(B.pi, mu, [y, x], h, B.variables)
    assert not rep.passed
    failing = {c.id for c in rep.checks if c.status == "fail"}
    assert "f-equivariant(e1)" in failing
    assert rep.check("ftilde-poisson").status == "skip"


def test_universal_property_rejects_mismatched_shift():
    g = LieAlgebra.abelian(2)
    mu = MomentMapData(symplectic(), g, (P("y", XY), P("-x", XY)),
                       TwoCocycle.from_entries(g, [[1, 2, 1]]), XY)
    h = central_extension(2)
    rep = universal_property_witness(symplectic(), mu, [], h, XY)
    assert rep.check("mu-target-matches").status == "fail"


def test_vector_field_sign_of_fiber_block():
    h = Hpa.build(LieAlgebra.abelian(1), 2, None, {0: vf(XY, "1", "0")}, variables=XY)
    B = assemble(h)
    assert B.pi.component((0, 2)) == Poly.const(3, -1)
