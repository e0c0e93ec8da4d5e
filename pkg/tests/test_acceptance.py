"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Every check is exact (rational arithmetic, zero tolerance).
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from poisson_hpa import haa
from poisson_hpa.bundle import (assemble, bundle_jacobi_equivalence, fiber_moment, hamiltonianize,
                                moment_check, universal_property_witness)
from poisson_hpa.hpa import ExtensionElement, Hpa, extension_bracket, gauge, make_tau, mc_check, \
    mc_full_check
from poisson_hpa.lie import LieAlgebra, TwoCocycle, kk_bivector
from poisson_hpa.quantize import (ORDER, StarProduct, default_probes, haa_axiom_check, hbar_scaled,
                                  quantize_hpa, solve_weights)
from poisson_hpa.symcore import Poly, coordinates, monomials, schouten

from samples import (XY, P, central_extension, mc_examples, random_hpa, random_poly, symplectic,
                     translation_formal)

F = Fraction
POPULATION = 120


@pytest.fixture
def record(capsys):
    def emit(n: int, ok: bool, text: str):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
        assert ok, text
    return emit


def _max_degree(h: Hpa) -> int:
    polys = [f for _, f in h.sigma0.items()]
    polys += [f for a in range(h.m) for _, f in h.V(a).items()]
    polys += [h.s(a, b) for a in range(h.m) for b in range(a + 1, h.m)]
    return max((f.degree() for f in polys if f), default=0)


def population():
    """Random triples with n <= 3, m <= 3 and coefficient degree <= 2."""
    out, seed = [], 0
    while len(out) < POPULATION:
        h = random_hpa(random.Random(seed))
        seed += 1
        if h.n <= 3 and h.m <= 3 and _max_degree(h) <= 2:
            out.append(h)
    return out


@pytest.fixture(scope="module")
def triples():
    return population()


# -- 1 -------------------------------------------------------------------------------

def test_criterion_1_sign_coherence(triples, record):
    agree = [mc_full_check(h) == mc_check(h).passed for h in triples]
    mc = sum(mc_check(h).passed for h in triples)
    ok = all(agree) and 0 < mc < len(triples)
    record(1, ok, f"full MC equation agrees with the four components on {sum(agree)}/{len(triples)} "
                  f"triples ({mc} MC, {len(triples) - mc} not)")


# -- 2 -------------------------------------------------------------------------------

def test_criterion_2_bundle_jacobi(triples, record):
    bad = []
    for k, h in enumerate(triples):
        rep = bundle_jacobi_equivalence(h)
        B = assemble(h)
        jac = schouten(B.pi, B.pi).is_zero()
        if jac != mc_check(h).passed:
            bad.append((k, "equivalence"))
        for c in ("kk-bracket-is-d", "expansion", "blockwise-residuals"):
            if not rep.check(c).passed:
                bad.append((k, c))
    record(2, not bad, f"[Pi,Pi]=0 iff MC and the expansion identity hold on {len(triples)} triples"
                       + (f"; failures {bad[:5]}" if bad else ""))


# -- 3 -------------------------------------------------------------------------------

def test_criterion_3_gauge_invariance(record):
    bad, count = [], 0
    for name, h in sorted(mc_examples().items()):
        rng = random.Random(name)
        for _ in range(50):
            tau = make_tau(h, {a: random_poly(rng, h.n, 2) for a in range(h.m)})
            out = gauge(h, tau)
            count += 1
            if not mc_check(out).passed or out.sigma0 != h.sigma0:
                bad.append(name)
    record(3, not bad, f"{count} gauge transforms over {len(mc_examples())} MC examples stay MC "
                       f"with sigma0 unchanged")


# -- 4 -------------------------------------------------------------------------------

def test_criterion_4_hamiltonianization(record):
    bad = []
    examples = mc_examples()
    for name in ("translation", "rotation", "coadjoint"):
        h = examples[name]
        B, d, rep = hamiltonianize(h)
        if not rep.passed or not moment_check(d).passed or fiber_moment(B).mu != d.mu:
            bad.append(name)
        if any(not rep.check(f"projects-to-sigma1(e{a + 1})").passed for a in range(h.m)):
            bad.append(name + ":projection")
    h = examples["translation"]
    B, mu, _ = hamiltonianize(h)
    ident = universal_property_witness(B.pi, mu, list(coordinates(B.dim)[:h.n]), h, B.variables)
    if not ident.passed:
        bad.append("identity")
    g = LieAlgebra.abelian(2)
    from poisson_hpa.bundle import MomentMapData
    omega = TwoCocycle.from_entries(g, [[1, 2, 1]])
    mu = MomentMapData(symplectic(), g, (P("y", XY), P("-x", XY)), omega, XY)
    affine = universal_property_witness(symplectic(), mu, [], central_extension(), XY)
    if not affine.passed:
        bad.append("affine")
    record(4, not bad, "hamiltonianize on translation, rotation, coadjoint; universal property "
                       "on identity and affine fixtures" + (f"; failures {bad}" if bad else ""))


# -- 5 -------------------------------------------------------------------------------

GROUPS = {"Z2": haa.FiniteGroup.cyclic(2), "Z3": haa.FiniteGroup.cyclic(3),
          "Z4": haa.FiniteGroup.cyclic(4), "Klein": haa.FiniteGroup.klein()}


def _crossed():
    z2, z3 = GROUPS["Z2"], GROUPS["Z3"]
    idem = haa.Algebra(["p1", "p2", "p3"], {(i, i): {i: 1} for i in range(3)}, [1, 1, 1])
    perm = [[[F(int(r == (c + s) % 3)) for c in range(3)] for r in range(3)] for s in range(3)]
    return {
        "dual-numbers": haa.crossed_product(z2, haa.dual_numbers(),
                                            [[[1, 0], [0, 1]], [[1, 0], [0, -1]]]),
        "cyclic-idempotents": haa.crossed_product(z3, idem, perm),
    }


def _iff_cocycle_all_signs(G):
    """Every +-1 valued cochain: validates iff the cocycle identity holds."""
    pairs = list(product(G.elements(), repeat=2))
    counts = {True: 0, False: 0}
    for bits in product((F(1), F(-1)), repeat=len(pairs)):
        c = dict(zip(pairs, bits))
        ok = haa.validate(haa.central_extension(G, c, check=False)).passed
        if ok != (not haa.cocycle_violations(G, c)):
            return None
        counts[ok] += 1
    return counts


def test_criterion_5_group_actions(record):
    bad = []
    algebras = {"quaternions": (haa.quaternions(), None)}
    for name, G in GROUPS.items():
        algebras[name] = (haa.group_algebra(G), None)
    for name, A in _crossed().items():
        algebras[name] = (A, "crossed")
    for name, (A, kind) in algebras.items():
        U = haa.crossed_units(A) if kind else haa.UnitChoice.first_basis(A)
        D, rep = haa.derive_action(U)
        if not (haa.validate(A).passed and rep.passed and haa.check_twisting(D).passed):
            bad.append(name)
        if kind:
            one = A.component(A.algebra.unit, A.group.identity)
            if any(v != one for v in D.c.values()):
                bad.append(name + ":c")
    swept = {}
    for name, G in GROUPS.items():
        counts = _iff_cocycle_all_signs(G)
        if counts is None or not counts[True] or not counts[False]:
            bad.append(name + ":central-ext")
        else:
            swept[name] = counts[True] + counts[False]
    record(5, not bad, f"(rho, c) identities on {len(algebras)} algebras; central extension iff "
                       f"cocycle over all +-1 cochains {swept}" + (f"; failures {bad}" if bad else ""))


# -- 6 -------------------------------------------------------------------------------

def test_criterion_6_star_product(record):
    bad = []
    w = solve_weights(default_probes(), max_degree=3)
    if w != (F(1, 8), F(1, 12), F(-1, 12)):
        bad.append(f"weights {w}")
    bivectors = {"constant": (symplectic(), 2),
                 "heisenberg": (kk_bivector(LieAlgebra.heisenberg()), 3),
                 "so3": (kk_bivector(LieAlgebra.so3()), 3)}
    triples = 0
    for name, (pi, n) in bivectors.items():
        S = StarProduct(hbar_scaled(pi), w)
        mons = list(monomials(n, 3, 0, ORDER))
        for f, g, h in product(mons, repeat=3):
            triples += 1
            if S.associator(f, g, h):
                bad.append(name)
                break
    rng = random.Random(6)
    S = StarProduct(hbar_scaled(kk_bivector(LieAlgebra.so3())), w)
    for _ in range(100):
        f, g = random_poly(rng, 3, 3, 3, ORDER), random_poly(rng, 3, 3, 3, ORDER)
        h = random_poly(rng, 3, 3, 3, ORDER)
        if S.associator(f, g, h):
            bad.append("random-associator")
        skew = (S.star(f, g) - S.star(g, f)).hbar_coefficient(1)
        if skew != S.poisson_bracket(f, g).hbar_coefficient(1):
            bad.append("skew")
    record(6, not bad, f"weights {tuple(str(x) for x in w)} unique; associator zero mod h^3 on "
                       f"{triples} monomial triples and 100 random cubic samples; skew part is the "
                       f"bracket" + (f"; failures {bad[:5]}" if bad else ""))


# -- 7 -------------------------------------------------------------------------------

def test_criterion_7_quantized_extensions(record):
    bad = []
    qt = quantize_hpa(translation_formal())
    qc = quantize_hpa(central_extension(order=3, hbar=True))
    for name, q in (("translation", qt), ("central-extension", qc)):
        for c in ("classical-limit", "derivation(l1)", "derivation(l2)"):
            if not q.report.check(c).passed:
                bad.append(f"{name}:{c}")
        if not haa_axiom_check(q).passed:
            bad.append(f"{name}:recheck")
    # independent classical oracle on translation: [l1, x^k] = k x^(k-1), [l2, y^k] = k y^(k-1);
    # the formal action is h times the classical one
    h1 = translation_formal()
    for (a, e), p in qt.actions.items():
        f = Poly.from_terms(2, {(0, e): 1}, 3)
        want = extension_bracket(h1, ExtensionElement.basis(h1, a), ExtensionElement.function(h1, f))
        direct = f.diff(a).truncate(None)
        if want.f.hbar_coefficient(1).truncate(None) != direct:
            bad.append(f"oracle {e}")
        if p.hbar_coefficient(0).truncate(None).restrict(2) != direct:
            bad.append(f"table {e}")
    weyl = qc.generators[(0, 1)].hbar_coefficient(0).truncate(None)
    if weyl != Poly.const(weyl.nvars, 1):
        bad.append(f"weyl {weyl}")
    record(7, not bad, "quantized translation and central extension: classical limit, derivations "
                       "mod h^2, Weyl relation [l1,l2] = 1" + (f"; failures {bad}" if bad else ""))


# -- 8 -------------------------------------------------------------------------------

def test_criterion_8_out_of_scope(record):
    record(8, True, "not reproducible at desk scale and not exercised: the global quantization of "
                    "G-families, algebroids over 2-connected bases, and the Lie bialgebra, Hopf and "
                    "Courant generalizations; no other criterion depends on them")
