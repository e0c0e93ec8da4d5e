"""Trivialized Poisson principal g*-bundles ``P = M x g*`` and Hamiltonianization.

Coordinates on ``P`` are ``x_1..x_n`` (base) followed by ``y_1..y_m`` (linear
coordinates on g*).  An HPA is lifted by ``e^a -> d/dy_a``, so

    Pi = sigma0 + sum_a d_{y_a} ^ sigma1(e_a) + sum_{a<b} sigma2(e_a, e_b) d_{y_a} ^ d_{y_b} + pi_KK

and the bracket of ``P`` restricted to functions ``<u, y> + f(x)`` is the extension
bracket of the HPA.  With this orientation the fiber coordinate ``y_a`` is a moment
map whose Hamiltonian vector field projects to ``sigma1(e_a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .hpa import Hpa, mc_check, mc_full_check, mc_residual
from .lie import GValued, LieAlgebra, TwoCocycle, ce_differential, kk_bivector
from .report import Report
from .symcore import (DimensionError, Multivector, Poly, embed, hamiltonian_vf, poisson_bracket,
                      schouten, wedge)


class BlockError(ValueError):
    """A bundle bivector whose blocks do not have the trivialized principal form."""

    def __init__(self, block: str, indices: Tuple[int, int], message: str):
        super().__init__(f"{block} block at {indices}: {message}")
        self.block = block
        self.indices = indices


def fiber_names(base: Sequence[str], m: int) -> Tuple[str, ...]:
    names = []
    for a in range(m):
        name = f"y{a + 1}"
        while name in base or name in names:
            name = "_" + name
        names.append(name)
    return tuple(names)


@dataclass(frozen=True)
class BundleBivector:
    g: LieAlgebra
    n: int
    pi: Multivector
    variables: Tuple[str, ...] = ()
    omega: Optional[TwoCocycle] = None

    def __post_init__(self):
        if self.pi.dim != self.n + self.g.dim:
            raise DimensionError("bundle bivector must live on R^(n+m)")
        if not self.variables:
            base = tuple(f"x{i + 1}" for i in range(self.n))
            object.__setattr__(self, "variables", base + fiber_names(base, self.g.dim))

    @property
    def m(self) -> int:
        return self.g.dim

    @property
    def dim(self) -> int:
        return self.n + self.g.dim

    def y(self, a: int) -> Poly:
        return Poly.var(self.dim, self.n + a, self.pi.order)


def lift(h_or_piece, n: int, m: int) -> Multivector:
    """Image of an element of ``Lambda g* (x) L_M`` under ``e^I (x) P -> d_{y_I} ^ P``."""
    piece: GValued = h_or_piece
    dim = n + m
    out = Multivector.zero(dim, piece.p + piece.k, piece.order)
    for I, P in piece.items():
        fiber = Multivector.coordinate(dim, [n + a for a in I], order=piece.order)
        out = out + wedge(fiber, embed(P, dim, 0))
    return out


def lift_hpa(h: Hpa) -> Multivector:
    out = Multivector.zero(h.n + h.m, 2, h.order)
    for piece in h.pieces().values():
        out = out + lift(piece, h.n, h.m)
    return out


def fiber_kk(g: LieAlgebra, n: int, order: Optional[int] = None,
             scale: Optional[Poly] = None) -> Multivector:
    kk = embed(kk_bivector(g, order), n + g.dim, n)
    if scale is not None:
        kk = kk.scale(scale.extend(n + g.dim) if scale.nvars != n + g.dim else scale)
    return kk


def assemble(h: Hpa, omega: Optional[TwoCocycle] = None,
             kk_scale: Optional[Poly] = None) -> BundleBivector:
    """The Poisson structure on ``M x g*`` (or ``M x p`` when ``omega`` is given)."""
    pi = lift_hpa(h) + fiber_kk(h.g, h.n, h.order, kk_scale)
    if omega is not None:
        pi = pi + embed(omega.bivector(h.order), h.n + h.m, h.n)
    base = h.variables
    return BundleBivector(h.g, h.n, pi, tuple(base) + fiber_names(base, h.m), omega)


def disassemble(B: BundleBivector) -> Hpa:
    """Read an HPA back from a bundle bivector, checking the block structure."""
    n, m, dim, order = B.n, B.m, B.dim, B.pi.order
    rest = B.pi - fiber_kk(B.g, n, order)
    if B.omega is not None:
        rest = rest - embed(B.omega.bivector(order), dim, n)
    for (i, j), f in rest.items():
        for a in range(m):
            if f.depends_on(n + a):
                block = ("wedge2-TM" if j < n else "TM-x-g*" if i < n else "wedge2-g*")
                raise BlockError(block, (i, j),
                                 f"coefficient depends on fiber coordinate {B.variables[n + a]}")
    sigma0 = {}
    sigma1 = {a: {} for a in range(m)}
    sigma2 = {}
    for (i, j), f in rest.items():
        f = f.restrict(n, 0)
        if j < n:
            sigma0[(i, j)] = f
        elif i < n:
            # d_{y_a} ^ V = -sum_i V^i d_{x_i} ^ d_{y_a}
            sigma1[j - n][(i,)] = -f
        else:
            sigma2[(i - n, j - n)] = f
    s0 = Multivector(n, 2, sigma0, order)
    s1 = {a: Multivector(n, 1, comps, order) for a, comps in sigma1.items() if comps}
    return Hpa.build(B.g, n, s0, s1, sigma2, variables=B.variables[:n], order=order)


def bundle_jacobi_equivalence(h: Hpa) -> Report:
    """Compare ``[Pi, Pi] = 0`` on ``M x g*`` with the Maurer-Cartan equation for ``h``."""
    rep = Report("bundle-check")
    n, m = h.n, h.m
    names = list(h.variables) + list(fiber_names(h.variables, m))
    B = assemble(h)
    kk = fiber_kk(h.g, n, h.order)
    lifted = lift_hpa(h)
    jac = schouten(B.pi, B.pi)
    mc_ok = mc_full_check(h)
    rep.add("bundle-jacobi", jac.is_zero(), [jac.to_str(names)] if jac else [])
    rep.add("maurer-cartan", mc_ok)
    rep.add("equivalence", jac.is_zero() == mc_ok,
            detail="[Pi,Pi]=0 iff d sigma + [sigma,sigma]/2 = 0")

    d_lifted = Multivector.zero(n + m, 3, h.order)
    for piece in h.pieces().values():
        d_lifted = d_lifted + lift(ce_differential(piece), n, m)
    kk_br = schouten(kk, lifted)
    diff = kk_br - d_lifted
    rep.add("kk-bracket-is-d", diff.is_zero(), [diff.to_str(names)] if diff else [],
            detail="[pi_g*, sigma] = d sigma")
    expand = kk_br.scale(2) + schouten(lifted, lifted) - jac
    rep.add("expansion", expand.is_zero() and schouten(kk, kk).is_zero(),
            [expand.to_str(names)] if expand else [],
            detail="[Pi,Pi] = 2[pi_g*, sigma] + [sigma, sigma]")
    res = Multivector.zero(n + m, 3, h.order)
    for piece in mc_residual(h).values():
        res = res + lift(piece, n, m)
    mismatch = jac - res.scale(2)
    rep.add("blockwise-residuals", mismatch.is_zero(), [mismatch.to_str(names)] if mismatch else [],
            detail="[Pi,Pi] = 2 lift(d sigma + [sigma,sigma]/2)")
    rep.data["bivector"] = B.pi.to_str(names)
    return rep


def fiber_invariance(B: BundleBivector) -> Report:
    """Fiber translations preserve ``Pi`` up to the constant part of ``d_{y_a} pi_KK``.

    This is the trivialized form of the fiber action being Poisson: ``Pi - pi_KK`` must
    not depend on ``y``.
    """
    rep = Report("fiber-invariance")
    kk = fiber_kk(B.g, B.n, B.pi.order)
    for a in range(B.m):
        d = Multivector.coordinate(B.dim, [B.n + a], order=B.pi.order)
        r = schouten(d, B.pi) - schouten(d, kk)
        rep.add(f"translate({B.variables[B.n + a]})", r.is_zero(),
                [r.to_str(B.variables)] if r else [])
    return rep


# -- moment maps --------------------------------------------------------------

@dataclass(frozen=True)
class MomentMapData:
    pi: Multivector
    g: LieAlgebra
    mu: Tuple[Poly, ...]
    omega: Optional[TwoCocycle] = None
    variables: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.mu) != self.g.dim:
            raise DimensionError("one moment component per basis vector is required")
        if any(f.nvars != self.pi.dim for f in self.mu):
            raise DimensionError("moment components live on the wrong space")
        if not self.variables:
            object.__setattr__(self, "variables",
                               tuple(f"x{i + 1}" for i in range(self.pi.dim)))


def induced_action(d: MomentMapData) -> List[Multivector]:
    return [hamiltonian_vf(d.pi, f) for f in d.mu]


def moment_check(d: MomentMapData) -> Report:
    """``{mu_a, mu_b} = sum_k c^k_ab mu_k (+ omega_ab)`` and invariance of the source bivector."""
    rep = Report("moment-check")
    names = d.variables
    g = d.g
    order = d.pi.order
    ok = True
    for a, b in combinations(range(g.dim), 2):
        lhs = poisson_bracket(d.pi, d.mu[a], d.mu[b])
        rhs = Poly.zero(d.pi.dim, order)
        for k, c in g.bracket_basis(a, b).items():
            rhs = rhs + d.mu[k].scale(c)
        if d.omega is not None:
            rhs = rhs + d.omega.omega[a][b]
        r = lhs - rhs
        ok &= r.is_zero()
        rep.add(f"bracket(e{a + 1},e{b + 1})", r.is_zero(), [r.to_str(names)] if r else [])
    actions = induced_action(d)
    if ok:
        for a, X in enumerate(actions):
            r = schouten(X, d.pi)
            rep.add(f"action(e{a + 1})-preserves-pi", r.is_zero(), [r.to_str(names)] if r else [])
    else:
        rep.add("action-preserves-pi", None, detail="skipped: moment map equations fail")
    rep.data["action"] = {f"e{a + 1}": X.to_str(names) for a, X in enumerate(actions)}
    return rep


def fiber_moment(B: BundleBivector) -> MomentMapData:
    return MomentMapData(B.pi, B.g, tuple(B.y(a) for a in range(B.m)), B.omega, B.variables)


def hamiltonianize(h: Hpa, omega: Optional[TwoCocycle] = None
                   ) -> Tuple[BundleBivector, MomentMapData, Report]:
    """The universal Hamiltonian action ``P = M x g*`` (or ``M x p``) of a Poisson action."""
    if not mc_check(h).passed:
        raise ValueError("hamiltonianize needs a Maurer-Cartan input")
    if not h.sigma2.is_zero():
        raise ValueError("hamiltonianize needs sigma2 = 0 (a true Poisson action)")
    B = assemble(h, omega)
    d = fiber_moment(B)
    rep = Report("hamiltonianize")
    rep.extend(moment_check(d), "moment:")
    jac = schouten(B.pi, B.pi)
    rep.add("P-poisson", jac.is_zero(), [jac.to_str(B.variables)] if jac else [])
    for a, X in enumerate(induced_action(d)):
        bad = []
        for i in range(h.n):
            lhs = X.component((i,))
            rhs = h.V(a).component((i,)).extend(B.dim)
            if lhs != rhs:
                bad.append(f"{h.variables[i]}: {(lhs - rhs).to_str(B.variables)}")
        rep.add(f"projects-to-sigma1(e{a + 1})", not bad, bad)
    rep.data["bivector"] = B.pi.to_str(B.variables)
    rep.data["moment"] = [f.to_str(B.variables) for f in d.mu]
    return B, d, rep


def _compose(f: Poly, values: Sequence[Poly], nvars: int) -> Poly:
    if f.nvars == 0:
        return f.extend(nvars)
    return f.substitute(values)


def universal_property_witness(N_pi: Multivector, mu: MomentMapData, f: Sequence[Poly],
                               h: Hpa, N_names: Sequence[str] = ()) -> Report:
    """Check the hypotheses on ``(N, mu, f)``, then that ``f x mu : N -> P`` is Poisson and
    intertwines the moment maps.

    ``h`` must be MC with constant ``sigma2``; a nonzero constant ``sigma2`` is the affine
    (non-equivariant) case and must agree with ``mu.omega``.
    """
    rep = Report("universal-property")
    names = list(N_names) or list(mu.variables)
    dimN = N_pi.dim
    if len(f) != h.n:
        raise DimensionError("f needs one component per coordinate of M")
    if any(p.nvars != dimN for p in f):
        raise DimensionError("components of f live on the wrong space")
    if not all(v.as_poly().is_constant() for _, v in h.sigma2.items()):
        raise ValueError("the target HPA must have constant sigma2")
    if not mc_check(h).passed:
        raise ValueError("the target HPA is not Maurer-Cartan")

    # f Poisson
    bad = []
    for i, j in combinations(range(h.n), 2):
        lhs = poisson_bracket(N_pi, f[i], f[j])
        rhs = _compose(h.sigma0.full(i, j), f, dimN)
        if lhs != rhs:
            bad.append(f"({h.variables[i]},{h.variables[j]}): {(lhs - rhs).to_str(names)}")
    f_poisson = rep.add("f-poisson", not bad, bad)

    mom = moment_check(mu)
    rep.extend(mom, "mu:")
    # the affine shift of mu must match the constant sigma2 of the target
    shift_bad = []
    for a, b in combinations(range(h.m), 2):
        want = h.s(a, b).constant_value()
        have = mu.omega.omega[a][b] if mu.omega is not None else Fraction(0)
        if want != have:
            shift_bad.append(f"(e{a + 1},e{b + 1}): target {want}, moment map {have}")
    rep.add("mu-target-matches", not shift_bad, shift_bad)

    eq_ok = True
    for a in range(h.m):
        bad = []
        for i in range(h.n):
            lhs = poisson_bracket(N_pi, mu.mu[a], f[i])
            rhs = _compose(h.V(a).component((i,)), f, dimN)
            if lhs != rhs:
                bad.append(f"{h.variables[i]}: {(lhs - rhs).to_str(names)}")
        eq_ok &= not bad
        rep.add(f"f-equivariant(e{a + 1})", not bad, bad)

    if not (f_poisson.passed and mom.passed and eq_ok and not shift_bad):
        rep.add("ftilde-poisson", None, detail="skipped: a precondition failed")
        rep.add("ftilde-moment", None, detail="skipped: a precondition failed")
        return rep
    B = assemble(h)
    F = list(f) + list(mu.mu)
    bad = []
    for I, J in combinations(range(B.dim), 2):
        lhs = poisson_bracket(N_pi, F[I], F[J])
        rhs = _compose(B.pi.full(I, J), F, dimN)
        if lhs != rhs:
            bad.append(f"({B.variables[I]},{B.variables[J]}): {(lhs - rhs).to_str(names)}")
    rep.add("ftilde-poisson", not bad, bad)
    bad = [f"y{a + 1}" for a in range(h.m) if F[h.n + a] != mu.mu[a]]
    rep.add("ftilde-moment", not bad, bad)
    rep.data["ftilde"] = [p.to_str(names) for p in F]
    return rep
