"""Up-to-homotopy Poisson actions ``sigma = sigma0 + sigma1 + sigma2``.

``sigma0`` is a bivector on ``R^n``, ``sigma1`` a g*-valued vector field and
``sigma2`` a g*-valued 2-form of functions.  The Maurer-Cartan equation
``d sigma + [sigma, sigma]/2 = 0`` splits into

* mc0: ``[sigma0, sigma0] = 0``
* mc1: ``L_{sigma1(u)} sigma0 = 0``
* mc2: ``[sigma1(u), sigma1(v)] = sigma1([u, v]) + X_{sigma2(u, v)}``
* mc3: ``L_{sigma1(u)} sigma2(v, w) + sigma2(u, [v, w]) + c.p. = 0``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .lie import GValued, LieAlgebra, ce_differential, graded_bracket
from .symcore import (DimensionError, Multivector, Poly, hamiltonian_vf, poisson_bracket,
                      schouten)


class NotMaurerCartan(ValueError):
    """An operation requiring a Maurer-Cartan element received something else."""


@dataclass(frozen=True)
class Hpa:
    g: LieAlgebra
    n: int
    sigma0: Multivector
    sigma1: GValued
    sigma2: GValued
    variables: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.sigma0.dim != self.n or (self.sigma0 and self.sigma0.degree != 2):
            raise DimensionError("sigma0 must be a bivector on R^n")
        for s, p, k in ((self.sigma1, 1, 1), (self.sigma2, 2, 0)):
            if s.g != self.g or s.n != self.n or s.p != p or (not s.is_zero() and s.k != k):
                raise DimensionError(f"sigma{p} has the wrong shape")
            if s.order != self.sigma0.order:
                raise DimensionError("sigma components must share one truncation order")
        if not self.variables:
            object.__setattr__(self, "variables", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.variables) != self.n:
            raise DimensionError("one variable name per coordinate is required")

    @property
    def order(self) -> Optional[int]:
        return self.sigma0.order

    @property
    def m(self) -> int:
        return self.g.dim

    @classmethod
    def build(cls, g: LieAlgebra, n: int, sigma0: Optional[Multivector] = None,
              sigma1: Optional[Mapping[int, Multivector]] = None,
              sigma2: Optional[Mapping[Tuple[int, int], Poly]] = None,
              variables: Sequence[str] = (), order: Optional[int] = None) -> "Hpa":
        """Convenience constructor from plain dictionaries (0-based basis indices)."""
        if sigma0 is None:
            sigma0 = Multivector.zero(n, 2, order)
        s1 = GValued(g, n, 1, 1, {(a,): v for a, v in (sigma1 or {}).items()}, order)
        vals = {}
        for (a, b), f in (sigma2 or {}).items():
            if a == b:
                if f:
                    raise DimensionError("sigma2 must be antisymmetric")
                continue
            key, val = ((a, b), f) if a < b else ((b, a), -f)
            vals[key] = vals[key] + val if key in vals else val
        s2 = GValued.from_polys(g, n, 2, vals, order)
        return cls(g, n, sigma0, s1, s2, tuple(variables))

    def zero_function(self) -> Poly:
        return Poly.zero(self.n, self.order)

    def V(self, a: int) -> Multivector:
        """``sigma1(e_a)``."""
        return self.sigma1(a)

    def V_of(self, u: Sequence[Fraction]) -> Multivector:
        out = Multivector.zero(self.n, 1, self.order)
        for a, c in enumerate(u):
            if c:
                out = out + self.V(a).scale(c)
        return out

    def s(self, a: int, b: int) -> Poly:
        """``sigma2(e_a, e_b)``."""
        return self.sigma2.poly(a, b)

    def pieces(self) -> Dict[int, GValued]:
        """The three summands as elements of ``Lambda g* (x) L_M`` keyed by form degree."""
        s0 = GValued(self.g, self.n, 0, 2, {(): self.sigma0}, self.order)
        return {0: s0, 1: self.sigma1, 2: self.sigma2}

    def with_sigma(self, sigma0=None, sigma1=None, sigma2=None) -> "Hpa":
        return Hpa(self.g, self.n, sigma0 if sigma0 is not None else self.sigma0,
                   sigma1 if sigma1 is not None else self.sigma1,
                   sigma2 if sigma2 is not None else self.sigma2, self.variables)


@dataclass
class ComponentCheck:
    name: str
    residuals: List[Tuple[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.residuals


@dataclass
class MCReport:
    components: Dict[str, ComponentCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.components.values())

    def __getitem__(self, key: str) -> ComponentCheck:
        return self.components[key]


def _label(*idx: int) -> str:
    return "(" + ", ".join(f"e{i + 1}" for i in idx) + ")"


def mc_check(h: Hpa) -> MCReport:
    """Componentwise Maurer-Cartan check, collecting every nonzero residual."""
    g, m = h.g, h.m
    mc0 = ComponentCheck("mc0")
    r = schouten(h.sigma0, h.sigma0)
    if r:
        mc0.residuals.append(("[sigma0, sigma0]", r))

    mc1 = ComponentCheck("mc1")
    for a in range(m):
        r = schouten(h.V(a), h.sigma0)
        if r:
            mc1.residuals.append((_label(a), r))

    mc2 = ComponentCheck("mc2")
    for a, b in combinations(range(m), 2):
        r = schouten(h.V(a), h.V(b))
        for k, c in g.bracket_basis(a, b).items():
            r = r - h.V(k).scale(c)
        r = r - hamiltonian_vf(h.sigma0, h.s(a, b))
        if r:
            mc2.residuals.append((_label(a, b), r))

    mc3 = ComponentCheck("mc3")
    for a, b, c in combinations(range(m), 3):
        total = h.zero_function()
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            total = total + h.V(u)(h.s(v, w))
            for k, x in g.bracket_basis(v, w).items():
                total = total + h.s(u, k).scale(x)
        if total:
            mc3.residuals.append((_label(a, b, c), total))
    return MCReport({"mc0": mc0, "mc1": mc1, "mc2": mc2, "mc3": mc3})


def mc_residual(h: Hpa) -> Dict[int, GValued]:
    """``d sigma + [sigma, sigma]/2`` split by form degree (0..3; degree 4 vanishes identically)."""
    pieces = h.pieces()
    out: Dict[int, GValued] = {}
    half = Fraction(1, 2)
    for p in range(4):
        k = 3 - p
        total = GValued.zero(h.g, h.n, p, k, h.order)
        if p >= 1:
            total = total + ce_differential(pieces[p - 1])
        for i in range(3):
            j = p - i
            if 0 <= j <= 2:
                total = total + graded_bracket(pieces[i], pieces[j]).scale(half)
        out[p] = total
    return out


def mc_full_check(h: Hpa) -> bool:
    return all(r.is_zero() for r in mc_residual(h).values())


# -- gauge transformations ---------------------------------------------------

def make_tau(h: Hpa, values: Mapping[int, Poly]) -> GValued:
    return GValued.from_polys(h.g, h.n, 1, {(a,): f for a, f in values.items()}, h.order)


def gauge(h: Hpa, tau: GValued, check: bool = True) -> Hpa:
    """Re-splitting of the extension by ``tau in g* (x) C(M)``.

    ``sigma1(u) -> sigma1(u) + X_{tau(u)}`` and

        sigma2 -> sigma2 + d tau - [tau, sigma1] + [tau, [tau, sigma0]]/2

    i.e. ``sigma2(u, v)`` gains ``-tau([u, v]) + L_{sigma1(u)} tau(v) - L_{sigma1(v)} tau(u)
    + {tau(u), tau(v)}``.  This is the exponentiated action of ``-tau`` and preserves the
    Maurer-Cartan equation.
    """
    if tau.p != 1 or (not tau.is_zero() and tau.k != 0) or tau.g != h.g or tau.n != h.n:
        raise DimensionError("tau must be a g*-valued function")
    if check and not mc_check(h).passed:
        raise NotMaurerCartan("gauge transformation needs a Maurer-Cartan input")
    s0 = h.pieces()[0]
    t_s0 = graded_bracket(tau, s0)
    sigma1 = h.sigma1 - t_s0
    sigma2 = (h.sigma2 + ce_differential(tau) - graded_bracket(tau, h.sigma1)
              + graded_bracket(tau, t_s0).scale(Fraction(1, 2)))
    return h.with_sigma(sigma1=_as_shape(sigma1, h, 1, 1), sigma2=_as_shape(sigma2, h, 2, 0))


def _as_shape(x: GValued, h: Hpa, p: int, k: int) -> GValued:
    if x.is_zero():
        return GValued.zero(h.g, h.n, p, k, h.order)
    return x


def printed_gauge(h: Hpa, tau: GValued) -> Hpa:
    """The explicit component formula exactly as usually printed:

    ``sigma2(u, v) + tau([u, v]) + L_{sigma1(u)} tau(v) - L_{sigma1(v)} tau(u) + {tau(u), tau(v)}/2``.

    Kept only to report whether it agrees with :func:`gauge`.
    """
    g, m = h.g, h.m
    t = [tau.poly(a) for a in range(m)]
    s1 = {(a,): h.V(a) + hamiltonian_vf(h.sigma0, t[a]) for a in range(m)}
    s2 = {}
    for a, b in combinations(range(m), 2):
        f = h.s(a, b)
        for k, c in g.bracket_basis(a, b).items():
            f = f + t[k].scale(c)
        f = f + h.V(a)(t[b]) - h.V(b)(t[a])
        f = f + poisson_bracket(h.sigma0, t[a], t[b]).scale(Fraction(1, 2))
        s2[(a, b)] = Multivector.function(f)
    return h.with_sigma(sigma1=_as_shape(GValued(g, h.n, 1, 1, s1, h.order), h, 1, 1),
                        sigma2=_as_shape(GValued(g, h.n, 2, 0, s2, h.order), h, 2, 0))


# -- the extension g_M = g + C(M) -------------------------------------------

@dataclass(frozen=True)
class ExtensionElement:
    u: Tuple[Fraction, ...]
    f: Poly

    @classmethod
    def basis(cls, h: Hpa, a: int) -> "ExtensionElement":
        return cls(tuple(Fraction(int(i == a)) for i in range(h.m)), h.zero_function())

    @classmethod
    def function(cls, h: Hpa, f: Poly) -> "ExtensionElement":
        return cls(tuple(Fraction(0) for _ in range(h.m)), f)

    def __add__(self, other: "ExtensionElement") -> "ExtensionElement":
        return ExtensionElement(tuple(a + b for a, b in zip(self.u, other.u)), self.f + other.f)

    def scale(self, c) -> "ExtensionElement":
        return ExtensionElement(tuple(a * c for a in self.u), self.f.scale(c))

    def is_zero(self) -> bool:
        return not any(self.u) and self.f.is_zero()


def _sigma2_on(h: Hpa, u: Sequence[Fraction], v: Sequence[Fraction]) -> Poly:
    out = h.zero_function()
    for (a, b), val in h.sigma2.items():
        coeff = u[a] * v[b] - u[b] * v[a]
        if coeff:
            out = out + val.as_poly().scale(coeff)
    return out


def extension_bracket(h: Hpa, x: ExtensionElement, y: ExtensionElement) -> ExtensionElement:
    """``[u, v] = [u, v]_g + sigma2(u, v)``, ``[u, f] = L_{sigma1(u)} f``, ``[f, g] = {f, g}``."""
    u = h.g.bracket(x.u, y.u)
    f = (_sigma2_on(h, x.u, y.u) + h.V_of(x.u)(y.f) - h.V_of(y.u)(x.f)
         + poisson_bracket(h.sigma0, x.f, y.f))
    return ExtensionElement(u, f)


def jacobi_spotcheck(h: Hpa, a: ExtensionElement, b: ExtensionElement,
                     c: ExtensionElement) -> ExtensionElement:
    """Cyclic sum ``[[a, b], c] + [[b, c], a] + [[c, a], b]``."""
    br = lambda x, y: extension_bracket(h, x, y)  # noqa: E731
    return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)


def _map_mv(P: Multivector, fn, order: Optional[int]) -> Multivector:
    return Multivector(P.dim, P.degree, {I: fn(f) for I, f in P.items()}, order)


def _map_hpa(h: Hpa, fn, order: Optional[int]) -> Hpa:
    def gv(x: GValued) -> GValued:
        return GValued(x.g, x.n, x.p, x.k, {I: _map_mv(v, fn, order) for I, v in x.items()}, order)
    return Hpa(h.g, h.n, _map_mv(h.sigma0, fn, order), gv(h.sigma1), gv(h.sigma2), h.variables)


def retruncate(h: Hpa, order: Optional[int]) -> Hpa:
    """The same HPA with every coefficient re-expressed modulo ``h^order``."""
    return _map_hpa(h, lambda f: f.truncate(order), order)


def hbar_part(h: Hpa, j: int) -> Hpa:
    """The ``h^j`` coefficients of all three pieces, as an untruncated HPA."""
    return _map_hpa(h, lambda f: f.hbar_coefficient(j).truncate(None), None)
