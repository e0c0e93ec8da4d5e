"""Odd-cotangent model of multivector fields.

A multivector ``sum f_I d_I`` is read as the superfunction ``sum f_I xi_{i_1} ... xi_{i_k}``
on ``T*[1]R^n`` with odd coordinates ``xi_i``.  Products are the supercommutative
product, and the Schouten bracket is the odd Poisson bracket

    [P, Q] = sum_i (P <d/dxi_i) (d/dx_i Q) - (d/dx_i P) (d/dxi_i> Q)

with the odd derivative acting from the right on ``P`` and from the left on ``Q``.
This is an independent route to :func:`~poisson_hpa.symcore.multivector.wedge` and
:func:`~poisson_hpa.symcore.multivector.schouten`, kept for cross-checking.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .multivector import Multivector
from .poly import DimensionError, Poly

Monomial = Tuple[int, ...]


def _merge(a: Monomial, b: Monomial) -> Tuple[int, Monomial]:
    """Multiply xi_a * xi_b of sorted odd monomials; returns (sign, sorted monomial)."""
    if set(a) & set(b):
        return 0, ()
    # count inversions between the two sorted runs
    inv = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inv += j
    return (-1 if inv % 2 else 1), tuple(sorted(a + b))


class OddModel:
    __slots__ = ("dim", "order", "terms")

    def __init__(self, dim: int, terms: Optional[Dict[Monomial, Poly]] = None,
                 order: Optional[int] = None):
        self.dim = dim
        self.order = order
        self.terms: Dict[Monomial, Poly] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_multivector(cls, P: Multivector) -> "OddModel":
        return cls(P.dim, dict(P.items()), P.order)

    def to_multivector(self) -> Multivector:
        degrees = {len(m) for m in self.terms}
        if len(degrees) > 1:
            raise DimensionError("inhomogeneous odd polynomial")
        deg = degrees.pop() if degrees else 0
        return Multivector(self.dim, deg, dict(self.terms), self.order)

    def _add_term(self, out: Dict[Monomial, Poly], m: Monomial, c: Poly) -> None:
        if m in out:
            out[m] = out[m] + c
        else:
            out[m] = c

    def __add__(self, other: "OddModel") -> "OddModel":
        out = dict(self.terms)
        for m, c in other.terms.items():
            self._add_term(out, m, c)
        return OddModel(self.dim, out, self.order)

    def __neg__(self) -> "OddModel":
        return OddModel(self.dim, {m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other: "OddModel") -> "OddModel":
        return self + (-other)

    def __mul__(self, other: "OddModel") -> "OddModel":
        out: Dict[Monomial, Poly] = {}
        for a, f in self.terms.items():
            for b, g in other.terms.items():
                sign, m = _merge(a, b)
                if sign:
                    self._add_term(out, m, f * g if sign > 0 else -(f * g))
        return OddModel(self.dim, out, self.order)

    def diff_even(self, i: int) -> "OddModel":
        return OddModel(self.dim, {m: c.diff(i) for m, c in self.terms.items()}, self.order)

    def diff_odd_right(self, i: int) -> "OddModel":
        out = {}
        for m, c in self.terms.items():
            if i in m:
                r = m.index(i)
                sign = -1 if (len(m) - 1 - r) % 2 else 1
                out[m[:r] + m[r + 1:]] = c if sign > 0 else -c
        return OddModel(self.dim, out, self.order)

    def diff_odd_left(self, i: int) -> "OddModel":
        out = {}
        for m, c in self.terms.items():
            if i in m:
                r = m.index(i)
                out[m[:r] + m[r + 1:]] = -c if r % 2 else c
        return OddModel(self.dim, out, self.order)

    def bracket(self, other: "OddModel") -> "OddModel":
        result = OddModel(self.dim, {}, self.order)
        for i in range(self.dim):
            result = result + self.diff_odd_right(i) * other.diff_even(i)
            result = result - self.diff_even(i) * other.diff_odd_left(i)
        return result


def odd_wedge(P: Multivector, Q: Multivector) -> Multivector:
    R = OddModel.from_multivector(P) * OddModel.from_multivector(Q)
    return _homogeneous(R, P.degree + Q.degree)


def odd_schouten(P: Multivector, Q: Multivector) -> Multivector:
    R = OddModel.from_multivector(P).bracket(OddModel.from_multivector(Q))
    return _homogeneous(R, P.degree + Q.degree - 1)


def _homogeneous(R: OddModel, degree: int) -> Multivector:
    if degree < 0 or degree > R.dim:
        if R.terms:
            raise DimensionError("nonzero result in an impossible degree")
        return Multivector.zero(R.dim, max(degree, -1), R.order)
    return Multivector(R.dim, degree, dict(R.terms), R.order)
