"""Polynomial multivector fields on coordinate space and the Schouten bracket.

A degree-``k`` multivector is stored as ``{(i_1 < ... < i_k): coefficient}``;
``(0, 1) -> f`` means ``f d_0 ^ d_1``.  Degree 0 multivectors are functions and
degree -1 is allowed only as the (always zero) bracket of two functions.

Sign conventions (shifted degree of a degree-``k`` field is ``k - 1``):

* ``schouten(X, Y)`` is the Lie bracket of vector fields and ``schouten(X, f) = X(f)``;
* ``schouten(X, T)`` is the Lie derivative ``L_X T``;
* graded antisymmetry ``[P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]``.

The Poisson bracket of a bivector is ``{f, g} = sum_{i<j} pi^{ij} (d_i f d_j g - d_j f d_i g)``
and ``X_f(g) = {f, g}``; with these conventions ``schouten(pi, f) = -X_f``.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .poly import DimensionError, Poly, Scalar

Index = Tuple[int, ...]


def sort_sign(indices: Sequence[int]) -> Tuple[int, Index]:
    """Sign of the permutation sorting ``indices`` and the sorted tuple; sign 0 on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class Multivector:
    __slots__ = ("dim", "degree", "order", "_comps")

    def __init__(self, dim: int, degree: int, comps: Optional[Dict[Index, Poly]] = None,
                 order: Optional[int] = None):
        if degree < -1:
            raise DimensionError(f"degree {degree} is below -1")
        self.dim = dim
        self.degree = degree
        self.order = order
        self._comps: Dict[Index, Poly] = {k: v for k, v in (comps or {}).items() if v}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, degree: int, order: Optional[int] = None) -> "Multivector":
        return cls(dim, degree, {}, order)

    @classmethod
    def from_components(cls, dim: int, degree: int, comps: Dict[Sequence[int], Poly],
                        order: Optional[int] = None) -> "Multivector":
        """Build from arbitrarily ordered index tuples, applying antisymmetry."""
        out: Dict[Index, Poly] = {}
        for idx, f in comps.items():
            if len(idx) != degree:
                raise DimensionError(f"index tuple {tuple(idx)} does not have length {degree}")
            if any(not 0 <= i < dim for i in idx):
                raise DimensionError(f"index tuple {tuple(idx)} out of range for dimension {dim}")
            if f.nvars != dim:
                raise DimensionError("coefficient lives on the wrong number of variables")
            if f.order != order:
                raise DimensionError("coefficient has the wrong truncation order")
            sign, key = sort_sign(idx)
            if not sign:
                continue
            term = f if sign > 0 else -f
            out[key] = out[key] + term if key in out else term
        return cls(dim, degree, out, order)

    @classmethod
    def function(cls, f: Poly) -> "Multivector":
        return cls(f.nvars, 0, {(): f}, f.order)

    @classmethod
    def vector(cls, coeffs: Sequence[Poly]) -> "Multivector":
        if not coeffs:
            raise DimensionError("a vector field on a point has no components")
        return cls(len(coeffs), 1, {(i,): c for i, c in enumerate(coeffs)}, coeffs[0].order)

    @classmethod
    def coordinate(cls, dim: int, indices: Sequence[int], coeff: Optional[Poly] = None,
                   order: Optional[int] = None) -> "Multivector":
        """``coeff * d_{i_1} ^ ... ^ d_{i_k}`` (coefficient 1 by default)."""
        if coeff is None:
            coeff = Poly.const(dim, 1, order)
        return cls.from_components(dim, len(indices), {tuple(indices): coeff}, coeff.order)

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterator[Tuple[Index, Poly]]:
        for k in sorted(self._comps):
            yield k, self._comps[k]

    def component(self, indices: Sequence[int]) -> Poly:
        """Coefficient at ``indices`` (any order; sign of the sorting permutation applied)."""
        sign, key = sort_sign(indices)
        f = self._comps.get(key) if sign else None
        if f is None:
            return Poly.zero(self.dim, self.order)
        return f if sign > 0 else -f

    def full(self, i: int, j: int) -> Poly:
        """Antisymmetric extension ``pi^{ij}`` of a bivector."""
        return self.component((i, j))

    def as_poly(self) -> Poly:
        if self.degree != 0:
            raise DimensionError("only degree-0 multivectors are functions")
        return self._comps.get((), Poly.zero(self.dim, self.order))

    def is_zero(self) -> bool:
        return not self._comps

    def __bool__(self) -> bool:
        return bool(self._comps)

    def __len__(self) -> int:
        return len(self._comps)

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "Multivector") -> None:
        if not isinstance(other, Multivector):
            raise TypeError(f"expected a Multivector, got {type(other).__name__}")
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.order != other.order:
            raise DimensionError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        if self.degree != other.degree:
            if not other._comps:
                return self
            if not self._comps:
                return other
            raise DimensionError(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self._comps)
        for k, v in other._comps.items():
            out[k] = out[k] + v if k in out else v
        return Multivector(self.dim, self.degree, out, self.order)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, self.degree, {k: -v for k, v in self._comps.items()},
                           self.order)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c: Union[Scalar, Poly]) -> "Multivector":
        return Multivector(self.dim, self.degree, {k: v * c for k, v in self._comps.items()},
                           self.order)

    def map_coefficients(self, fn) -> "Multivector":
        comps = {k: fn(v) for k, v in self._comps.items()}
        order = next(iter(comps.values())).order if comps else self.order
        return Multivector(self.dim, self.degree, comps, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if not self._comps and not other._comps:
            return True
        return self.degree == other.degree and self._comps == other._comps

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self._comps.items())))

    # -- products -----------------------------------------------------------

    def wedge(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __call__(self, f: Poly) -> Poly:
        """Apply a vector field to a function."""
        if self.degree != 1:
            raise DimensionError("only vector fields act on functions")
        out = Poly.zero(self.dim, self.order)
        for (i,), c in self._comps.items():
            d = f.diff(i)
            if d:
                out = out + c * d
        return out

    # -- rendering ----------------------------------------------------------

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.dim)]
        if not self._comps:
            return "0"
        out = ""
        for idx, f in self.items():
            coef = f.to_str(names)
            sign = "+"
            if len(f) > 1:
                coef = f"({coef})"
            elif coef.startswith("-"):
                sign, coef = "-", coef[1:]
            basis = "^".join(f"d{names[i]}" for i in idx)
            piece = f"{coef} {basis}" if basis else coef
            if not out:
                out = piece if sign == "+" else "-" + piece
            else:
                out += f" {sign} {piece}"
        return out

    def __repr__(self) -> str:
        return f"Multivector(deg={self.degree}, {self.to_str()})"


def wedge(P: Multivector, Q: Multivector) -> Multivector:
    """Exterior product of multivector fields."""
    P._check(Q)
    deg = P.degree + Q.degree
    if deg > P.dim:
        raise DimensionError(f"wedge of degrees {P.degree} and {Q.degree} exceeds dimension {P.dim}")
    out: Dict[Index, Poly] = {}
    for I, f in P._comps.items():
        for J, g in Q._comps.items():
            sign, K = sort_sign(I + J)
            if not sign:
                continue
            term = f * g
            if sign < 0:
                term = -term
            out[K] = out[K] + term if K in out else term
    return Multivector(P.dim, deg, out, P.order)


# -- Schouten bracket via vector-field factorization -------------------------
#
# Each component f d_I is written as (f d_{i_1}) ^ d_{i_2} ^ ... ^ d_{i_p}; the bracket
# of two wedge products of vector fields is
#   sum_{i,j} (-1)^{i+j} [X_i, Y_j] ^ X_1..^X_i..X_p ^ Y_1..^Y_j..Y_q.

_Factor = Tuple[Optional[Poly], int]   # (coefficient or None for 1, coordinate index)


def _accumulate(out: Dict[Index, Poly], coeff: Poly, indices: Sequence[int]) -> None:
    if not coeff:
        return
    sign, key = sort_sign(indices)
    if not sign:
        return
    term = coeff if sign > 0 else -coeff
    if key in out:
        v = out[key] + term
        if v:
            out[key] = v
        else:
            del out[key]
    else:
        out[key] = term


def _vf_bracket(X: _Factor, Y: _Factor, one: Poly) -> List[Tuple[Poly, int]]:
    """Lie bracket of ``a d_alpha`` and ``b d_beta`` as a list of ``(coeff, index)``."""
    a, alpha = X
    b, beta = Y
    out = []
    if b is not None:
        db = b.diff(alpha)
        if db:
            out.append(((a * db) if a is not None else db, beta))
    if a is not None:
        da = a.diff(beta)
        if da:
            out.append((-((b * da) if b is not None else da), alpha))
    return out


def schouten(P: Multivector, Q: Multivector) -> Multivector:
    """Schouten-Nijenhuis bracket ``[P, Q]`` of degree ``deg P + deg Q - 1``."""
    P._check(Q)
    p, q = P.degree, Q.degree
    deg = p + q - 1
    dim = P.dim
    if deg > dim:
        return Multivector.zero(dim, deg, P.order)
    if deg < 0 or p < 0 or q < 0:
        return Multivector.zero(dim, -1, P.order)
    one = Poly.const(dim, 1, P.order)
    out: Dict[Index, Poly] = {}
    if p == 0:
        # [f, Q] = (-1)^q [Q, f]
        R = schouten(Q, P)
        return R if q % 2 == 0 else -R
    if q == 0:
        g = Q.as_poly()
        for I, f in P._comps.items():
            for r, i in enumerate(I):
                dg = g.diff(i)
                if not dg:
                    continue
                rest = I[:r] + I[r + 1:]
                coeff = f * dg
                if (p - 1 - r) % 2:
                    coeff = -coeff
                _accumulate(out, coeff, rest)
        return Multivector(dim, deg, out, P.order)
    for I, f in P._comps.items():
        xs: List[_Factor] = [(f, I[0])] + [(None, i) for i in I[1:]]
        for J, g in Q._comps.items():
            ys: List[_Factor] = [(g, J[0])] + [(None, j) for j in J[1:]]
            for r, X in enumerate(xs):
                for s, Y in enumerate(ys):
                    if X[0] is None and Y[0] is None:
                        continue
                    br = _vf_bracket(X, Y, one)
                    if not br:
                        continue
                    sign = -1 if (r + s) % 2 else 1
                    rest_x = xs[:r] + xs[r + 1:]
                    rest_y = ys[:s] + ys[s + 1:]
                    factor = one
                    for c, _ in rest_x + rest_y:
                        if c is not None:
                            factor = factor * c
                    tail = [i for _, i in rest_x] + [j for _, j in rest_y]
                    for c, k in br:
                        coeff = c * factor
                        if sign < 0:
                            coeff = -coeff
                        _accumulate(out, coeff, [k] + tail)
    return Multivector(dim, deg, out, P.order)


# -- Poisson calculus ---------------------------------------------------------

def poisson_bracket(pi: Multivector, f: Poly, g: Poly) -> Poly:
    """``{f, g} = sum_{i<j} pi^{ij} (d_i f d_j g - d_j f d_i g)``."""
    if pi.degree != 2:
        raise DimensionError("poisson_bracket needs a bivector")
    out = Poly.zero(pi.dim, pi.order)
    df = [f.diff(i) for i in range(pi.dim)]
    dg = [g.diff(i) for i in range(pi.dim)]
    for (i, j), c in pi.items():
        t = df[i] * dg[j] - df[j] * dg[i]
        if t:
            out = out + c * t
    return out


def hamiltonian_vf(pi: Multivector, f: Poly) -> Multivector:
    """The vector field ``X_f`` with ``X_f(g) = {f, g}``."""
    if pi.degree != 2:
        raise DimensionError("hamiltonian_vf needs a bivector")
    comps: Dict[Index, Poly] = {}
    df = [f.diff(i) for i in range(pi.dim)]
    for (i, j), c in pi.items():
        if df[i]:
            _accumulate(comps, c * df[i], (j,))
        if df[j]:
            _accumulate(comps, -(c * df[j]), (i,))
    return Multivector(pi.dim, 1, comps, pi.order)


def lie_derivative(X: Multivector, T: Union[Multivector, Poly]) -> Union[Multivector, Poly]:
    """``L_X T``; returns a Poly when ``T`` is a Poly."""
    if X.degree != 1:
        raise DimensionError("lie_derivative needs a vector field")
    if isinstance(T, Poly):
        return X(T)
    return schouten(X, T)


def embed(P: Multivector, dim: int, offset: int = 0) -> Multivector:
    """Push ``P`` forward along ``R^k -> R^dim`` placing coordinate ``i`` at ``offset + i``."""
    comps = {tuple(i + offset for i in I): f.extend(dim, offset) for I, f in P.items()}
    return Multivector(dim, P.degree, comps, P.order)
