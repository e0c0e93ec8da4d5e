"""Lie algebras by structure constants and the DGLA of Lie-algebra-valued multivectors.

Exterior forms on the Lie algebra are evaluated with the determinant convention,
``(a ^ b)(u, v) = a(u) b(v) - a(v) b(u)``, so a ``p``-form is determined by its
values on increasing basis tuples.  The Chevalley-Eilenberg differential has
trivial coefficients::

    (d a)(u, v)    = -a([u, v])
    (d a)(u, v, w) = -(a([u, v], w) + a([v, w], u) + a([w, u], v))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .symcore import DimensionError, Multivector, Poly, schouten, sort_sign

Index = Tuple[int, ...]


class LieAlgebraError(ValueError):
    """Structure constants that do not define a Lie algebra."""

    def __init__(self, message: str, triple: Optional[Tuple[int, int, int]] = None):
        super().__init__(message)
        self.triple = triple


class LieAlgebra:
    """A finite-dimensional Lie algebra given by ``[e_i, e_j] = sum_k c^k_ij e_k`` (0-based)."""

    def __init__(self, dim: int, brackets: Mapping[Tuple[int, int], Mapping[int, Fraction]],
                 check: bool = True):
        self.dim = dim
        table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j), row in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= min(row, default=0)
                    and max(row, default=0) < dim):
                raise LieAlgebraError(f"bracket entry ({i}, {j}) out of range for dimension {dim}")
            if i == j:
                if any(row.values()):
                    raise LieAlgebraError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            target = table.setdefault((i, j), {})
            for k, c in row.items():
                v = target.get(k, 0) + sign * Fraction(c)
                if v:
                    target[k] = v
                else:
                    target.pop(k, None)
        self._c = {k: v for k, v in table.items() if v}
        if check:
            bad = self.jacobi_violations()
            if bad:
                i, j, k = bad[0]
                raise LieAlgebraError(
                    f"structure constants violate the Jacobi identity on "
                    f"(e{i + 1}, e{j + 1}, e{k + 1})", bad[0])

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Sequence], check: bool = True) -> "LieAlgebra":
        """From ``[i, j, k, c]`` entries with 1-based indices: ``[e_i, e_j]`` contains ``c e_k``."""
        table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for i, j, k, c in entries:
            row = table.setdefault((i - 1, j - 1), {})
            row[k - 1] = row.get(k - 1, 0) + Fraction(c)
        return cls(dim, table, check=check)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, {})

    @classmethod
    def so3(cls) -> "LieAlgebra":
        return cls.from_entries(3, [(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)])

    @classmethod
    def heisenberg(cls) -> "LieAlgebra":
        return cls.from_entries(3, [(1, 2, 3, 1)])

    def c(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self._c.get((i, j), {}).get(k, Fraction(0))
        return -self._c.get((j, i), {}).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> Dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return dict(self._c.get((i, j), {}))
        return {k: -v for k, v in self._c.get((j, i), {}).items()}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for (i, j), row in self._c.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in row.items():
                    out[k] += coeff * c
        return tuple(out)

    def entries(self) -> List[Tuple[int, int, int, Fraction]]:
        """1-based ``[i, j, k, c]`` entries, ``i < j``."""
        return [(i + 1, j + 1, k + 1, c) for (i, j), row in sorted(self._c.items())
                for k, c in sorted(row.items())]

    def is_abelian(self) -> bool:
        return not self._c

    def jacobi_violations(self) -> List[Tuple[int, int, int]]:
        """Basis triples ``i < j < k`` on which the Jacobi identity fails."""
        bad = []
        for i, j, k in combinations(range(self.dim), 3):
            total = [Fraction(0)] * self.dim
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for l, x in self.bracket_basis(a, b).items():
                    for m, y in self.bracket_basis(l, c).items():
                        total[m] += x * y
            if any(total):
                bad.append((i, j, k))
        return bad

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._c == other._c

    def __hash__(self):
        return hash((self.dim, frozenset((k, frozenset(v.items())) for k, v in self._c.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, entries={self.entries()})"


def wedge_indices(I: Index, J: Index) -> Tuple[int, Index]:
    return sort_sign(I + J)


class GValued:
    """An element of ``Lambda^p g* (x) (degree-k multivectors on R^n)``.

    ``values`` maps increasing ``p``-tuples of basis indices to the value on those
    basis vectors; missing tuples are zero.
    """

    __slots__ = ("g", "n", "p", "k", "order", "values")

    def __init__(self, g: LieAlgebra, n: int, p: int, k: int,
                 values: Optional[Mapping[Index, Multivector]] = None, order: Optional[int] = None):
        self.g, self.n, self.p, self.k, self.order = g, n, p, k, order
        vals: Dict[Index, Multivector] = {}
        for I, v in (values or {}).items():
            if len(I) != p or list(I) != sorted(set(I)) or any(not 0 <= i < g.dim for i in I):
                raise DimensionError(f"form index {I} is not an increasing {p}-tuple")
            if v.dim != n or (v and v.degree != k):
                raise DimensionError(f"value at {I} is not a degree-{k} multivector on R^{n}")
            if v.order != order:
                raise DimensionError("value has the wrong truncation order")
            if v:
                vals[I] = v
        self.values = vals

    @classmethod
    def zero(cls, g: LieAlgebra, n: int, p: int, k: int, order: Optional[int] = None) -> "GValued":
        return cls(g, n, p, k, {}, order)

    @classmethod
    def from_polys(cls, g: LieAlgebra, n: int, p: int, values: Mapping[Index, Poly],
                   order: Optional[int] = None) -> "GValued":
        return cls(g, n, p, 0, {I: Multivector.function(f) for I, f in values.items()}, order)

    def __call__(self, *basis: int) -> Multivector:
        """Value on basis vectors ``e_{i_1}, ..., e_{i_p}`` (any order)."""
        sign, I = sort_sign(basis)
        v = self.values.get(I) if sign else None
        if v is None:
            return Multivector.zero(self.n, self.k, self.order)
        return v if sign > 0 else -v

    def poly(self, *basis: int) -> Poly:
        if self.k != 0:
            raise DimensionError("values are not functions")
        return self(*basis).as_poly()

    def evaluate(self, vectors: Sequence[Sequence[Fraction]]) -> Multivector:
        """Value on arbitrary vectors (multilinear, determinant convention)."""
        out = Multivector.zero(self.n, self.k, self.order)
        for I, v in self.values.items():
            det = _det([[vec[i] for i in I] for vec in vectors])
            if det:
                out = out + v.scale(det)
        return out

    def items(self) -> Iterator[Tuple[Index, Multivector]]:
        for I in sorted(self.values):
            yield I, self.values[I]

    def is_zero(self) -> bool:
        return not self.values

    def _like(self, values) -> "GValued":
        return GValued(self.g, self.n, self.p, self.k, values, self.order)

    def __add__(self, other: "GValued") -> "GValued":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if (self.g, self.n, self.p, self.k) != (other.g, other.n, other.p, other.k):
            raise DimensionError("cannot add elements of different bidegree")
        out = dict(self.values)
        for I, v in other.values.items():
            out[I] = out[I] + v if I in out else v
        return self._like(out)

    def __neg__(self) -> "GValued":
        return self._like({I: -v for I, v in self.values.items()})

    def __sub__(self, other: "GValued") -> "GValued":
        return self + (-other)

    def scale(self, c) -> "GValued":
        return self._like({I: v.scale(c) for I, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GValued):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.p, self.k, self.n) == (other.p, other.k, other.n) and self.values == other.values

    def __repr__(self) -> str:
        body = ", ".join(f"{I}: {v.to_str()}" for I, v in self.items())
        return f"GValued(p={self.p}, k={self.k}, {{{body}}})"


def _det(m: List[List[Fraction]]) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Fraction(0)
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(minor)
    return total


def graded_bracket(a: GValued, b: GValued) -> GValued:
    """Bracket on ``Lambda g* (x) L_M``: ``[x (x) P, y (x) Q] = (-1)^{|P| |y|} x^y (x) [P, Q]``.

    ``|P| = deg P - 1`` is the shifted degree and ``|y|`` the form degree.
    """
    if a.g != b.g or a.n != b.n or a.order != b.order:
        raise DimensionError("operands live over different algebras, manifolds or orders")
    p, q = a.p, b.p
    k = a.k + b.k - 1
    if p + q > a.g.dim:
        return GValued.zero(a.g, a.n, p + q, max(k, -1), a.order)
    koszul = -1 if ((a.k - 1) * q) % 2 else 1
    out: Dict[Index, Multivector] = {}
    for I, P in a.values.items():
        for J, Q in b.values.items():
            sign, K = wedge_indices(I, J)
            if not sign:
                continue
            br = schouten(P, Q)
            if not br:
                continue
            if sign * koszul < 0:
                br = -br
            out[K] = out[K] + br if K in out else br
    return GValued(a.g, a.n, p + q, max(k, -1), out, a.order)


def ce_differential(alpha: GValued) -> GValued:
    """Chevalley-Eilenberg differential with trivial coefficients."""
    g = alpha.g
    p = alpha.p
    if p + 1 > g.dim:
        return GValued.zero(g, alpha.n, p + 1, alpha.k, alpha.order)
    out: Dict[Index, Multivector] = {}
    zero = Multivector.zero(alpha.n, alpha.k, alpha.order)
    for T in combinations(range(g.dim), p + 1):
        total = zero
        for a, b in combinations(range(p + 1), 2):
            rest = T[:a] + T[a + 1:b] + T[b + 1:]
            for l, c in g.bracket_basis(T[a], T[b]).items():
                v = alpha(l, *rest)
                if v:
                    term = v.scale(c)
                    total = total + (term if (a + b) % 2 == 0 else -term)
        if total:
            out[T] = total
    return GValued(g, alpha.n, p + 1, alpha.k, out, alpha.order)


def kk_bivector(g: LieAlgebra, order: Optional[int] = None) -> Multivector:
    """Kirillov-Kostant bivector on g* with ``{y_i, y_j} = sum_k c^k_ij y_k``."""
    m = g.dim
    comps = {}
    for i, j in combinations(range(m), 2):
        f = Poly.zero(m, order)
        for k, c in g.bracket_basis(i, j).items():
            f = f + Poly.var(m, k, order).scale(c)
        if f:
            comps[(i, j)] = f
    return Multivector(m, 2, comps, order)


@dataclass(frozen=True)
class TwoCocycle:
    """Antisymmetric bilinear form on g; a cocycle when the cyclic identity holds."""

    g: LieAlgebra
    omega: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_entries(cls, g: LieAlgebra, entries: Iterable[Sequence]) -> "TwoCocycle":
        """From 1-based ``[i, j, c]`` entries meaning ``omega(e_i, e_j) = c``."""
        m = [[Fraction(0)] * g.dim for _ in range(g.dim)]
        for i, j, c in entries:
            i, j, c = i - 1, j - 1, Fraction(c)
            if i == j:
                if c:
                    raise ValueError("omega must be antisymmetric")
                continue
            if m[i][j] and m[i][j] != c:
                raise ValueError(f"conflicting entries for omega(e{i + 1}, e{j + 1})")
            m[i][j], m[j][i] = c, -c
        return cls(g, tuple(tuple(r) for r in m))

    def __post_init__(self):
        n = self.g.dim
        if len(self.omega) != n or any(len(r) != n for r in self.omega):
            raise DimensionError("omega must be a dim x dim matrix")
        for i in range(n):
            for j in range(n):
                if self.omega[i][j] != -self.omega[j][i]:
                    raise ValueError("omega must be antisymmetric")

    def value(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        n = self.g.dim
        return sum((u[i] * self.omega[i][j] * v[j] for i in range(n) for j in range(n)
                    if self.omega[i][j]), Fraction(0))

    def violations(self) -> List[Tuple[Tuple[int, int, int], Fraction]]:
        """Triples where ``omega([u,v],w) + omega([v,w],u) + omega([w,u],v)`` is nonzero."""
        g = self.g
        basis = [tuple(Fraction(int(i == j)) for j in range(g.dim)) for i in range(g.dim)]
        bad = []
        for i, j, k in combinations(range(g.dim), 3):
            u, v, w = basis[i], basis[j], basis[k]
            s = (self.value(g.bracket(u, v), w) + self.value(g.bracket(v, w), u)
                 + self.value(g.bracket(w, u), v))
            if s:
                bad.append(((i, j, k), s))
        return bad

    def is_cocycle(self) -> bool:
        return not self.violations()

    def bivector(self, order: Optional[int] = None) -> Multivector:
        m = self.g.dim
        comps = {(i, j): Poly.const(m, self.omega[i][j], order)
                 for i, j in combinations(range(m), 2) if self.omega[i][j]}
        return Multivector(m, 2, comps, order)


def affine_bivector(g: LieAlgebra, omega: TwoCocycle,
                    order: Optional[int] = None) -> Tuple[Multivector, bool]:
    """KK bivector shifted by the constant bivector of ``omega``, with a Poisson flag."""
    pi = kk_bivector(g, order) + omega.bivector(order)
    return pi, schouten(pi, pi).is_zero()
