"""Exact multivariate polynomials over the rationals with an optional formal parameter.

A :class:`Poly` lives in ``Q[x_0, ..., x_{n-1}][h]``, optionally truncated modulo
``h^N``.  Monomials are packed into a single Python integer (16 bits per exponent,
the ``h`` exponent in the lowest field) so that multiplying two monomials is one
integer addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

Rat = Fraction
Scalar = Union[int, Fraction]

_BITS = 16
_FIELD = (1 << _BITS) - 1
_MAX_EXP = 1 << (_BITS - 1)

_guard_cache: Dict[int, int] = {}


def _guard(nvars: int) -> int:
    g = _guard_cache.get(nvars)
    if g is None:
        g = 0
        for k in range(nvars + 1):
            g |= 1 << (_BITS * k + _BITS - 1)
        _guard_cache[nvars] = g
    return g


def pack(hexp: int, exps: Sequence[int]) -> int:
    if hexp < 0 or hexp >= _MAX_EXP:
        raise OverflowError(f"h exponent {hexp} out of range")
    key = hexp
    shift = _BITS
    for e in exps:
        if e < 0 or e >= _MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        key |= e << shift
        shift += _BITS
    return key


def unpack(key: int, nvars: int) -> Tuple[int, Tuple[int, ...]]:
    hexp = key & _FIELD
    exps = tuple((key >> (_BITS * (i + 1))) & _FIELD for i in range(nvars))
    return hexp, exps


class DimensionError(ValueError):
    """Operands live on different coordinate spaces or truncation orders."""


class Poly:
    """Immutable polynomial with exact rational coefficients.

    ``order`` is the truncation order ``N`` in ``h`` (terms with ``h^k``, ``k >= N``,
    are dropped) or ``None`` for untruncated arithmetic.
    """

    __slots__ = ("nvars", "order", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Dict[int, Fraction]] = None,
                 order: Optional[int] = None):
        self.nvars = nvars
        self.order = order
        self._terms: Dict[int, Fraction] = terms if terms is not None else {}
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, order: Optional[int] = None) -> "Poly":
        return cls(nvars, {}, order)

    @classmethod
    def const(cls, nvars: int, c: Scalar, order: Optional[int] = None) -> "Poly":
        c = Fraction(c)
        return cls(nvars, {0: c} if c else {}, order)

    @classmethod
    def var(cls, nvars: int, i: int, order: Optional[int] = None) -> "Poly":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        return cls(nvars, {1 << (_BITS * (i + 1)): Fraction(1)}, order)

    @classmethod
    def hbar(cls, nvars: int, order: Optional[int] = None) -> "Poly":
        if order is not None and order <= 1:
            return cls(nvars, {}, order)
        return cls(nvars, {1: Fraction(1)}, order)

    @classmethod
    def from_terms(cls, nvars: int, terms: Dict[Tuple[int, Tuple[int, ...]], Scalar],
                   order: Optional[int] = None) -> "Poly":
        out: Dict[int, Fraction] = {}
        for (hexp, exps), c in terms.items():
            if len(exps) != nvars:
                raise DimensionError(f"exponent vector {exps} has wrong length for {nvars} variables")
            if order is not None and hexp >= order:
                continue
            k = pack(hexp, exps)
            v = out.get(k, 0) + Fraction(c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return cls(nvars, out, order)

    # -- inspection ---------------------------------------------------------

    def terms(self) -> Iterator[Tuple[int, Tuple[int, ...], Fraction]]:
        """Yield ``(h_exponent, exponent_vector, coefficient)`` in canonical order."""
        for key in self._sorted_keys():
            hexp, exps = unpack(key, self.nvars)
            yield hexp, exps, self._terms[key]

    def _sorted_keys(self):
        n = self.nvars

        def sort_key(k):
            hexp, exps = unpack(k, n)
            return (-(sum(exps) + hexp), tuple(-e for e in exps), hexp)

        return sorted(self._terms, key=sort_key)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the monomial 1 (no variables, no ``h``)."""
        return self._terms.get(0, Fraction(0))

    def degree(self) -> int:
        """Total degree in the coordinates (``h`` not counted); -1 for zero."""
        return max((sum(unpack(k, self.nvars)[1]) for k in self._terms), default=-1)

    def min_hbar_degree(self) -> Optional[int]:
        return min((k & _FIELD for k in self._terms), default=None)

    def max_hbar_degree(self) -> Optional[int]:
        return max((k & _FIELD for k in self._terms), default=None)

    def hbar_coefficient(self, j: int) -> "Poly":
        """The coefficient of ``h^j``, as an ``h``-free polynomial with the same order."""
        return Poly(self.nvars, {k - j: c for k, c in self._terms.items() if k & _FIELD == j},
                    self.order)

    def depends_on(self, i: int) -> bool:
        shift = _BITS * (i + 1)
        return any((k >> shift) & _FIELD for k in self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.order != other.order:
            raise DimensionError(f"truncation order mismatch: {self.order} vs {other.order}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other, self.order)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v += c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly(self.nvars, out, self.order)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {k: -c for k, c in self._terms.items()}, self.order)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly(self.nvars, {}, self.order)
        if c == 1:
            return self
        return Poly(self.nvars, {k: v * c for k, v in self._terms.items()}, self.order)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly(self.nvars, {}, self.order)
        if len(a) < len(b):
            a, b = b, a
        guard = _guard(self.nvars)
        order = self.order
        out: Dict[int, Fraction] = {}
        get = out.get
        for kb, cb in b.items():
            if order is not None and (kb & _FIELD) >= order:
                continue
            for ka, ca in a.items():
                k = ka + kb
                if k & guard:
                    raise OverflowError("exponent overflow in polynomial product")
                if order is not None and (k & _FIELD) >= order:
                    continue
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return Poly(self.nvars, {k: v for k, v in out.items() if v}, order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def diff(self, i: int) -> "Poly":
        """Partial derivative with respect to coordinate ``i``."""
        if not 0 <= i < self.nvars:
            raise DimensionError(f"variable index {i} out of range for {self.nvars} variables")
        shift = _BITS * (i + 1)
        unit = 1 << shift
        out = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _FIELD
            if e:
                out[k - unit] = c * e
        return Poly(self.nvars, out, self.order)

    def mul_hbar(self, j: int = 1) -> "Poly":
        order = self.order
        out = {}
        for k, c in self._terms.items():
            if order is None or (k & _FIELD) + j < order:
                out[k + j] = c
        return Poly(self.nvars, out, order)

    def div_hbar(self, j: int = 1) -> "Poly":
        """Exact division by ``h^j``; raises if some term has a lower ``h`` power."""
        out = {}
        for k, c in self._terms.items():
            if (k & _FIELD) < j:
                raise ValueError(f"polynomial is not divisible by h^{j}")
            out[k - j] = c
        return Poly(self.nvars, out, self.order)

    def truncate(self, order: Optional[int]) -> "Poly":
        """Re-express with truncation order ``order`` (dropping terms with ``h^k``, ``k >= order``)."""
        if order is None:
            return Poly(self.nvars, dict(self._terms), None)
        return Poly(self.nvars, {k: c for k, c in self._terms.items() if (k & _FIELD) < order},
                    order)

    def extend(self, nvars: int, offset: int = 0) -> "Poly":
        """Embed into ``nvars`` coordinates, placing variable ``i`` at ``offset + i``."""
        if offset + self.nvars > nvars:
            raise DimensionError("embedding does not fit")
        out = {}
        for k, c in self._terms.items():
            hexp, exps = unpack(k, self.nvars)
            full = [0] * nvars
            full[offset:offset + self.nvars] = exps
            out[pack(hexp, full)] = c
        return Poly(nvars, out, self.order)

    def restrict(self, nvars: int, offset: int = 0) -> "Poly":
        """Inverse of :meth:`extend`; raises if other variables occur."""
        out = {}
        for k, c in self._terms.items():
            hexp, exps = unpack(k, self.nvars)
            if any(e for j, e in enumerate(exps) if not offset <= j < offset + nvars):
                raise DimensionError("polynomial depends on variables outside the restriction")
            out[pack(hexp, exps[offset:offset + nvars])] = c
        return Poly(nvars, out, self.order)

    def substitute(self, values: Sequence["Poly"]) -> "Poly":
        """Compose: replace coordinate ``i`` by ``values[i]`` (all in a common target ring)."""
        if len(values) != self.nvars:
            raise DimensionError("substitution needs one value per variable")
        if not values:
            raise DimensionError("substitution into a polynomial on a point needs a target ring")
        tgt = values[0]
        result = Poly.zero(tgt.nvars, tgt.order)
        powers: Dict[Tuple[int, int], Poly] = {}
        for hexp, exps, c in self.terms():
            term = Poly.const(tgt.nvars, c, tgt.order).mul_hbar(hexp)
            for i, e in enumerate(exps):
                if e:
                    p = powers.get((i, e))
                    if p is None:
                        p = powers[(i, e)] = values[i] ** e
                    term = term * p
            result = result + term
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other, self.order)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for hexp, exps, c in self.terms():
            factors = []
            if hexp:
                factors.append("h" if hexp == 1 else f"h^{hexp}")
            for name, e in zip(names, exps):
                if e:
                    factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if factors and mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r}, nvars={self.nvars}, order={self.order})"


def coordinates(nvars: int, order: Optional[int] = None) -> Tuple[Poly, ...]:
    return tuple(Poly.var(nvars, i, order) for i in range(nvars))


def monomials(nvars: int, max_degree: int, min_degree: int = 0,
              order: Optional[int] = None) -> Iterable[Poly]:
    """All monomials in ``nvars`` coordinates with total degree in ``[min_degree, max_degree]``."""

    def rec(i, remaining):
        if i == nvars - 1:
            yield (remaining,)
            return
        for e in range(remaining, -1, -1):
            for rest in rec(i + 1, remaining - e):
                yield (e,) + rest

    for d in range(min_degree, max_degree + 1):
        if nvars == 0:
            if d == 0:
                yield Poly.const(0, 1, order)
            continue
        for exps in rec(0, d):
            yield Poly.from_terms(nvars, {(0, exps): 1}, order)
