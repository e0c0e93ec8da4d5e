"""Exact linear solves over the rationals (thin wrapper around sympy)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy


def _to_sympy(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
          ) -> Tuple[Optional[List[Fraction]], int]:
    """Solve ``rows * x = rhs``.

    Returns ``(x, nfree)``: ``x`` is ``None`` when the system is inconsistent, otherwise the
    solution with every free parameter set to zero; ``nfree`` is the nullity.
    """
    ncols = len(rows[0]) if rows else 0
    if not rows:
        return [Fraction(0)] * ncols, ncols
    aug = sympy.Matrix([[_to_sympy(Fraction(c)) for c in r] + [_to_sympy(Fraction(b))]
                        for r, b in zip(rows, rhs)])
    red, pivots = aug.rref()
    if ncols in pivots:
        return None, ncols - len(pivots) + 1
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = _to_fraction(red[r, ncols])
    return x, ncols - len(pivots)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[_to_sympy(Fraction(c)) for c in r] for r in rows]).rank()


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return _to_fraction(sympy.Matrix([[_to_sympy(Fraction(c)) for c in r] for r in rows]).det())
