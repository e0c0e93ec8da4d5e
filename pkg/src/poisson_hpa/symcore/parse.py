"""Text syntax for polynomials: ``3/2 x^2 y - z + 1/12 h x``.

Terms are joined by ``+``/``-``; a term is an optional rational coefficient
followed by factors ``name`` or ``name^k`` (whitespace or ``*`` separated).
``h`` is reserved for the formal parameter.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Sequence

from .poly import Poly

HBAR = "h"

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[-+*^]))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position + 1} in {text!r}")
        self.message = message
        self.position = position
        self.text = text


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    return tokens


def parse_poly(text: str, names: Sequence[str], order: Optional[int] = None) -> Poly:
    """Parse ``text`` into a :class:`Poly` over the declared coordinate ``names``."""
    if HBAR in names:
        raise ValueError(f"{HBAR!r} is reserved for the formal parameter")
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial", 0, text)
    result = Poly.zero(n, order)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "op" and tokens[i][1] in "+-":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            kind, val, pos = tokens[i]
            raise PolySyntaxError(f"expected '+' or '-' before {val!r}", pos, text)
        first = False
        if i >= len(tokens):
            raise PolySyntaxError("dangling sign", len(text) - 1, text)
        coef = Fraction(1)
        hexp = 0
        exps: List[int] = [0] * n
        seen_any = False
        while i < len(tokens) and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            kind, val, pos = tokens[i]
            if kind == "op" and val == "*":
                if not seen_any:
                    raise PolySyntaxError("'*' without a left factor", pos, text)
                i += 1
                continue
            if kind == "num":
                if "/" in val and int(val.split("/")[1]) == 0:
                    raise PolySyntaxError("zero denominator", pos, text)
                coef *= Fraction(val)
                i += 1
            elif kind == "name":
                if val != HBAR and val not in index:
                    raise PolySyntaxError(f"undeclared variable {val!r}", pos, text)
                power = 1
                i += 1
                if i < len(tokens) and tokens[i][:2] == ("op", "^"):
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "num" or "/" in tokens[i][1]:
                        p = tokens[i][2] if i < len(tokens) else len(text)
                        raise PolySyntaxError("exponent must be a nonnegative integer", p, text)
                    power = int(tokens[i][1])
                    i += 1
                if val == HBAR:
                    hexp += power
                else:
                    exps[index[val]] += power
            else:
                raise PolySyntaxError(f"unexpected {val!r}", pos, text)
            seen_any = True
        if not seen_any:
            pos = tokens[i][2] if i < len(tokens) else len(text)
            raise PolySyntaxError("empty term", pos, text)
        result = result + Poly.from_terms(n, {(hexp, tuple(exps)): sign * coef}, order)
    return result
