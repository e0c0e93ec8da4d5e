"""Up-to-homotopy actions of finite groups on finite-dimensional algebras.

A G-graded algebra ``A = sum_g A_g`` with an invertible element ``<g>`` chosen in each
component yields automorphisms ``rho(g) a = <g> a <g>^-1`` of ``A_e`` and twisting elements
``c(g, h) = <g><h><gh>^-1`` in ``A_e``.  They satisfy

* twisting: ``rho(g) rho(h) a = c(g, h) (rho(gh) a) c(g, h)^-1``
* cocycle:  ``c(g1, g2) c(g1 g2, g3) = (rho(g1) c(g2, g3)) c(g1, g2 g3)``

Scalars are exact rationals; elements are dense tuples over a flat basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .linalg import det, solve
from .report import Report

Vec = Tuple[Fraction, ...]
Table = Dict[Tuple[int, int], Dict[int, Fraction]]


class GroupError(ValueError):
    pass


class GradingError(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class NotAnAction(ValueError):
    pass


class CocycleError(ValueError):
    def __init__(self, triple: Tuple[int, int, int], message: str):
        super().__init__(message)
        self.triple = triple


# -- groups -------------------------------------------------------------------

class FiniteGroup:
    """A finite group given by its multiplication table (``table[g][h] = gh``)."""

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise GroupError("multiplication table must be square and nonempty")
        if any(not 0 <= x < n for r in table for x in r):
            raise GroupError("table entry out of range")
        self.table = tuple(tuple(r) for r in table)
        self.order = n
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(n))
        if len(self.names) != n:
            raise GroupError("one name per element is required")
        ids = [e for e in range(n) if all(self.table[e][g] == g == self.table[g][e] for g in range(n))]
        if not ids:
            raise GroupError("no identity element")
        self.identity = ids[0]
        inv = []
        for g in range(n):
            cands = [h for h in range(n) if self.table[g][h] == self.identity == self.table[h][g]]
            if not cands:
                raise GroupError(f"{self.names[g]} has no inverse")
            inv.append(cands[0])
        self.inverse = tuple(inv)
        for a, b, c in product(range(n), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise GroupError(f"not associative at ({self.names[a]}, {self.names[b]}, {self.names[c]})")

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def elements(self) -> range:
        return range(self.order)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([[(i + j) % n for j in range(n)] for i in range(n)],
                   ["e"] + [f"s{i}" if n > 2 else "s" for i in range(1, n)])

    @classmethod
    def klein(cls) -> "FiniteGroup":
        # e=0, a=1, b=2, c=3 with ab = c
        return cls([[i ^ j for j in range(4)] for i in range(4)], ["e", "a", "b", "c"])

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls([[0]], ["e"])

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)


# -- algebras -----------------------------------------------------------------

def _vec(n: int, entries: Mapping[int, Fraction]) -> Vec:
    v = [Fraction(0)] * n
    for i, c in entries.items():
        v[i] += Fraction(c)
    return tuple(v)


def _fmt(x: Fraction) -> str:
    return str(x)


class Algebra:
    """A finite-dimensional associative algebra by structure constants ``e_i e_j = sum_k t^k_ij e_k``."""

    def __init__(self, labels: Sequence[str], table: Mapping[Tuple[int, int], Mapping[int, Fraction]],
                 unit: Sequence[Fraction]):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        t: Table = {}
        for (i, j), out in table.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise GradingError(f"product index ({i}, {j}) out of range")
            row = {}
            for k, c in out.items():
                if not 0 <= k < self.dim:
                    raise GradingError(f"product of ({i}, {j}) names basis index {k} out of range")
                if Fraction(c):
                    row[k] = row.get(k, Fraction(0)) + Fraction(c)
            row = {k: c for k, c in row.items() if c}
            if row:
                t[(i, j)] = row
        self.table = t
        if len(unit) != self.dim:
            raise GradingError("unit has the wrong length")
        self.unit: Vec = tuple(Fraction(c) for c in unit)

    def zero(self) -> Vec:
        return (Fraction(0),) * self.dim

    def basis(self, i: int) -> Vec:
        return _vec(self.dim, {i: 1})

    def mul(self, x: Vec, y: Vec) -> Vec:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                row = self.table.get((i, j))
                if row:
                    ab = a * b
                    for k, c in row.items():
                        out[k] += ab * c
        return tuple(out)

    def render(self, x: Vec) -> str:
        parts = []
        for i, c in enumerate(x):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            label = self.labels[i]
            if label == "1":
                term = str(mag)
            else:
                term = label if mag == 1 else f"{mag} {label}"
            parts.append((sign, term))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])

    def associativity_violations(self) -> List[Tuple[Tuple[int, int, int], Vec]]:
        # works on the sparse table: (e_i e_j) e_k - e_i (e_j e_k); integral tables run on ints
        t = self.table
        if all(c.denominator == 1 for row in t.values() for c in row.values()):
            t = {key: {k: c.numerator for k, c in row.items()} for key, row in t.items()}
        bad = []
        for i, j, k in product(range(self.dim), repeat=3):
            r: Dict[int, Fraction] = {}
            for l, a in t.get((i, j), {}).items():
                for m, b in t.get((l, k), {}).items():
                    r[m] = r.get(m, 0) + a * b
            for l, a in t.get((j, k), {}).items():
                for m, b in t.get((i, l), {}).items():
                    r[m] = r.get(m, 0) - a * b
            if any(r.values()):
                bad.append(((i, j, k), _vec(self.dim, r)))
        return bad

    def unit_violations(self) -> List[Tuple[int, str]]:
        bad = []
        for i in range(self.dim):
            e = self.basis(i)
            if self.mul(self.unit, e) != e:
                bad.append((i, "left"))
            if self.mul(e, self.unit) != e:
                bad.append((i, "right"))
        return bad

    def inverse_in(self, x: Vec, support: Sequence[int]) -> Vec:
        """Two-sided inverse of ``x`` with support in the given basis indices, certified."""
        support = list(support)
        rows = [[self.mul(x, self.basis(j))[k] for j in support] for k in range(self.dim)]
        sol, _ = solve(rows, list(self.unit))
        if sol is None:
            raise NotInvertible(f"{self.render(x)} has no right inverse")
        y = _vec(self.dim, dict(zip(support, sol)))
        if self.mul(x, y) != self.unit or self.mul(y, x) != self.unit:
            raise NotInvertible(f"{self.render(x)} has no two-sided inverse")
        return y


def _sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def _scale(c: Fraction, x: Vec) -> Vec:
    return tuple(c * a for a in x)


class GradedAlgebra:
    """A G-graded algebra: ``basis[g]`` labels the component ``A_g``.

    ``products`` maps ``(g, i, h, j)`` to ``{k: coeff}`` with ``k`` indexing the basis of
    ``A_{gh}``, so the grading holds by construction.  ``unit`` is a vector in ``A_e``.
    """

    def __init__(self, group: FiniteGroup, basis: Sequence[Sequence[str]],
                 products: Mapping[Tuple[int, int, int, int], Mapping[int, Fraction]],
                 unit: Sequence[Fraction]):
        G = group
        if len(basis) != G.order:
            raise GradingError("one basis list per group element is required")
        self.group = G
        self.basis_labels = tuple(tuple(b) for b in basis)
        self.offsets = []
        off = 0
        for b in self.basis_labels:
            self.offsets.append(off)
            off += len(b)
        self.products = {}
        flat: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (g, i, h, j), out in products.items():
            if not (0 <= g < G.order and 0 <= h < G.order):
                raise GradingError(f"product ({g}, {i}, {h}, {j}) names an unknown group element")
            if not (0 <= i < len(basis[g]) and 0 <= j < len(basis[h])):
                raise GradingError(f"product ({g}, {i}, {h}, {j}) names an unknown basis element")
            gh = G.mul(g, h)
            for k in out:
                if not 0 <= k < len(basis[gh]):
                    raise GradingError(f"product ({g}, {i}, {h}, {j}) leaves A_{G.names[gh]}")
            self.products[(g, i, h, j)] = {k: Fraction(c) for k, c in out.items()}
            flat[(self.offsets[g] + i, self.offsets[h] + j)] = {
                self.offsets[gh] + k: Fraction(c) for k, c in out.items()}
        e = G.identity
        if len(unit) != len(basis[e]):
            raise GradingError("the unit must be an element of A_e")
        full_unit = _vec(off, {self.offsets[e] + k: c for k, c in enumerate(unit)})
        labels = [f"{lab}" for b in self.basis_labels for lab in b]
        self.algebra = Algebra(labels, flat, full_unit)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def block(self, g: int) -> range:
        return range(self.offsets[g], self.offsets[g] + len(self.basis_labels[g]))

    def element(self, g: int, coeffs: Sequence[Fraction]) -> Vec:
        """Embed a coordinate vector of ``A_g`` into ``A``."""
        if len(coeffs) != len(self.basis_labels[g]):
            raise GradingError(f"element of A_{self.group.names[g]} has the wrong length")
        return _vec(self.dim, {self.offsets[g] + k: c for k, c in enumerate(coeffs)})

    def component(self, x: Vec, g: int) -> Tuple[Fraction, ...]:
        return tuple(x[i] for i in self.block(g))

    def degree_of(self, x: Vec) -> Optional[int]:
        """The unique ``g`` with ``x`` in ``A_g`` (``None`` for zero or inhomogeneous)."""
        gs = {g for g in self.group.elements() if any(x[i] for i in self.block(g))}
        return gs.pop() if len(gs) == 1 else None

    def identity_component(self) -> Algebra:
        e = self.group.identity
        blk = self.block(e)
        off = self.offsets[e]
        table = {}
        for (p, q), out in self.algebra.table.items():
            if p in blk and q in blk:
                table[(p - off, q - off)] = {k - off: c for k, c in out.items()}
        return Algebra(self.basis_labels[e], table, self.component(self.algebra.unit, e))

    def render(self, x: Vec) -> str:
        return self.algebra.render(x)

    def label(self, p: int) -> str:
        for g in self.group.elements():
            if p in self.block(g):
                return f"{self.group.names[g]}:{self.algebra.labels[p]}"
        raise IndexError(p)


def validate(A: GradedAlgebra) -> Report:
    """Exhaustive associativity and unit checks; every violated basis triple is listed."""
    rep = Report("haa-validate")
    alg = A.algebra
    bad = alg.associativity_violations()
    rep.add("associativity", not bad,
            [f"({A.label(i)}, {A.label(j)}, {A.label(k)}): {alg.render(r)}" for (i, j, k), r in bad])
    ubad = alg.unit_violations()
    rep.add("unit", not ubad, [f"{side} unit fails on {A.label(i)}" for i, side in ubad])
    rep.data["dimensions"] = {A.group.names[g]: len(A.basis_labels[g]) for g in A.group.elements()}
    return rep


# -- unit choices and action data ---------------------------------------------

@dataclass(frozen=True)
class UnitChoice:
    """Chosen invertible ``<g>`` in every ``A_g`` with certified inverses in ``A_{g^-1}``."""

    algebra: GradedAlgebra
    units: Tuple[Vec, ...]
    inverses: Tuple[Vec, ...]

    @classmethod
    def choose(cls, A: GradedAlgebra, units: Mapping[int, Sequence[Fraction]]) -> "UnitChoice":
        """``units[g]`` is a coordinate vector in ``A_g``."""
        G = A.group
        us, invs = [], []
        for g in G.elements():
            if g not in units:
                raise NotInvertible(f"no unit chosen in A_{G.names[g]}")
            u = A.element(g, units[g])
            try:
                inv = A.algebra.inverse_in(u, A.block(G.inverse[g]))
            except NotInvertible as exc:
                raise NotInvertible(f"<{G.names[g]}>: {exc}") from None
            us.append(u)
            invs.append(inv)
        return cls(A, tuple(us), tuple(invs))

    @classmethod
    def first_basis(cls, A: GradedAlgebra) -> "UnitChoice":
        """Use the first basis vector of each component (the unit itself on ``A_e``)."""
        units = {}
        for g in A.group.elements():
            if g == A.group.identity:
                units[g] = A.component(A.algebra.unit, g)
            else:
                units[g] = _vec(len(A.basis_labels[g]), {0: 1})
        return cls.choose(A, units)


class ActionData:
    """``rho(g)`` as matrices on ``A_e`` (columns are images of basis vectors) and ``c(g, h)``."""

    def __init__(self, group: FiniteGroup, algebra: Algebra,
                 rho: Sequence[Sequence[Sequence[Fraction]]],
                 c: Mapping[Tuple[int, int], Sequence[Fraction]]):
        self.group = group
        self.algebra = algebra
        self.rho = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in rho)
        self.c = {k: tuple(Fraction(x) for x in v) for k, v in c.items()}
        everything = range(algebra.dim)
        self.c_inv = {}
        for k, v in self.c.items():
            try:
                self.c_inv[k] = algebra.inverse_in(v, everything)
            except NotInvertible:
                names = group.names
                raise NotInvertible(f"c({names[k[0]]}, {names[k[1]]}) is not invertible") from None

    def apply(self, g: int, a: Vec) -> Vec:
        m = self.rho[g]
        return tuple(sum((m[r][i] * a[i] for i in range(len(a)) if a[i]), Fraction(0))
                     for r in range(len(m)))

    def as_dict(self) -> Dict:
        G, alg = self.group, self.algebra
        return {
            "rho": {G.names[g]: [[str(x) for x in row] for row in self.rho[g]] for g in G.elements()},
            "c": {f"({G.names[g]},{G.names[h]})": alg.render(self.c[(g, h)])
                  for g in G.elements() for h in G.elements()},
        }


def derive_action(U: UnitChoice) -> Tuple[ActionData, Report]:
    A = U.algebra
    G = A.group
    alg = A.algebra
    Ae = A.identity_component()
    e = G.identity
    rep = Report("haa-derive")
    rho = []
    for g in G.elements():
        cols = []
        for i in range(Ae.dim):
            a = A.element(e, Ae.basis(i))
            img = alg.mul(alg.mul(U.units[g], a), U.inverses[g])
            cols.append(A.component(img, e))
        rho.append([[cols[i][r] for i in range(Ae.dim)] for r in range(Ae.dim)])
    c = {}
    for g, h in product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        val = alg.mul(alg.mul(U.units[g], U.units[h]), U.inverses[gh])
        c[(g, h)] = A.component(val, e)
    D = ActionData(G, Ae, rho, c)
    for g in G.elements():
        bad = []
        if det(D.rho[g]) == 0:
            bad.append("singular")
        if D.apply(g, Ae.unit) != Ae.unit:
            bad.append("does not fix the unit")
        for i, j in product(range(Ae.dim), repeat=2):
            a, b = Ae.basis(i), Ae.basis(j)
            if D.apply(g, Ae.mul(a, b)) != Ae.mul(D.apply(g, a), D.apply(g, b)):
                bad.append(f"not multiplicative on ({Ae.labels[i]}, {Ae.labels[j]})")
        rep.add(f"rho({G.names[g]})-automorphism", not bad, bad)
    rep.add("c-invertible", True, detail="certified two-sided inverses in A_e")
    rep.data.update(D.as_dict())
    return D, rep


def check_twisting(D: ActionData) -> Report:
    """Twisting identity on every ``(g, h, basis a)`` and cocycle identity on every triple."""
    G, Ae = D.group, D.algebra
    names = G.names
    rep = Report("haa-check")
    bad = []
    for g, h in product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        for i in range(Ae.dim):
            a = Ae.basis(i)
            lhs = D.apply(g, D.apply(h, a))
            rhs = Ae.mul(Ae.mul(D.c[(g, h)], D.apply(gh, a)), D.c_inv[(g, h)])
            if lhs != rhs:
                bad.append(f"({names[g]}, {names[h]}, {Ae.labels[i]}): {Ae.render(_sub(lhs, rhs))}")
    rep.add("twisting", not bad, bad, detail="rho(g)rho(h)a = c(g,h) rho(gh)a c(g,h)^-1")
    bad = []
    for g1, g2, g3 in product(G.elements(), repeat=3):
        lhs = Ae.mul(D.c[(g1, g2)], D.c[(G.mul(g1, g2), g3)])
        rhs = Ae.mul(D.apply(g1, D.c[(g2, g3)]), D.c[(g1, G.mul(g2, g3))])
        if lhs != rhs:
            bad.append(f"({names[g1]}, {names[g2]}, {names[g3]}): {Ae.render(_sub(lhs, rhs))}")
    rep.add("cocycle", not bad, bad, detail="c(g1,g2)c(g1g2,g3) = (rho(g1)c(g2,g3))c(g1,g2g3)")
    return rep


# -- constructions ------------------------------------------------------------

def _action_violations(G: FiniteGroup, Ae: Algebra, action: Sequence[Sequence[Sequence[Fraction]]]
                       ) -> List[str]:
    D = ActionData(G, Ae, action, {})
    bad = []
    n = Ae.dim
    ident = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    if [list(r) for r in D.rho[G.identity]] != ident:
        bad.append("the identity does not act trivially")
    for g in G.elements():
        if det(D.rho[g]) == 0:
            bad.append(f"{G.names[g]} acts by a singular map")
        for i, j in product(range(n), repeat=2):
            a, b = Ae.basis(i), Ae.basis(j)
            if D.apply(g, Ae.mul(a, b)) != Ae.mul(D.apply(g, a), D.apply(g, b)):
                bad.append(f"{G.names[g]} is not multiplicative on ({Ae.labels[i]}, {Ae.labels[j]})")
        if D.apply(g, Ae.unit) != Ae.unit:
            bad.append(f"{G.names[g]} does not fix the unit")
    for g, h in product(G.elements(), repeat=2):
        for i in range(n):
            a = Ae.basis(i)
            if D.apply(g, D.apply(h, a)) != D.apply(G.mul(g, h), a):
                bad.append(f"not a homomorphism at ({G.names[g]}, {G.names[h]})")
                break
    return bad


def crossed_product(G: FiniteGroup, Ae: Algebra,
                    action: Sequence[Sequence[Sequence[Fraction]]]) -> GradedAlgebra:
    """``(a (x) g)(b (x) h) = (a * g(b)) (x) gh``; ``action[g]`` is the matrix of ``g`` on ``A_e``."""
    bad = _action_violations(G, Ae, action)
    if bad:
        raise NotAnAction("; ".join(bad))
    D = ActionData(G, Ae, action, {})
    basis = [[f"{lab}@{G.names[g]}" if g != G.identity else lab for lab in Ae.labels]
             for g in G.elements()]
    products = {}
    for g, h in product(G.elements(), repeat=2):
        for i, j in product(range(Ae.dim), repeat=2):
            out = Ae.mul(Ae.basis(i), D.apply(g, Ae.basis(j)))
            row = {k: c for k, c in enumerate(out) if c}
            if row:
                products[(g, i, h, j)] = row
    return GradedAlgebra(G, basis, products, Ae.unit)


def crossed_units(A: GradedAlgebra) -> UnitChoice:
    """``<g> = 1 (x) g`` on a crossed product."""
    e = A.group.identity
    one = A.component(A.algebra.unit, e)
    return UnitChoice.choose(A, {g: one for g in A.group.elements()})


def cocycle_violations(G: FiniteGroup, c: Mapping[Tuple[int, int], Fraction]
                       ) -> List[Tuple[Tuple[int, int, int], Fraction]]:
    bad = []
    for g1, g2, g3 in product(G.elements(), repeat=3):
        r = c[(g1, g2)] * c[(G.mul(g1, g2), g3)] - c[(g2, g3)] * c[(g1, G.mul(g2, g3))]
        if r:
            bad.append(((g1, g2, g3), r))
    return bad


def central_extension(G: FiniteGroup, c: Mapping[Tuple[int, int], Fraction],
                      check: bool = True) -> GradedAlgebra:
    """One-dimensional components with ``<g><h> = c(g, h)<gh>`` and unit ``<e>/c(e, e)``.

    With ``check=False`` the table is built even when ``c`` is not a cocycle, so that
    :func:`validate` can be run on it.
    """
    c = {k: Fraction(v) for k, v in c.items()}
    for g, h in product(G.elements(), repeat=2):
        if not c.get((g, h)):
            raise CocycleError((g, h, G.identity),
                               f"c({G.names[g]}, {G.names[h]}) must be a nonzero rational")
    if check:
        bad = cocycle_violations(G, c)
        if bad:
            (g1, g2, g3), r = bad[0]
            raise CocycleError((g1, g2, g3), f"cocycle identity fails at "
                               f"({G.names[g1]}, {G.names[g2]}, {G.names[g3]}) by {r}")
    basis = [[f"<{G.names[g]}>"] for g in G.elements()]
    products = {(g, 0, h, 0): {0: c[(g, h)]} for g, h in product(G.elements(), repeat=2)}
    e = G.identity
    return GradedAlgebra(G, basis, products, [1 / c[(e, e)]])


def group_algebra(G: FiniteGroup) -> GradedAlgebra:
    return central_extension(G, {(g, h): Fraction(1) for g, h in product(G.elements(), repeat=2)})


def line_bundle_to_cocycle(U: UnitChoice) -> Dict[Tuple[int, int], Fraction]:
    """Read ``c`` off ``<g><h> = c(g, h)<gh>`` when every component is one-dimensional."""
    A = U.algebra
    G = A.group
    if any(len(b) != 1 for b in A.basis_labels):
        raise GradingError("every component must be one-dimensional")
    alg = A.algebra
    out = {}
    for g, h in product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        prod = alg.mul(U.units[g], U.units[h])
        out[(g, h)] = A.component(prod, gh)[0] / A.component(U.units[gh], gh)[0]
    return out


# -- stock examples -----------------------------------------------------------

def quaternions(tamper: bool = False) -> GradedAlgebra:
    """``H`` graded by the Klein group: ``A_e = Q 1``, ``A_a = Q i``, ``A_b = Q j``, ``A_c = Q k``.

    ``tamper`` flips the sign of ``ij`` only, which breaks associativity.
    """
    G = FiniteGroup.klein()
    # products of unit quaternions in order 1, i, j, k: sign of x*y
    sign = {
        (1, 1): -1, (2, 2): -1, (3, 3): -1,
        (1, 2): 1, (2, 1): -1, (2, 3): 1, (3, 2): -1, (3, 1): 1, (1, 3): -1,
    }
    if tamper:
        sign[(1, 2)] = -1
    products = {}
    for g, h in product(range(4), repeat=2):
        s = 1 if g == 0 or h == 0 else sign[(g, h)]
        products[(g, 0, h, 0)] = {0: Fraction(s)}
    return GradedAlgebra(G, [["1"], ["i"], ["j"], ["k"]], products, [1])


def dual_numbers() -> Algebra:
    """``Q[x]/(x^2)`` with basis ``1, x``."""
    return Algebra(["1", "x"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, [1, 0])


def rationals() -> Algebra:
    return Algebra(["1"], {(0, 0): {0: 1}}, [1])
