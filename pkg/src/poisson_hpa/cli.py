"""Command line front end: ``poisson-hpa <subcommand> <document.json>``.

Exit status: 0 when every check passes, 1 when some check fails, 2 for malformed
input or an unknown subcommand.  Reports go to standard output, diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import jsonschema

from . import bundle, haa, hpa, lie, quantize
from .formats import SCHEMAS
from .report import Report
from .symcore import DimensionError, Multivector, Poly, PolySyntaxError, monomials, parse_poly, schouten


class InputError(Exception):
    """Malformed input; ``where`` is a ``line:col`` or a JSON path."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(message)
        self.message = message
        self.where = where


def _line_col(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


class Document:
    """A parsed and schema-checked JSON document that remembers its raw text."""

    def __init__(self, raw: str, kind: str, name: str = "<input>"):
        self.raw, self.kind, self.name = raw, kind, name
        self.digest = hashlib.sha256(raw.encode("utf-8")).hexdigest()
        try:
            self.data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}", f"{exc.lineno}:{exc.colno}") from None
        validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
        errors = sorted(validator.iter_errors(self.data), key=lambda e: list(map(str, e.absolute_path)))
        if errors:
            e = errors[0]
            raise InputError(f"does not match the {kind} format: {e.message}", _path(e.absolute_path))

    def locate(self, literal: str, position: int) -> str:
        """``line:col`` of character ``position`` of a string value in the raw text."""
        encoded = json.dumps(literal, ensure_ascii=False)
        start = self.raw.find(encoded)
        if start < 0:
            encoded = json.dumps(literal)
            start = self.raw.find(encoded)
        if start < 0:
            return ""
        inner = len(json.dumps(literal[:position], ensure_ascii=encoded.isascii())) - 1
        return "%d:%d" % _line_col(self.raw, start + inner)

    def poly(self, text: str, names: Sequence[str], order: Optional[int]) -> Poly:
        try:
            return parse_poly(text, names, order)
        except PolySyntaxError as exc:
            raise InputError(f"{exc.message} in polynomial {text!r}", self.locate(text, exc.position)) \
                from None


def _rat(x) -> Fraction:
    return Fraction(x.replace(" ", "")) if isinstance(x, str) else Fraction(x)


# -- builders -----------------------------------------------------------------

def build_lie(raw: Dict[str, Any], check: bool = True) -> lie.LieAlgebra:
    dim = raw["dim"]
    entries = []
    for n, (i, j, k, c) in enumerate(raw.get("brackets", [])):
        if max(i, j, k) > dim:
            raise InputError(f"basis index out of range 1..{dim}", _path(["lie", "brackets", n]))
        if i == j:
            raise InputError("[e_i, e_i] entries are not allowed", _path(["lie", "brackets", n]))
        entries.append((i, j, k, _rat(c)))
    try:
        return lie.LieAlgebra.from_entries(dim, entries, check=check)
    except lie.LieAlgebraError as exc:
        t = exc.triple
        where = _path(["lie", "brackets"])
        if t is not None:
            raise InputError(f"Jacobi identity fails on (e{t[0] + 1}, e{t[1] + 1}, e{t[2] + 1})", where) \
                from None
        raise InputError(str(exc), where) from None


def build_omega(g: lie.LieAlgebra, entries) -> lie.TwoCocycle:
    for n, (i, j, _) in enumerate(entries):
        if max(i, j) > g.dim:
            raise InputError(f"basis index out of range 1..{g.dim}", _path(["omega", n]))
    try:
        return lie.TwoCocycle.from_entries(g, [(i, j, _rat(c)) for i, j, c in entries])
    except ValueError as exc:
        raise InputError(str(exc), _path(["omega"])) from None


def _multivector(doc: Document, comps, degree: int, names, order, where) -> Multivector:
    n = len(names)
    out: Dict[Tuple[int, ...], Poly] = {}
    for idx, comp in enumerate(comps):
        I = tuple(i - 1 for i in comp["indices"])
        loc = where + [idx]
        if len(I) != degree:
            raise InputError(f"expected {degree} indices", _path(loc + ["indices"]))
        if any(i >= n for i in I):
            raise InputError(f"index out of range 1..{n}", _path(loc + ["indices"]))
        if len(set(I)) != len(I):
            raise InputError("repeated index in an antisymmetric component", _path(loc + ["indices"]))
        f = doc.poly(comp["poly"], names, order)
        if I in out:
            raise InputError("component given twice", _path(loc))
        out[I] = f
    try:
        return Multivector.from_components(n, degree, out, order)
    except (DimensionError, ValueError) as exc:
        raise InputError(str(exc), _path(where)) from None


def build_hpa(doc: Document) -> hpa.Hpa:
    d = doc.data
    g = build_lie(d["lie"])
    names = tuple(d["variables"])
    if "h" in names:
        raise InputError("'h' is reserved for the formal parameter", _path(["variables"]))
    order = d.get("order")
    n = len(names)
    s0 = _multivector(doc, d.get("sigma0", []), 2, names, order, ["sigma0"])
    s1 = {}
    for idx, item in enumerate(d.get("sigma1", [])):
        a = item["basis"] - 1
        if a >= g.dim:
            raise InputError(f"basis index out of range 1..{g.dim}", _path(["sigma1", idx, "basis"]))
        if a in s1:
            raise InputError("basis vector given twice", _path(["sigma1", idx]))
        s1[a] = _multivector(doc, item["components"], 1, names, order, ["sigma1", idx, "components"])
    s2 = {}
    for idx, item in enumerate(d.get("sigma2", [])):
        a, b = (i - 1 for i in item["pair"])
        if max(a, b) >= g.dim or a == b:
            raise InputError("pair must name two distinct basis vectors", _path(["sigma2", idx, "pair"]))
        if (a, b) in s2 or (b, a) in s2:
            raise InputError("pair given twice", _path(["sigma2", idx]))
        s2[(a, b)] = doc.poly(item["poly"], names, order)
    return hpa.Hpa.build(g, n, s0, s1, s2, names, order)


def build_tau(doc: Document, h: hpa.Hpa) -> lie.GValued:
    vals = {}
    for idx, item in enumerate(doc.data.get("tau", [])):
        a = item["basis"] - 1
        if a >= h.m:
            raise InputError(f"basis index out of range 1..{h.m}", _path(["tau", idx, "basis"]))
        vals[a] = doc.poly(item["poly"], h.variables, h.order)
    return hpa.make_tau(h, vals)


def build_group(raw: Dict[str, Any], where: str = "group") -> haa.FiniteGroup:
    names = raw["elements"]
    pos = {x: i for i, x in enumerate(names)}
    table = raw["table"]
    if len(table) != len(names) or any(len(r) != len(names) for r in table):
        raise InputError("table must be square with one row per element", _path([where, "table"]))
    rows = []
    for r, row in enumerate(table):
        out = []
        for c, x in enumerate(row):
            if x not in pos:
                raise InputError(f"unknown group element {x!r}", _path([where, "table", r, c]))
            out.append(pos[x])
        rows.append(out)
    try:
        return haa.FiniteGroup(rows, names)
    except haa.GroupError as exc:
        raise InputError(str(exc), _path([where])) from None


def _element(G: haa.FiniteGroup, name: str, where) -> int:
    if name not in G.names:
        raise InputError(f"unknown group element {name!r}", _path(where))
    return G.names.index(name)


def _terms(terms, size: int, where) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for n, (k, c) in enumerate(terms):
        if k > size:
            raise InputError(f"basis index out of range 1..{size}", _path(where + [n]))
        out[k - 1] = out.get(k - 1, Fraction(0)) + _rat(c)
    return out


def build_graded(doc: Document) -> haa.GradedAlgebra:
    d = doc.data
    G = build_group(d["group"])
    basis = []
    for g in G.names:
        if g not in d["basis"]:
            raise InputError(f"no basis given for A_{g}", _path(["basis"]))
        basis.append(d["basis"][g])
    extra = set(d["basis"]) - set(G.names)
    if extra:
        raise InputError(f"basis given for unknown elements {sorted(extra)}", _path(["basis"]))
    products = {}
    for n, item in enumerate(d["products"]):
        gname, i, hname, j = item["key"]
        g = _element(G, gname, ["products", n, "key", 0])
        h = _element(G, hname, ["products", n, "key", 2])
        if i > len(basis[g]) or j > len(basis[h]):
            raise InputError("basis index out of range", _path(["products", n, "key"]))
        key = (g, i - 1, h, j - 1)
        if key in products:
            raise InputError("product given twice", _path(["products", n]))
        products[key] = _terms(item["value"], len(basis[G.mul(g, h)]), ["products", n, "value"])
    unit = [_rat(c) for c in d["unit"]]
    try:
        return haa.GradedAlgebra(G, basis, products, unit)
    except haa.GradingError as exc:
        raise InputError(str(exc), _path([])) from None


def build_algebra(raw: Dict[str, Any], where: str) -> haa.Algebra:
    size = len(raw["basis"])
    table = {}
    for n, item in enumerate(raw["products"]):
        i, j = item["key"]
        if max(i, j) > size:
            raise InputError("basis index out of range", _path([where, "products", n, "key"]))
        table[(i - 1, j - 1)] = _terms(item["value"], size, [where, "products", n, "value"])
    try:
        return haa.Algebra(raw["basis"], table, [_rat(c) for c in raw["unit"]])
    except haa.GradingError as exc:
        raise InputError(str(exc), _path([where])) from None


def _matrix(rows, size: int, where) -> List[List[Fraction]]:
    if len(rows) != size or any(len(r) != size for r in rows):
        raise InputError(f"expected a {size}x{size} matrix", _path(where))
    return [[_rat(c) for c in r] for r in rows]


# -- rendering helpers ----------------------------------------------------------

def _mv_doc(P: Multivector, names) -> List[Dict[str, Any]]:
    return [{"indices": [i + 1 for i in I], "poly": f.to_str(names)} for I, f in P.items()]


def hpa_document(h: hpa.Hpa) -> Dict[str, Any]:
    names = h.variables
    doc: Dict[str, Any] = {
        "lie": {"dim": h.g.dim, "brackets": [[i, j, k, str(c)] for i, j, k, c in h.g.entries()]},
        "variables": list(names),
    }
    if h.order is not None:
        doc["order"] = h.order
    doc["sigma0"] = _mv_doc(h.sigma0, names)
    doc["sigma1"] = [{"basis": a + 1, "components": _mv_doc(h.V(a), names)}
                     for a in range(h.m) if h.V(a)]
    doc["sigma2"] = [{"pair": [a + 1, b + 1], "poly": h.s(a, b).to_str(names)}
                     for a, b in combinations(range(h.m), 2) if h.s(a, b)]
    return doc


def _mc_into(rep: Report, h: hpa.Hpa, prefix: str = "") -> bool:
    names = h.variables
    r = hpa.mc_check(h)
    for key, comp in r.components.items():
        rep.add(prefix + key, comp.passed,
                [f"{label}: {val.to_str(names)}" for label, val in comp.residuals])
    return r.passed


# -- subcommands ----------------------------------------------------------------

def cmd_validate_lie(doc: Document, args) -> Report:
    rep = Report("validate-lie")
    g = build_lie(doc.data["lie"], check=False)
    bad = g.jacobi_violations()
    rep.add("jacobi", not bad, [f"(e{i + 1}, e{j + 1}, e{k + 1})" for i, j, k in bad])
    rep.data["dim"] = g.dim
    rep.data["abelian"] = g.is_abelian()
    return rep


def cmd_kk(doc: Document, args) -> Report:
    g = build_lie(doc.data["lie"])
    names = [f"y{i + 1}" for i in range(g.dim)]
    pi = lie.kk_bivector(g)
    rep = Report("kk")
    r = schouten(pi, pi)
    rep.add("poisson", r.is_zero(), [r.to_str(names)] if r else [])
    rep.data["variables"] = names
    rep.data["bivector"] = pi.to_str(names)
    rep.data["components"] = _mv_doc(pi, names)
    return rep


def cmd_affine(doc: Document, args) -> Report:
    g = build_lie(doc.data["lie"])
    om = build_omega(g, doc.data.get("omega", []))
    names = [f"y{i + 1}" for i in range(g.dim)]
    pi, flag = lie.affine_bivector(g, om)
    rep = Report("affine")
    bad = om.violations()
    rep.add("cocycle", not bad, [f"(e{i + 1}, e{j + 1}, e{k + 1}): {v}" for (i, j, k), v in bad])
    r = schouten(pi, pi)
    rep.add("poisson", flag, [r.to_str(names)] if r else [])
    rep.data["flag_matches_cocycle"] = flag == (not bad)
    rep.data["bivector"] = pi.to_str(names)
    return rep


def cmd_mc_check(doc: Document, args) -> Report:
    h = build_hpa(doc)
    rep = Report("mc-check")
    ok = _mc_into(rep, h)
    full = hpa.mc_full_check(h)
    rep.data["full_equation"] = "pass" if full else "fail"
    rep.data["agreement"] = full == ok
    return rep


def cmd_gauge(doc: Document, args) -> Report:
    h = build_hpa(doc)
    tau = build_tau(doc, h)
    rep = Report("gauge")
    if not _mc_into(rep, h, "input:"):
        rep.add("precondition", False, detail="gauge transformations need a Maurer-Cartan input")
        return rep
    out = hpa.gauge(h, tau)
    _mc_into(rep, out, "output:")
    rep.add("sigma0-unchanged", out.sigma0 == h.sigma0)
    printed = hpa.printed_gauge(h, tau)
    same = printed.sigma1 == out.sigma1 and printed.sigma2 == out.sigma2
    rep.data["hpa"] = hpa_document(out)
    rep.notes.append("the explicit formula with +tau([u,v]) and {tau(u),tau(v)}/2 "
                     + ("agrees" if same else "disagrees") + " with the Maurer-Cartan preserving result")
    return rep


def _bundle_names(h: hpa.Hpa):
    return tuple(h.variables) + bundle.fiber_names(h.variables, h.m)


def cmd_bundle_assemble(doc: Document, args) -> Report:
    h = build_hpa(doc)
    B = bundle.assemble(h)
    rep = Report("bundle-assemble")
    back = bundle.disassemble(B)
    rep.add("round-trip", back.sigma0 == h.sigma0 and back.sigma1 == h.sigma1 and back.sigma2 == h.sigma2)
    rep.extend(bundle.fiber_invariance(B))
    rep.data["variables"] = list(B.variables)
    rep.data["bivector"] = B.pi.to_str(B.variables)
    rep.data["components"] = _mv_doc(B.pi, B.variables)
    return rep


def cmd_bundle_check(doc: Document, args) -> Report:
    h = build_hpa(doc)
    rep = bundle.bundle_jacobi_equivalence(h)
    return rep


def cmd_hamiltonianize(doc: Document, args) -> Report:
    h = build_hpa(doc)
    omega = build_omega(h.g, doc.data["omega"]) if "omega" in doc.data else None
    rep = Report("hamiltonianize")
    if not _mc_into(rep, h, "input:"):
        rep.add("precondition", False, detail="hamiltonianize needs a Maurer-Cartan input")
        return rep
    if not h.sigma2.is_zero():
        rep.add("precondition", False, detail="hamiltonianize needs sigma2 = 0")
        return rep
    if omega is not None and not omega.is_cocycle():
        rep.add("precondition", False, detail="omega is not a 2-cocycle")
        return rep
    B, _, inner = bundle.hamiltonianize(h, omega)
    rep.extend(inner)
    rep.data.update(inner.data)
    rep.data["variables"] = list(B.variables)
    return rep


def cmd_moment_check(doc: Document, args) -> Report:
    d = doc.data
    g = build_lie(d["lie"])
    names = tuple(d["variables"])
    order = d.get("order")
    pi = _multivector(doc, d["pi"], 2, names, order, ["pi"])
    if len(d["mu"]) != g.dim:
        raise InputError(f"mu needs {g.dim} components", _path(["mu"]))
    mu = tuple(doc.poly(t, names, order) for t in d["mu"])
    omega = build_omega(g, d["omega"]) if "omega" in d else None
    rep = Report("moment-check")
    r = schouten(pi, pi)
    rep.add("source-poisson", r.is_zero(), [r.to_str(names)] if r else [])
    rep.extend(bundle.moment_check(bundle.MomentMapData(pi, g, mu, omega, names)))
    return rep


def _graded_units(doc: Document, A: haa.GradedAlgebra) -> haa.UnitChoice:
    units = doc.data.get("units")
    if units is None:
        return haa.UnitChoice.first_basis(A)
    G = A.group
    chosen = {}
    for name, vec in units.items():
        g = _element(G, name, ["units", name])
        chosen[g] = [_rat(c) for c in vec]
        if len(chosen[g]) != len(A.basis_labels[g]):
            raise InputError(f"unit for {name} has the wrong length", _path(["units", name]))
    try:
        return haa.UnitChoice.choose(A, chosen)
    except haa.NotInvertible as exc:
        raise InputError(str(exc), _path(["units"])) from None


def cmd_haa_validate(doc: Document, args) -> Report:
    return haa.validate(build_graded(doc))


def cmd_haa_derive(doc: Document, args) -> Report:
    A = build_graded(doc)
    rep = Report("haa-derive")
    v = haa.validate(A)
    rep.extend(v, "validate:")
    if not v.passed:
        rep.add("derive", None, detail="skipped: the algebra does not validate")
        return rep
    D, inner = haa.derive_action(_graded_units(doc, A))
    rep.extend(inner)
    rep.data.update(inner.data)
    return rep


def cmd_haa_check(doc: Document, args) -> Report:
    A = build_graded(doc)
    rep = Report("haa-check")
    v = haa.validate(A)
    rep.extend(v, "validate:")
    if not v.passed:
        rep.add("twisting", None, detail="skipped: the algebra does not validate")
        return rep
    if "action" in doc.data:
        G, Ae = A.group, A.identity_component()
        act = doc.data["action"]
        rho = []
        for g in G.names:
            if g not in act["rho"]:
                raise InputError(f"no rho given for {g}", _path(["action", "rho"]))
            rho.append(_matrix(act["rho"][g], Ae.dim, ["action", "rho", g]))
        c = {}
        for n, item in enumerate(act["c"]):
            g1 = _element(G, item["pair"][0], ["action", "c", n, "pair", 0])
            g2 = _element(G, item["pair"][1], ["action", "c", n, "pair", 1])
            c[(g1, g2)] = [_rat(x) for x in item["value"]]
        missing = [(a, b) for a in G.elements() for b in G.elements() if (a, b) not in c]
        if missing:
            raise InputError(f"c missing for {len(missing)} pairs", _path(["action", "c"]))
        try:
            D = haa.ActionData(G, Ae, rho, c)
        except haa.NotInvertible as exc:
            raise InputError(str(exc), _path(["action", "c"])) from None
        rep.notes.append("checked the supplied action data")
    else:
        D, inner = haa.derive_action(_graded_units(doc, A))
        rep.extend(inner, "derive:")
    rep.extend(haa.check_twisting(D))
    return rep


def cmd_crossed(doc: Document, args) -> Report:
    d = doc.data
    G = build_group(d["group"])
    Ae = build_algebra(d["algebra"], "algebra")
    action = []
    for g in G.names:
        if g not in d["action"]:
            raise InputError(f"no matrix given for {g}", _path(["action"]))
        action.append(_matrix(d["action"][g], Ae.dim, ["action", g]))
    rep = Report("crossed")
    try:
        A = haa.crossed_product(G, Ae, action)
    except haa.NotAnAction as exc:
        rep.add("action", False, str(exc).split("; "))
        return rep
    rep.add("action", True)
    rep.extend(haa.validate(A), "validate:")
    D, inner = haa.derive_action(haa.crossed_units(A))
    rep.extend(inner, "derive:")
    one = Ae.unit
    bad = [f"({G.names[g]},{G.names[h]})" for (g, h), v in D.c.items() if v != one]
    rep.add("c-trivial", not bad, bad)
    back = [G.names[g] for g in G.elements()
            if [list(r) for r in D.rho[g]] != [list(r) for r in action[g]]]
    rep.add("action-recovered", not back, back)
    rep.extend(haa.check_twisting(D))
    rep.data["dimension"] = A.dim
    return rep


def cmd_central_ext(doc: Document, args) -> Report:
    d = doc.data
    G = build_group(d["group"])
    c = {(g, h): Fraction(1) for g in G.elements() for h in G.elements()}
    for n, (a, b, v) in enumerate(d["cocycle"]):
        g = _element(G, a, ["cocycle", n, 0])
        h = _element(G, b, ["cocycle", n, 1])
        c[(g, h)] = _rat(v)
        if not c[(g, h)]:
            raise InputError("cocycle values must be nonzero", _path(["cocycle", n, 2]))
    rep = Report("central-ext")
    bad = haa.cocycle_violations(G, c)
    names = G.names
    rep.add("cocycle", not bad, [f"({names[a]}, {names[b]}, {names[e]}): {r}" for (a, b, e), r in bad])
    A = haa.central_extension(G, c, check=False)
    v = haa.validate(A)
    rep.extend(v, "validate:")
    if v.passed:
        U = haa.UnitChoice.first_basis(A)
        back = haa.line_bundle_to_cocycle(U)
        rep.add("cocycle-recovered", back == c)
        D, _ = haa.derive_action(U)
        rep.extend(haa.check_twisting(D))
    rep.data["products"] = {f"<{names[g]}><{names[h]}>": _scaled(c[(g, h)], f"<{names[G.mul(g, h)]}>")
                            for g in G.elements() for h in G.elements()}
    return rep


def _scaled(c: Fraction, label: str) -> str:
    if c == 1:
        return label
    if c == -1:
        return "-" + label
    return f"{c} {label}"


def _pi_from(doc: Document, comps, names, where, scale: bool) -> Multivector:
    pi = _multivector(doc, comps, 2, names, quantize.ORDER, where)
    return quantize.hbar_scaled(pi) if scale else pi


def cmd_star(doc: Document, args) -> Report:
    d = doc.data
    names = tuple(d["variables"])
    pi = _pi_from(doc, d["pi"], names, ["pi"], d.get("scale", False))
    weights = tuple(_rat(w) for w in d["weights"]) if "weights" in d else None
    rep = Report("star")
    try:
        S = quantize.StarProduct(pi, weights)
    except quantize.NotFormal as exc:
        raise InputError(str(exc), _path(["pi"])) from None
    order = quantize.ORDER
    products = {}
    bad_unit, bad_skew = [], []
    one = Poly.const(len(names), 1, order)
    for n, (a, b) in enumerate(d.get("pairs", [])):
        f = doc.poly(a, names, order)
        g = doc.poly(b, names, order)
        products[f"{a} * {b}"] = S.star(f, g).to_str(names)
        for p in (f, g):
            if S.star(p, one) != p or S.star(one, p) != p:
                bad_unit.append(p.to_str(names))
        skew = (S.star(f, g) - S.star(g, f)).hbar_coefficient(1)
        want = S.poisson_bracket(f, g).hbar_coefficient(1)
        if skew != want:
            bad_skew.append(f"({a}, {b}): {(skew - want).to_str(names)}")
    rep.add("unit", not bad_unit, bad_unit)
    rep.add("skew-is-bracket", not bad_skew, bad_skew)
    jac = schouten(pi, pi)
    rep.add("poisson-mod-h3", jac.is_zero(), [jac.to_str(names)] if jac else [])
    deg = d.get("assoc_degree", 2)
    if jac.is_zero():
        mons = list(monomials(len(names), deg, 0, order))
        bad = []
        for f in mons:
            for g in mons:
                for h in mons:
                    r = S.associator(f, g, h)
                    if r:
                        bad.append(f"({f.to_str(names)}, {g.to_str(names)}, {h.to_str(names)}): "
                                   f"{r.to_str(names)}")
        rep.add("associative", not bad, bad, detail=f"monomial triples through degree {deg}")
    else:
        rep.add("associative", None, detail="skipped: the bivector is not Poisson")
    rep.data["weights"] = [str(w) for w in S.weights]
    rep.data["products"] = products
    return rep


def cmd_solve_weights(doc: Optional[Document], args) -> Report:
    rep = Report("solve-weights")
    if doc is None:
        probes, deg = quantize.default_probes(), 3
    else:
        probes = []
        for n, item in enumerate(doc.data["probes"]):
            names = tuple(item["variables"])
            probes.append(_multivector(doc, item["pi"], 2, names, None, ["probes", n, "pi"]))
        deg = doc.data.get("max_degree", 3)
    try:
        w = quantize.solve_weights(probes, deg)
    except quantize.WeightSystemError as exc:
        rep.add("unique-solution", False, exc.residuals, detail=str(exc))
        return rep
    rep.add("unique-solution", True)
    rep.data["weights"] = {"w_sym": str(w[0]), "w_left": str(w[1]), "w_right": str(w[2])}
    return rep


def cmd_quantize_hpa(doc: Document, args) -> Report:
    h = build_hpa(doc)
    rep = Report("quantize-hpa")
    defects = quantize.formal_defects(h)
    if defects:
        rep.add("formally-good", False, defects)
        return rep
    try:
        q = quantize.quantize_hpa(h, doc.data.get("probe_degree", 2))
    except hpa.NotMaurerCartan as exc:
        rep.add("formally-good", True)
        rep.add("precondition", False, detail=str(exc))
        return rep
    rep.add("formally-good", True)
    rep.extend(q.report)
    rep.data.update(q.report.data)
    rep.extend(quantize.haa_axiom_check(q), "recheck:")
    return rep


COMMANDS: Dict[str, Tuple[Optional[str], Callable[..., Report], str]] = {
    "validate-lie": ("lie", cmd_validate_lie, "check the Jacobi identity of structure constants"),
    "kk": ("lie", cmd_kk, "Kirillov-Kostant bivector on g*"),
    "affine": ("lie", cmd_affine, "KK bivector shifted by a constant 2-form"),
    "mc-check": ("hpa", cmd_mc_check, "componentwise Maurer-Cartan check"),
    "gauge": ("hpa", cmd_gauge, "gauge transform by tau"),
    "bundle-assemble": ("hpa", cmd_bundle_assemble, "Poisson structure on M x g*"),
    "bundle-check": ("hpa", cmd_bundle_check, "[Pi, Pi] = 0 versus Maurer-Cartan"),
    "hamiltonianize": ("hpa", cmd_hamiltonianize, "universal Hamiltonian action of a Poisson action"),
    "moment-check": ("moment", cmd_moment_check, "moment map equations"),
    "haa-validate": ("graded-algebra", cmd_haa_validate, "associativity and unit of a graded algebra"),
    "haa-derive": ("graded-algebra", cmd_haa_derive, "rho and c from a unit choice"),
    "haa-check": ("graded-algebra", cmd_haa_check, "twisting and cocycle identities"),
    "crossed": ("crossed", cmd_crossed, "crossed product of an algebra with a group"),
    "central-ext": ("central-ext", cmd_central_ext, "central extension by a 2-cocycle"),
    "star": ("star", cmd_star, "truncated star products"),
    "solve-weights": ("probes", cmd_solve_weights, "second-order weights from associativity"),
    "quantize-hpa": ("hpa", cmd_quantize_hpa, "quantize a formally good HPA"),
}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="poisson-hpa", description="Verifier for up-to-homotopy Poisson actions.")
    sub = p.add_subparsers(dest="command", metavar="subcommand")
    for name, (kind, _, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        nargs = "?" if name == "solve-weights" else None
        sp.add_argument("document", nargs=nargs, help=f"{kind} document (JSON), or - for stdin")
        sp.add_argument("--format", choices=("json", "text"), default="json")
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if not args.command:
        parser.print_usage(stderr)
        return 2
    kind, fn, _ = COMMANDS[args.command]
    name = args.document or ""
    try:
        doc = None
        if args.document is not None:
            if args.document == "-":
                raw = sys.stdin.read()
            else:
                try:
                    with open(args.document, encoding="utf-8") as fh:
                        raw = fh.read()
                except OSError as exc:
                    raise InputError(f"cannot read: {exc.strerror}") from None
            doc = Document(raw, kind, name)
        rep = fn(doc, args)
    except InputError as exc:
        where = f"{name}:{exc.where}" if exc.where else name
        print(f"error: {where}: {exc.message}" if where else f"error: {exc.message}", file=stderr)
        return 2
    except (DimensionError, lie.LieAlgebraError) as exc:
        print(f"error: {name}: {exc}", file=stderr)
        return 2
    if doc is not None:
        rep.input_digest = doc.digest
    stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return 0 if rep.passed else 1


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
