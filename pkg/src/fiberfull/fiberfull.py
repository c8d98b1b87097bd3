"""Fiber-fullness over a polynomial line, torsion certificates, the
fiber-full locus, fiber comparison, and verification of square-free initial
degenerations.

The base is k[t] with t of degree 0 adjoined to the graded ring.  Freeness of
a finitely generated graded piece over the localized base at (t - c) is
exactly the absence of (t - c)-torsion, so every check reduces to computing
the torsion submodule and a monic annihilator in k[t]:

  * the torsion of ambient/<relations> is the saturation of the relations at
    a single polynomial h(t), the least common multiple of the parameter
    coefficients of the leading positive-degree terms of a block-order basis
    (positive-degree variables above t);
  * the certificate polynomial generates the contraction to k[t] of the
    annihilator of the torsion generators.

A module is fiber-full at (t - c) when neither the module itself nor any of
Ext^0..Ext^r against the ambient polynomial ring has torsion there.  The
locus polynomial is the monic lcm of all certificate annihilators; its
nonvanishing set is exactly the set of good fibers.
"""

import os
import random
from dataclasses import dataclass

from .errors import InvalidArgumentError, TheoremViolationError
from .ext import ext_modules, local_cohomology_tables
from .groebner import (
    buchberger,
    contract_to_parameter,
    homogenize_omega,
    initial_module,
    is_squarefree,
    module_kernel,
    saturate,
    weight_vector_for,
)
from .modules import GradedFreeModule, PolyVector, SubmodulePresentation
from .orders import TermOrder
from .resolution import betti_table, depth_and_regularity, free_resolution


def rng_from_env():
    """Deterministic RNG; FIBERFULL_SEED overrides the default seed."""
    return random.Random(int(os.environ.get("FIBERFULL_SEED", "0")))


# ---------------------------------------------------------------------------
# univariate helpers on polynomials in the parameter


def parameter_coefficients(poly):
    """Coefficient list (ascending) of a polynomial in the parameter alone."""
    ring = poly.ring
    ti = ring.parameter_index()
    coeffs = {}
    for mon, c in poly.terms:
        if any(e != 0 for i, e in enumerate(mon) if i != ti):
            raise InvalidArgumentError("%s is not a polynomial in the parameter" % poly)
        coeffs[mon[ti]] = c
    if not coeffs:
        return []
    out = [ring.field.zero] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return out


def parameter_polynomial(ring, coeffs):
    ti = ring.parameter_index()
    terms = []
    for k, c in enumerate(coeffs):
        mon = [0] * ring.nvars
        mon[ti] = k
        terms.append((tuple(mon), c))
    return ring.poly(terms)


def _c_strip(field, coeffs):
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    return coeffs


def _c_monic(field, coeffs):
    coeffs = _c_strip(field, list(coeffs))
    if not coeffs:
        return coeffs
    inv = field.inv(coeffs[-1])
    return [field.mul(c, inv) for c in coeffs]


def _c_mod(field, a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and _c_strip(field, a):
        if not a:
            break
        shift = len(a) - 1 - db
        factor = field.div(a[-1], lb)
        for i, c in enumerate(b):
            a[i + shift] = field.sub(a[i + shift], field.mul(factor, c))
        a = _c_strip(field, a)
    return a


def _c_gcd(field, a, b):
    a = _c_strip(field, list(a))
    b = _c_strip(field, list(b))
    while b:
        a, b = b, _c_mod(field, a, b)
    return _c_monic(field, a)


def _c_mul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


def _c_divexact(field, a, b):
    """a / b for exact division."""
    a = _c_strip(field, list(a))
    b = _c_strip(field, list(b))
    out = [field.zero] * (len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        shift = len(a) - len(b)
        factor = field.div(a[-1], b[-1])
        out[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] = field.sub(a[i + shift], field.mul(factor, c))
        a = _c_strip(field, a)
    return out


def parameter_lcm(f, g):
    """Monic lcm of two polynomials in the parameter."""
    ring = f.ring
    field = ring.field
    a = parameter_coefficients(f)
    b = parameter_coefficients(g)
    if not a or not b:
        raise InvalidArgumentError("lcm with zero")
    d = _c_gcd(field, a, b)
    prod = _c_mul(field, a, b)
    return parameter_polynomial(ring, _c_monic(field, _c_divexact(field, prod, d)))


def parameter_monic(f):
    return parameter_polynomial(f.ring, _c_monic(f.ring.field, parameter_coefficients(f)))


def evaluate_parameter(f, c):
    """f(c) for f a polynomial in the parameter."""
    field = f.ring.field
    coeffs = parameter_coefficients(f)
    c = field.coerce(c)
    acc = field.zero
    for coeff in reversed(coeffs):
        acc = field.add(field.mul(acc, c), coeff)
    return acc


# ---------------------------------------------------------------------------
# torsion certificates


@dataclass(frozen=True)
class TorsionCertificate:
    index: object  # Ext index, or None for the module itself
    torsion_generators: tuple
    annihilator: object  # monic polynomial in the parameter; 1 when no torsion

    def is_torsion_free(self):
        return not self.torsion_generators

    def to_json_dict(self):
        return {
            "index": self.index,
            "torsion_generators": [str(v) for v in self.torsion_generators],
            "annihilator": str(self.annihilator),
        }


def _leading_parameter_content(G):
    """lcm over the basis of the parameter coefficient of each element's
    leading positive-degree monomial (block order: x above t)."""
    ring = G.ring
    r = ring.num_positive
    h = ring.one()
    for v, (lead_mon, comp) in zip(G.elements, G.leads):
        xpart = lead_mon[:r]
        coeffs = {}
        for mon, c in v.components[comp].terms:
            if mon[:r] == xpart:
                coeffs[mon[r]] = c
        content = parameter_polynomial(ring, [coeffs.get(k, ring.field.zero) for k in range(max(coeffs) + 1)])
        if content.is_constant():
            continue
        h = parameter_lcm(h, content) if not h.is_constant() else parameter_monic(content)
    return h


def parameter_torsion(pres):
    """Torsion certificate of ambient/<relations> over the parameter line:
    generators of the saturation of the relations at the leading-content
    polynomial, reduced to normal form, plus the monic annihilator obtained
    by contracting the colon ideal to the parameter."""
    if isinstance(pres, SubmodulePresentation):
        pres = pres.as_quotient("module")
    ring = pres.ring
    if not ring.has_parameter:
        raise InvalidArgumentError("parameter torsion needs a ring with a parameter")
    one = ring.one()
    index = None
    if pres.ambient.rank == 0:
        return TorsionCertificate(index, (), one)
    sub = SubmodulePresentation(pres.ambient, pres.relations)
    G = buchberger(sub, TermOrder.block_x_over_t())
    if len(G) == 0:
        return TorsionCertificate(index, (), one)
    h = _leading_parameter_content(G)
    if h.is_constant():
        return TorsionCertificate(index, (), one)
    sat = saturate(SubmodulePresentation(pres.ambient, G.elements), h)
    torsion = []
    for v in sat.generators:
        nf = G.normal_form(v)
        if not nf.is_zero():
            torsion.append(nf)
    if not torsion:
        return TorsionCertificate(index, (), one)
    g = _torsion_annihilator(G, torsion)
    return TorsionCertificate(index, tuple(torsion), g)


def _torsion_annihilator(G, torsion):
    """Monic generator of {p in k[t] : p * w in <relations> for all torsion
    generators w}, via one stacked colon and a contraction."""
    ring = G.ring
    amb = G.module
    m = len(torsion)
    f = amb.rank
    stacked_module = GradedFreeModule(ring, tuple(t for w in torsion for t in amb.twists))
    comps = []
    for w in torsion:
        comps.extend(w.components)
    stacked = PolyVector(stacked_module, tuple(comps))
    vectors = [stacked]
    twists = [0]
    for j in range(m):
        for u in G.elements:
            slot = [ring.zero()] * (f * m)
            for i, c in enumerate(u.components):
                slot[j * f + i] = c
            vectors.append(PolyVector(stacked_module, tuple(slot)))
            twists.append(u.degree())
    syz = module_kernel(vectors, twists, ambient=stacked_module)
    ann_gens = [s.components[0] for s in syz if not s.components[0].is_zero()]
    contracted = contract_to_parameter(SubmodulePresentation.ideal(ring, ann_gens))
    if not contracted:
        raise InvalidArgumentError("torsion annihilator does not meet the parameter ring")
    return parameter_monic(contracted[0])


# ---------------------------------------------------------------------------
# fiber-fullness


@dataclass(frozen=True)
class IndexVerdict:
    index: int
    free_over_base: bool
    certificate: TorsionCertificate

    def to_json_dict(self):
        return {
            "index": self.index,
            "free_over_base": self.free_over_base,
            "certificate": self.certificate.to_json_dict(),
        }


@dataclass(frozen=True)
class FiberFullReport:
    at: object  # field element c; the prime checked is (t - c)
    module_free_over_base: bool
    module_certificate: TorsionCertificate
    verdicts: tuple
    overall: bool

    def prime_str(self):
        c = self.at
        if c == 0:
            return "t"
        try:
            negative = c < 0
        except TypeError:
            negative = False
        return "t+%s" % (-c,) if negative else "t-%s" % (c,)

    def to_json_dict(self):
        return {
            "prime": self.prime_str(),
            "module_free_over_base": self.module_free_over_base,
            "module_certificate": self.module_certificate.to_json_dict(),
            "ext_verdicts": [v.to_json_dict() for v in self.verdicts],
            "overall": self.overall,
        }


def _free_at(cert, c):
    g = cert.annihilator
    if g.is_constant():
        return True
    return evaluate_parameter(g, c) != g.ring.field.zero


def fiber_full_check(pres, at=0):
    """Decide fiber-fullness of ambient/<gens> at the prime (t - at): the
    module and every Ext^i against the ambient ring, i = 0..r (r counting
    positive-degree variables only), must be torsion-free there."""
    ring = pres.ring
    if not ring.has_parameter:
        raise InvalidArgumentError("fiber-fullness is checked over a parameter ring")
    r = ring.num_positive
    module_cert = parameter_torsion(pres)
    module_cert = TorsionCertificate(None, module_cert.torsion_generators, module_cert.annihilator)
    exts = ext_modules(pres, top_index=r)
    verdicts = []
    for i, ext in enumerate(exts):
        cert = parameter_torsion(ext)
        cert = TorsionCertificate(i, cert.torsion_generators, cert.annihilator)
        verdicts.append(IndexVerdict(i, _free_at(cert, at), cert))
    module_free = _free_at(module_cert, at)
    overall = module_free and all(v.free_over_base for v in verdicts)
    return FiberFullReport(at, module_free, module_cert, tuple(verdicts), overall)


def fiber_full_locus(pres):
    """Monic polynomial g(t) whose nonvanishing locus is exactly the set of
    primes (t - c) at which the module is fiber-full."""
    report = fiber_full_check(pres, at=0)
    ring = pres.ring
    g = ring.one()
    certs = [report.module_certificate] + [v.certificate for v in report.verdicts]
    for cert in certs:
        gi = cert.annihilator
        if gi.is_constant():
            continue
        g = parameter_lcm(g, gi) if not g.is_constant() else parameter_monic(gi)
    return g


def specialize_presentation(pres, c, target_ring=None):
    """Substitute the parameter by a field element in every generator."""
    ring = pres.ring
    target = target_ring if target_ring is not None else ring.without_parameter()
    amb = GradedFreeModule(target, pres.ambient.twists)
    gens = []
    for g in pres.generators:
        gens.append(PolyVector(amb, tuple(p.specialize_parameter(c, target) for p in g.components)))
    return SubmodulePresentation(amb, gens)


def generic_point(pres):
    """Smallest nonnegative integer c with g(c) != 0 for the locus
    polynomial g; stands in for the generic fiber."""
    g = fiber_full_locus(pres)
    field = pres.ring.field
    limit = field.p if field.p is not None else 10**6
    c = 0
    while c < limit:
        if g.is_constant() or evaluate_parameter(g, c) != field.zero:
            return c
        c += 1
    raise InvalidArgumentError("no good specialization point exists in the field")


def fiber_hilbert_compare(pres, points, i, window):
    """Local cohomology tables of the fibers at the given points ("generic"
    resolves to the smallest good integer point).  Inside the fiber-full
    locus these tables agree."""
    from .ext import local_cohomology_hilbert

    resolved = []
    for c in points:
        resolved.append(generic_point(pres) if c == "generic" else c)
    tables = []
    for c in resolved:
        spec = specialize_presentation(pres, c)
        tables.append(local_cohomology_hilbert(spec, i, window, permissive=True))
    return tables


# ---------------------------------------------------------------------------
# square-free degeneration verification


@dataclass(frozen=True)
class DegenerationReport:
    order: object
    omega: tuple
    initial_generators: tuple
    family_generators: tuple
    squarefree: bool
    fiberfull: FiberFullReport
    tables_ideal: tuple
    tables_initial: tuple
    equal: bool
    betti_ideal: object
    betti_initial: object
    depth_ideal: int
    reg_ideal: int
    depth_initial: int
    reg_initial: int
    window: tuple

    def extremal_equal(self):
        return self.betti_ideal.extremal == self.betti_initial.extremal

    def to_json_dict(self):
        return {
            "order": self.order.describe(),
            "omega": list(self.omega),
            "initial_ideal": [str(g) for g in self.initial_generators],
            "family": [str(g) for g in self.family_generators],
            "squarefree": self.squarefree,
            "fiberfull": self.fiberfull.to_json_dict(),
            "window": [self.window[0], self.window[1]],
            "hilbert_ideal": [t.to_json_dict() for t in self.tables_ideal],
            "hilbert_initial": [t.to_json_dict() for t in self.tables_initial],
            "equal": self.equal,
            "betti_ideal": self.betti_ideal.to_json_dict(),
            "betti_initial": self.betti_initial.to_json_dict(),
            "depth_ideal": self.depth_ideal,
            "reg_ideal": self.reg_ideal,
            "depth_initial": self.depth_initial,
            "reg_initial": self.reg_initial,
            "extremal_equal": self.extremal_equal(),
        }


def verify_degeneration(pres, order, window):
    """Full verification pipeline for one homogeneous ideal and term order:
    initial ideal and square-freeness, weight vector and homogenized family,
    fiber-fullness of the family at t = 0, local cohomology tables of both
    ends, Betti tables, extremal positions, depth and regularity.

    When the initial ideal is square-free and the family is fiber-full, the
    tables must agree degreewise; if they do not, something is inconsistent
    and a theorem-violation error carrying the report is raised.
    """
    ring = pres.ring
    if ring.has_parameter:
        raise InvalidArgumentError("the input ideal must not involve the parameter")
    if pres.ambient.rank != 1:
        raise InvalidArgumentError("degeneration verification expects an ideal")
    for g in pres.generators:
        if not g.is_homogeneous():
            raise InvalidArgumentError("degeneration verification needs a homogeneous ideal")
    r = ring.num_positive
    G = buchberger(pres, order)
    init = initial_module(G)
    squarefree = is_squarefree(init)
    omega = weight_vector_for(G)
    family = homogenize_omega(G, omega)
    ff = fiber_full_check(family, at=0)

    tables_ideal = local_cohomology_tables(pres, window)
    tables_init = local_cohomology_tables(init, window)
    equal = all(a == b for a, b in zip(tables_ideal, tables_init))

    bt_ideal = betti_table(free_resolution(pres, minimize=True))
    bt_init = betti_table(free_resolution(init, minimize=True))
    depth_i, reg_i = depth_and_regularity(bt_ideal, r)
    depth_0, reg_0 = depth_and_regularity(bt_init, r)

    report = DegenerationReport(
        order=order,
        omega=tuple(omega),
        initial_generators=tuple(v.components[0] for v in init.generators),
        family_generators=tuple(v.components[0] for v in family.generators),
        squarefree=squarefree,
        fiberfull=ff,
        tables_ideal=tuple(tables_ideal),
        tables_initial=tuple(tables_init),
        equal=equal,
        betti_ideal=bt_ideal,
        betti_initial=bt_init,
        depth_ideal=depth_i,
        reg_ideal=reg_i,
        depth_initial=depth_0,
        reg_initial=reg_0,
        window=window,
    )
    if squarefree and ff.overall and not equal:
        raise TheoremViolationError(
            "square-free initial ideal with a fiber-full family produced unequal "
            "local cohomology tables", report)
    return report
