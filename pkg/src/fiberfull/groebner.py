"""Division algorithm, Buchberger's algorithm for submodules of graded free
modules, Schreyer syzygies, kernels, colon/saturation/elimination, initial
modules, square-free testing, weight-order homogenization and weight-vector
recovery.

The engine works on "term vectors": lists of ``(key, (monomial, component),
coefficient)`` sorted descending under the active module order.  Keys are
precomputed order keys, so merging and comparisons never re-derive them.
Public entry points convert to and from :class:`PolyVector`.
"""

import heapq

from .errors import InvalidArgumentError, OrderMismatchError, WeightVectorMismatchError
from .modules import GradedFreeModule, PolyVector, SubmodulePresentation
from .orders import BlockTOPOrder, SchreyerOrder, TermOrder, TOPOrder
from .rings import mon_div, mon_divides, mon_gcd, mon_is_one, mon_lcm, mon_mul

# ---------------------------------------------------------------------------
# term-vector primitives


def _tv_from_vector(v, morder):
    terms = []
    for comp, poly in enumerate(v.components):
        for mon, coeff in poly.terms:
            terms.append((morder.key(mon, comp), (mon, comp), coeff))
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _tv_to_vector(tv, module):
    ring = module.ring
    per_comp = [[] for _ in range(module.rank)]
    for _, (mon, comp), coeff in tv:
        per_comp[comp].append((mon, coeff))
    return PolyVector(module, tuple(ring.poly(ts) for ts in per_comp))


def _tv_add(a, b, field):
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    zero = field.zero
    while i < na and j < nb:
        ka, kb = a[i][0], b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            out.append(b[j])
            j += 1
        else:
            c = field.add(a[i][2], b[j][2])
            if c != zero:
                out.append((ka, a[i][1], c))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return out


def _tv_scale(tv, c, field):
    if c == field.one:
        return list(tv)
    return [(k, mm, field.mul(cf, c)) for k, mm, cf in tv]


def _tv_mul_term(tv, mon, coeff, morder, field):
    out = []
    for _, (m, comp), cf in tv:
        nm = mon_mul(m, mon)
        out.append((morder.key(nm, comp), (nm, comp), field.mul(cf, coeff)))
    return out


class _Marked:
    """Monic basis element with cached leading data."""

    __slots__ = ("tv", "lead_mm", "lead_key", "sugar")

    def __init__(self, tv, lead_mm, lead_key, sugar):
        self.tv = tv
        self.lead_mm = lead_mm
        self.lead_key = lead_key
        self.sugar = sugar


def _mark(tv, field, ring, twists):
    key, mm, coeff = tv[0]
    if coeff != field.one:
        tv = _tv_scale(tv, field.inv(coeff), field)
    sugar = max(ring.degree(m) + twists[c] for _, (m, c), _ in tv)
    return _Marked(tv, mm, key, sugar)


def _tv_normal_form(tv, basis, morder, field, quotients=None):
    """Full normal form against a marked basis; every term of the result is
    outside the initial module of the basis.  ``quotients`` accumulates the
    division coefficients per basis index when supplied."""
    work = list(tv)
    out = []
    pos = 0
    while pos < len(work):
        _, (m, comp), coeff = work[pos]
        hit = None
        for idx, b in enumerate(basis):
            bm, bc = b.lead_mm
            if bc == comp and mon_divides(bm, m):
                hit = (idx, b)
                break
        if hit is None:
            out.append(work[pos])
            pos += 1
            continue
        idx, b = hit
        q = mon_div(m, bm)
        scaled = _tv_mul_term(b.tv, q, field.neg(coeff), morder, field)
        work = _tv_add(work[pos:], scaled, field)
        pos = 0
        if quotients is not None:
            quotients.setdefault(idx, []).append((q, coeff))
    return out


# ---------------------------------------------------------------------------
# Buchberger


def _spair_data(ring, gi, gj):
    (mi, ci) = gi.lead_mm
    (mj, cj) = gj.lead_mm
    lcm = mon_lcm(mi, mj)
    sugar = max(
        gi.sugar + ring.degree(mon_div(lcm, mi)),
        gj.sugar + ring.degree(mon_div(lcm, mj)),
    )
    return lcm, sugar


def gb_engine(tvs, morder, field, ring, twists, rank):
    """Compute a reduced marked basis from raw term vectors.

    Pair selection is by sugar degree, then lcm key (normal strategy).  The
    chain criterion is applied at selection time; the coprimality criterion
    only for rank-1 ambients, where it is valid.
    """
    basis = []
    for tv in tvs:
        if tv:
            basis.append(_mark(tv, field, ring, twists))
    basis.sort(key=lambda b: b.lead_key)

    heap = []
    pending = set()

    def push_pairs(n):
        gn = basis[n]
        for i in range(n):
            if basis[i].lead_mm[1] != gn.lead_mm[1]:
                continue
            lcm, sugar = _spair_data(ring, basis[i], gn)
            heapq.heappush(heap, (sugar, morder.key(lcm, gn.lead_mm[1]), i, n))
            pending.add((i, n))

    for n in range(len(basis)):
        push_pairs(n)

    while heap:
        sugar, lcm_key, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        gi, gj = basis[i], basis[j]
        mi, ci = gi.lead_mm
        mj, _ = gj.lead_mm
        lcm = mon_lcm(mi, mj)
        if rank == 1 and mon_is_one(mon_gcd(mi, mj)):
            continue
        skip = False
        for k, gk in enumerate(basis):
            if k in (i, j):
                continue
            mk, ck = gk.lead_mm
            if ck != ci or not mon_divides(mk, lcm):
                continue
            a, b = (i, k) if i < k else (k, i)
            c, d = (j, k) if j < k else (k, j)
            if (a, b) not in pending and (c, d) not in pending:
                skip = True
                break
        if skip:
            continue
        sp = _tv_add(
            _tv_mul_term(gi.tv, mon_div(lcm, mi), field.one, morder, field),
            _tv_mul_term(gj.tv, mon_div(lcm, mj), field.neg(field.one), morder, field),
            field,
        )
        rem = _tv_normal_form(sp, basis, morder, field)
        if rem:
            basis.append(_mark(rem, field, ring, twists))
            push_pairs(len(basis) - 1)

    return _interreduce(basis, morder, field, ring, twists)


def _interreduce(basis, morder, field, ring, twists):
    """Minimalize leads, then tail-reduce; result is the unique reduced basis
    sorted ascending by leading key."""
    basis = sorted(basis, key=lambda b: b.lead_key)
    kept = []
    for b in basis:
        m, c = b.lead_mm
        if any(kc == c and mon_divides(km, m) for (km, kc) in (x.lead_mm for x in kept)):
            continue
        kept.append(b)
    out = []
    for i, b in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        red = _tv_normal_form(b.tv, others, morder, field)
        out.append(_mark(red, field, ring, twists))
    out.sort(key=lambda b: b.lead_key)
    return out


class GroebnerBasis:
    """Reduced marked basis of a submodule of a graded free module."""

    __slots__ = ("module", "ring_order", "module_order", "elements", "leads", "reduced")

    def __init__(self, module, ring_order, module_order, elements, leads, reduced=True):
        self.module = module
        self.ring_order = ring_order
        self.module_order = module_order
        self.elements = tuple(elements)
        self.leads = tuple(leads)
        self.reduced = reduced

    @property
    def ring(self):
        return self.module.ring

    def __len__(self):
        return len(self.elements)

    def normal_form(self, v):
        return normal_form(v, self)

    def contains(self, v):
        return normal_form(v, self).is_zero()

    def __repr__(self):
        return "GroebnerBasis(%d elements, %s)" % (len(self.elements), self.ring_order.describe())


def _marked_from_basis(G):
    field = G.ring.field
    twists = G.module.twists
    return [
        _mark(_tv_from_vector(v, G.module_order), field, G.ring, twists)
        for v in G.elements
    ]


def buchberger(pres, order=None, module_order=None):
    """Reduced Groebner basis of the submodule spanned by the generators."""
    ring = pres.ring
    order = order or TermOrder.grevlex()
    morder = module_order or TOPOrder(ring, order)
    twists = pres.ambient.twists
    tvs = [_tv_from_vector(v, morder) for v in pres.generators]
    marked = gb_engine(tvs, morder, ring.field, ring, twists, pres.ambient.rank)
    elements = [_tv_to_vector(b.tv, pres.ambient) for b in marked]
    leads = [b.lead_mm for b in marked]
    return GroebnerBasis(pres.ambient, order, morder, elements, leads, True)


def groebner_ideal(ring, polys, order=None):
    return buchberger(SubmodulePresentation.ideal(ring, polys), order)


def normal_form(v, G):
    """Remainder of v on division by a marked basis; no term of the result is
    divisible by a leading term of G, and v - result lies in <G>."""
    if v.module != G.module:
        raise OrderMismatchError("vector and basis live in different modules")
    tv = _tv_from_vector(v, G.module_order)
    marked = _marked_from_basis(G)
    rem = _tv_normal_form(tv, marked, G.module_order, G.ring.field)
    return _tv_to_vector(rem, G.module)


def initial_module(G):
    """Monomial submodule generated by the leading terms of G."""
    ring = G.ring
    gens = []
    for (mon, comp) in G.leads:
        vec = [ring.zero()] * G.module.rank
        vec[comp] = ring.poly([(mon, 1)])
        gens.append(PolyVector(G.module, tuple(vec)))
    return SubmodulePresentation(G.module, gens)


# ---------------------------------------------------------------------------
# Schreyer syzygies


def _schreyer_level(marked, morder, field, ring, parent_twists):
    """Syzygies of a marked basis living in a module with the given twists.

    Returns (marked syzygies, their order, degrees of the basis elements,
    degrees of the syzygies); by Schreyer's theorem the syzygies are a
    Groebner basis under the induced order with leading terms (lcm/lm_i) e_i.
    """
    leads = [b.lead_mm for b in marked]
    element_degrees = tuple(
        ring.degree(m) + parent_twists[c] for (m, c) in leads
    )
    sorder = SchreyerOrder(morder, leads)
    syz_twists = []
    syz_marked = []
    pairs = []
    for i in range(len(marked)):
        for j in range(i + 1, len(marked)):
            if leads[i][1] == leads[j][1]:
                pairs.append((i, j))
    for i, j in pairs:
        mi, ci = leads[i]
        mj, _ = leads[j]
        lcm = mon_lcm(mi, mj)
        ui = mon_div(lcm, mi)
        uj = mon_div(lcm, mj)
        sp = _tv_add(
            _tv_mul_term(marked[i].tv, ui, field.one, morder, field),
            _tv_mul_term(marked[j].tv, uj, field.neg(field.one), morder, field),
            field,
        )
        quotients = {}
        rem = _tv_normal_form(sp, marked, morder, field, quotients)
        if rem:
            raise InvalidArgumentError("syzygy computation requires a Groebner basis")
        coeffs = {(ui, i): field.one, (uj, j): field.neg(field.one)}
        for idx, qterms in quotients.items():
            for qm, qc in qterms:
                key = (qm, idx)
                cur = coeffs.get(key, field.zero)
                coeffs[key] = field.sub(cur, qc)
        tv = [
            (sorder.key(m, c), (m, c), coeff)
            for (m, c), coeff in coeffs.items()
            if coeff != field.zero
        ]
        tv.sort(key=lambda t: t[0], reverse=True)
        if not tv:
            continue
        syz_twists.append(ring.degree(lcm) + parent_twists[ci])
        syz_marked.append(_mark(tv, field, ring, element_degrees))
        assert syz_marked[-1].lead_mm == (ui, i)
    return syz_marked, sorder, element_degrees, tuple(syz_twists)


def syzygies(G):
    """Generators of the syzygy module of a reduced basis, homogeneous for
    the induced twists (degree of each basis element)."""
    marked = _marked_from_basis(G)
    ring = G.ring
    level, _, element_degrees, _ = _schreyer_level(
        marked, G.module_order, ring.field, ring, G.module.twists)
    ambient = GradedFreeModule(ring, element_degrees)
    # Schreyer-key term vectors sort differently from canonical form;
    # conversion re-sorts per component
    vecs = [_tv_to_vector(b.tv, ambient) for b in level]
    return SubmodulePresentation(ambient, vecs)


# ---------------------------------------------------------------------------
# kernels, colon, saturation, elimination


def module_kernel(vectors, source_twists, ambient=None):
    """Kernel of the map sending the i-th basis vector of a free module with
    the given twists to ``vectors[i]``.

    Computed by a Groebner basis of the graph generators (v_i, e_i) under a
    component-block elimination order; graph elements with zero image part
    project onto kernel generators."""
    if ambient is None:
        if not vectors:
            raise InvalidArgumentError("need an ambient module for an empty map")
        ambient = vectors[0].module
    ring = ambient.ring
    field = ring.field
    f = ambient.rank
    n = len(vectors)
    combined = GradedFreeModule(ring, ambient.twists + tuple(source_twists))
    morder = BlockTOPOrder(ring, TermOrder.grevlex(), f)
    tvs = []
    for i, v in enumerate(vectors):
        comps = list(v.components) + [ring.zero()] * n
        comps[f + i] = ring.one()
        tvs.append(_tv_from_vector(PolyVector(combined, tuple(comps)), morder))
    marked = gb_engine(tvs, morder, field, ring, combined.twists, combined.rank)
    source = GradedFreeModule(ring, tuple(source_twists))
    out = []
    for b in marked:
        if any(comp < f for _, (_, comp), _ in b.tv):
            continue
        vec = _tv_to_vector([(k, (m, c - f), cf) for k, (m, c), cf in b.tv], source)
        out.append(vec)
    return out


def _vector_degree_or_zero(v):
    return 0 if v.is_zero() else v.degree()


def colon(pres, h):
    """(U : h) = all v in the ambient with h*v in U."""
    if h.is_zero():
        raise InvalidArgumentError("colon by the zero polynomial")
    amb = pres.ambient
    hdeg = h.degree() if h.is_homogeneous() else 0
    vectors = []
    twists = []
    for j in range(amb.rank):
        vectors.append(amb.basis_vector(j).mul_poly(h))
        twists.append(amb.twists[j] + hdeg)
    for g in pres.generators:
        vectors.append(g)
        twists.append(_vector_degree_or_zero(g))
    syz = module_kernel(vectors, twists, ambient=amb)
    gens = []
    for s in syz:
        head = PolyVector(amb, s.components[: amb.rank])
        if not head.is_zero():
            gens.append(head)
    result = SubmodulePresentation(amb, gens)
    G = buchberger(result)
    return SubmodulePresentation(amb, G.elements)


def saturate(pres, h):
    """(U : h^inf), by iterating the colon until it stabilizes."""
    if h.is_zero():
        raise InvalidArgumentError("saturation by the zero polynomial")
    if h.is_constant():
        G = buchberger(pres)
        return SubmodulePresentation(pres.ambient, G.elements)
    current = SubmodulePresentation(pres.ambient, buchberger(pres).elements)
    while True:
        nxt = colon(current, h)
        if nxt.generators == current.generators:
            return current
        current = nxt


def contract_to_parameter(pres):
    """Generators of I intersected with k[t], for an ideal I in k[t][x]."""
    ring = pres.ring
    if not ring.has_parameter:
        raise InvalidArgumentError("contraction needs a ring with a parameter variable")
    if pres.ambient.rank != 1:
        raise InvalidArgumentError("contraction is defined for ideals")
    G = buchberger(pres, TermOrder.block_x_over_t())
    r = ring.num_positive
    out = []
    for v in G.elements:
        poly = v.components[0]
        if all(all(e == 0 for e in m[:r]) for m, _ in poly.terms):
            out.append(poly)
    return out


def is_squarefree(pres):
    """True when every minimal monomial generator has all exponents <= 1."""
    for g in pres.generators:
        nonzero = [(i, c) for i, c in enumerate(g.components) if not c.is_zero()]
        if len(nonzero) != 1 or not nonzero[0][1].is_monomial():
            raise InvalidArgumentError("square-free test needs monomial generators")
        mon = nonzero[0][1].terms[0][0]
        if any(e > 1 for e in mon):
            return False
    return True


# ---------------------------------------------------------------------------
# weight vectors and homogenization


def _gb_of_ideal_source(source, order):
    if isinstance(source, GroebnerBasis):
        return source
    if order is None:
        raise InvalidArgumentError("a term order is required when passing raw generators")
    return buchberger(source, order)


def weight_vector_for(source, order=None):
    """A nonnegative integer vector giving each reduced-basis element its
    marked leading term with slack >= 1; deterministic: minimal total weight,
    then lexicographically smallest.  The all-zero solution (monomial ideal)
    is normalized to all ones."""
    G = _gb_of_ideal_source(source, order)
    ring = G.ring
    if ring.has_parameter:
        raise InvalidArgumentError("weight vectors are computed over parameter-free rings")
    r = ring.num_positive
    constraints = []
    for v, (lead_mon, _) in zip(G.elements, G.leads):
        for mon, _ in v.components[0].terms:
            if mon != lead_mon:
                constraints.append((lead_mon, mon))
    if not constraints:
        return (1,) * r

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    total = 0
    while total <= 10000:
        for omega in compositions(total, r):
            ok = True
            for lead, other in constraints:
                lw = sum(o * e for o, e in zip(omega, lead))
                ow = sum(o * e for o, e in zip(omega, other))
                if lw < ow + 1:
                    ok = False
                    break
            if ok:
                return omega
        total += 1
    raise InvalidArgumentError("no weight vector found below total weight 10000")


def homogenize_omega(source, omega, order=None):
    """Homogenize a reduced basis with respect to a weight vector: each term
    c*x^a of g becomes c*t^(m - omega.a)*x^a with m the maximal weight over
    the terms of g.  Setting t=0 must recover the marked leading terms and
    t=1 must recover the inputs; failures raise weight-vector-mismatch."""
    G = _gb_of_ideal_source(source, order)
    ring = G.ring
    if ring.has_parameter:
        raise InvalidArgumentError("input ideal must live in a parameter-free ring")
    if pres_rank(G) != 1:
        raise InvalidArgumentError("homogenization is defined for ideals")
    omega = tuple(omega)
    if len(omega) != ring.num_positive:
        raise InvalidArgumentError("weight vector length does not match the ring")
    tring = ring.with_parameter()
    out = []
    for v, (lead_mon, _) in zip(G.elements, G.leads):
        g = v.components[0]
        if not g.is_homogeneous():
            raise InvalidArgumentError("homogenization needs homogeneous input")
        wdegs = [sum(o * e for o, e in zip(omega, m)) for m, _ in g.terms]
        m = max(wdegs)
        terms = [
            (mon + (m - wd,), c)
            for (mon, c), wd in zip(g.terms, wdegs)
        ]
        hom = tring.poly(terms)
        at_zero = [(mon, c) for (mon, c) in terms if mon[-1] == 0]
        if len(at_zero) != 1 or at_zero[0][0][:-1] != lead_mon:
            raise WeightVectorMismatchError(
                "weight vector does not isolate the marked leading term of %s" % g)
        if hom.specialize_parameter(1, ring) != g:
            raise WeightVectorMismatchError("t=1 specialization failed for %s" % g)
        out.append(hom)
    return SubmodulePresentation.ideal(tring, out)


def pres_rank(source):
    if isinstance(source, GroebnerBasis):
        return source.module.rank
    return source.ambient.rank
