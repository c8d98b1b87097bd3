"""Shared test utilities: random element generators and independent oracles
(brute-force standard-monomial counting, S-pair closure, degreewise exactness
by exact linear algebra)."""

from fiberfull import (
    SubmodulePresentation,
    monomials_of_degree,
    normal_form,
)
from fiberfull.linalg import matrix_rank
from fiberfull.rings import mon_div, mon_divides, mon_lcm


def rand_monomial(rng, ring, max_exp=3):
    return tuple(rng.randint(0, max_exp) for _ in range(ring.nvars))


def rand_poly(rng, ring, max_terms=4, max_exp=3, coeff_pool=(-3, -2, -1, 1, 2, 3)):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        terms.append((rand_monomial(rng, ring, max_exp), rng.choice(coeff_pool)))
    return ring.poly(terms)


def rand_homogeneous(rng, ring, degree, tries=50):
    mons = monomials_of_degree(ring, degree)
    terms = []
    for _ in range(rng.randint(1, 3)):
        terms.append((rng.choice(mons), rng.choice((-2, -1, 1, 2, 3))))
    p = ring.poly(terms)
    return p if not p.is_zero() else ring.poly([(mons[0], 1)])


def brute_hilbert_counts(pres, window):
    """Standard-monomial count per degree by direct enumeration; independent
    of the series-based production implementation.  Parameter-free rings."""
    from fiberfull import buchberger

    ring = pres.ring
    amb = pres.ambient
    gens = pres.generators
    if gens:
        G = buchberger(SubmodulePresentation(amb, gens))
        leads = G.leads
    else:
        leads = []
    lo, hi = window
    dims = {}
    for nu in range(lo, hi + 1):
        count = 0
        for comp in range(amb.rank):
            d = nu - amb.twists[comp]
            if d < 0:
                continue
            for mon in monomials_of_degree(ring, d):
                if not any(c == comp and mon_divides(m, mon) for (m, c) in leads):
                    count += 1
        dims[nu] = count
    return dims


def spair_closure_holds(G):
    """Every S-pair of the basis reduces to zero under division: the defining
    property of a Groebner basis, checked directly."""
    for i in range(len(G.elements)):
        for j in range(i + 1, len(G.elements)):
            (mi, ci) = G.leads[i]
            (mj, cj) = G.leads[j]
            if ci != cj:
                continue
            lcm = mon_lcm(mi, mj)
            sp = G.elements[i].mul_term(mon_div(lcm, mi), 1) - G.elements[j].mul_term(
                mon_div(lcm, mj), 1)
            if not normal_form(sp, G).is_zero():
                return False
    return True


def degree_slice_matrix(res, k, nu):
    """Matrix of d_{k+1} restricted to degree nu, rows indexed by the source
    basis, columns by the target basis."""
    ring = res.ring
    source = res.modules[k + 1]
    target = res.modules[k]
    src_basis = []
    for comp in range(source.rank):
        d = nu - source.twists[comp]
        if d >= 0:
            src_basis.extend((mon, comp) for mon in monomials_of_degree(ring, d))
    tgt_basis = []
    for comp in range(target.rank):
        d = nu - target.twists[comp]
        if d >= 0:
            tgt_basis.extend((mon, comp) for mon in monomials_of_degree(ring, d))
    tgt_index = {mc: i for i, mc in enumerate(tgt_basis)}
    rows = []
    field = ring.field
    for mon, comp in src_basis:
        row = [field.zero] * len(tgt_basis)
        image = res.diffs[k][comp].mul_term(mon, 1)
        for tcomp, poly in enumerate(image.components):
            for m, c in poly.terms:
                row[tgt_index[(m, tcomp)]] = c
        rows.append(row)
    return rows, len(src_basis), len(tgt_basis)


def resolution_exact_in_degree(res, k, nu):
    """Exactness at homological position k (1 <= k <= length) in degree nu:
    the kernel of d_k matches the image of d_{k+1} dimensionwise."""
    ring = res.ring
    field = ring.field
    rows_k, src_k, _ = degree_slice_matrix(res, k - 1, nu)
    rank_k = matrix_rank(field, rows_k)
    kernel_dim = src_k - rank_k
    if k < len(res.diffs):
        rows_next, _, _ = degree_slice_matrix(res, k, nu)
        image_dim = matrix_rank(field, rows_next)
    else:
        image_dim = 0
    return kernel_dim == image_dim


def vector_in_submodule(v, G):
    return normal_form(v, G).is_zero()
