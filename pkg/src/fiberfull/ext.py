"""Ext against the ring from dualized free resolutions, Hilbert functions of
graded module presentations, and Hilbert functions of graded local cohomology
through the duality with Ext: over a field base,

    dim [H^i(M)]_nu  =  dim [Ext^{r-i}(M, T)]_{-nu-delta},

where r counts the positive-degree variables and delta is their total weight.
The dual twist and the degree flip of the base dual compose into the single
index shift above.
"""

from .errors import InvalidArgumentError
from .groebner import buchberger, module_kernel
from .hilbert import HilbertTable, hilbert_from_leads, zero_table
from .modules import GradedFreeModule, GradedModulePresentation, PolyVector
from .resolution import free_resolution


def _dual_columns(res, k):
    """Columns of the transpose of d_k, as vectors in the dual of F_k."""
    cols = res.diffs[k - 1]
    source_dual = res.modules[k].dual()
    out = []
    for row in range(res.modules[k - 1].rank):
        comps = tuple(col.components[row] for col in cols)
        out.append(PolyVector(source_dual, comps))
    return out


def _ext_from_resolution(res, i):
    """Presentation of the i-th right-derived Hom(-, ring) from a free
    resolution: kernel of the next transposed differential modulo the image
    of the previous one, as an abstract quotient presentation."""
    ring = res.ring
    if i < 0:
        raise IndexError("negative cohomological index")
    if i > res.length:
        return GradedModulePresentation(GradedFreeModule(ring, ()), [], "Ext^%d" % i)
    Fi_dual = res.modules[i].dual()
    if i < res.length:
        next_cols = _dual_columns(res, i + 1)
        kernel = module_kernel(next_cols, Fi_dual.twists, ambient=res.modules[i + 1].dual())
    else:
        kernel = [Fi_dual.basis_vector(j) for j in range(Fi_dual.rank)]
    if not kernel:
        return GradedModulePresentation(GradedFreeModule(ring, ()), [], "Ext^%d" % i)
    image = _dual_columns(res, i) if i >= 1 else []
    kernel_twists = tuple(v.degree() for v in kernel)
    stacked = list(kernel) + list(image)
    stacked_twists = list(kernel_twists) + [0 if v.is_zero() else v.degree() for v in image]
    syz = module_kernel(stacked, stacked_twists, ambient=Fi_dual)
    ambient = GradedFreeModule(ring, kernel_twists)
    relations = []
    for s in syz:
        head = PolyVector(ambient, s.components[: len(kernel)])
        if not head.is_zero():
            relations.append(head)
    return GradedModulePresentation(ambient, relations, "Ext^%d" % i)


def ext_modules(pres, top_index=None):
    """Presentations of Ext^i(ambient/<gens>, ring) for i = 0..top_index
    (default: the number of positive-degree variables).  Indices beyond the
    resolution length give zero modules."""
    ring = pres.ring
    if top_index is None:
        top_index = ring.num_positive
    res = free_resolution(pres, minimize=False)
    return [_ext_from_resolution(res, i) for i in range(top_index + 1)]


def hilbert_function(pres, window):
    """Exact dimensions of the graded pieces of a module presentation on a
    finite window, by standard-monomial counting against the initial module
    of the relations."""
    if isinstance(pres, GradedModulePresentation):
        ambient, relations = pres.ambient, pres.relations
    else:
        ambient, relations = pres.ambient, pres.generators
    if ambient.rank == 0:
        return zero_table(window)
    ring = ambient.ring
    if relations:
        from .modules import SubmodulePresentation

        G = buchberger(SubmodulePresentation(ambient, relations))
        leads = G.leads
    else:
        leads = []
    return hilbert_from_leads(ring, ambient.rank, ambient.twists, leads, window)


def local_cohomology_hilbert(pres, i, window, permissive=False):
    """Hilbert table of the i-th graded local cohomology of ambient/<gens>
    supported at the ideal of positive-degree variables, over a field base.

    Computed as the base dual of Ext^{r-i} twisted by -delta; vanishes for
    i > r (returned as a zero table only when ``permissive``)."""
    ring = pres.ring
    if ring.has_parameter:
        raise InvalidArgumentError(
            "local cohomology tables need a parameter-free ring; specialize first")
    r = ring.num_positive
    if i < 0:
        raise IndexError("negative cohomological index")
    if i > r:
        if permissive:
            return zero_table(window)
        raise IndexError("cohomological index %d exceeds the variable count %d" % (i, r))
    res = free_resolution(pres, minimize=False)
    ext = _ext_from_resolution(res, r - i)
    return _dual_table(ext, window, ring.delta)


def _dual_table(ext_pres, window, delta):
    lo, hi = window
    inner = hilbert_function(ext_pres, (-hi - delta, -lo - delta))
    dims = {nu: inner.dims[-nu - delta] for nu in range(lo, hi + 1)}
    return HilbertTable(window, dims)


def local_cohomology_tables(pres, window, permissive=False):
    """All tables H^0..H^r at once, sharing one resolution."""
    ring = pres.ring
    if ring.has_parameter:
        raise InvalidArgumentError(
            "local cohomology tables need a parameter-free ring; specialize first")
    r = ring.num_positive
    res = free_resolution(pres, minimize=False)
    out = []
    for i in range(r + 1):
        ext = _ext_from_resolution(res, r - i)
        out.append(_dual_table(ext, window, ring.delta))
    return out
