"""Exact Hilbert functions of graded module presentations.

Counting standard monomials degree by degree is done through the classical
numerator recursion for monomial-ideal Hilbert series: the free numerator is
built by splitting off one generator at a time, then expanded against the
weighted denominator on the requested window.  When a degree-0 parameter
variable is present, the counts per positive-degree monomial are the number
of parameter powers that stay standard, which is finite exactly when the
parameter-free generator supports eventually cover everything; otherwise the
quotient has infinite dimension in some degree and we refuse.
"""

from .errors import InfiniteDimensionError, InvalidArgumentError
from .rings import mon_divides

# ---------- monomial ideal numerator recursion ----------


def _minimalize(gens):
    gens = sorted(set(gens))
    out = []
    for g in gens:
        if not any(mon_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def _colon_mon(gens, m):
    return _minimalize(tuple(tuple(max(0, a - b) for a, b in zip(g, m)) for g in gens))


def _numerator(gens, weights, memo):
    """dict degree -> coefficient of the Hilbert series numerator of R/<gens>."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    if any(all(e == 0 for e in g) for g in gens):
        return {}
    cached = memo.get(gens)
    if cached is not None:
        return cached
    pivot = gens[-1]
    rest = gens[:-1]
    qa = _numerator(rest, weights, memo)
    qb = _numerator(_colon_mon(rest, pivot), weights, memo)
    d = sum(w * e for w, e in zip(weights, pivot))
    out = dict(qa)
    for k, c in qb.items():
        out[k + d] = out.get(k + d, 0) - c
    out = {k: c for k, c in out.items() if c != 0}
    memo[gens] = out
    return out


def monomial_quotient_counts(weights, gens, max_degree):
    """Hilbert function of k[x]/<monomial gens> in degrees 0..max_degree."""
    if max_degree < 0:
        return []
    num = _numerator(tuple(tuple(g) for g in gens), tuple(weights), {})
    series = [0] * (max_degree + 1)
    for k, c in num.items():
        if 0 <= k <= max_degree:
            series[k] += c
    for w in weights:
        for d in range(w, max_degree + 1):
            series[d] += series[d - w]
    return series


def monomial_quotient_dimension(num_vars, gens):
    """Krull dimension of k[x]/<monomial gens>: the largest coordinate
    subspace meeting no generator support."""
    supports = [frozenset(i for i, e in enumerate(g) if e > 0) for g in gens]
    if any(not s for s in supports):
        return -1
    best = 0
    for mask in range(1 << num_vars):
        subset = {i for i in range(num_vars) if mask >> i & 1}
        if all(not s <= subset for s in supports):
            best = max(best, len(subset))
    return best


def monomials_of_degree(ring, degree):
    """All monomials of the given weighted degree (parameter-free rings)."""
    if ring.has_parameter:
        raise InvalidArgumentError("monomial enumeration needs a parameter-free ring")
    weights = ring.weights

    def rec(i, remaining):
        if i == len(weights) - 1:
            if remaining % weights[i] == 0:
                yield (remaining // weights[i],)
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            for rest in rec(i + 1, remaining - w * e):
                yield (e,) + rest

    if degree < 0:
        return []
    return [m for m in rec(0, degree)]


class HilbertTable:
    """Degree -> dimension map on a finite window, values exact."""

    __slots__ = ("window", "dims")

    def __init__(self, window, dims):
        lo, hi = window
        self.window = (lo, hi)
        self.dims = {nu: dims.get(nu, 0) for nu in range(lo, hi + 1)}

    def __getitem__(self, nu):
        return self.dims[nu]

    def is_zero(self):
        return all(v == 0 for v in self.dims.values())

    def nonzero_degrees(self):
        return [nu for nu, d in sorted(self.dims.items()) if d != 0]

    def __eq__(self, other):
        return (
            isinstance(other, HilbertTable)
            and self.window == other.window
            and self.dims == other.dims
        )

    def to_json_dict(self):
        return {
            "window": [self.window[0], self.window[1]],
            "dims": {str(nu): self.dims[nu] for nu in range(self.window[0], self.window[1] + 1)},
        }

    def __repr__(self):
        nz = {nu: d for nu, d in sorted(self.dims.items()) if d}
        return "HilbertTable(%s on [%d, %d])" % (nz, self.window[0], self.window[1])


def zero_table(window):
    return HilbertTable(window, {})


def hilbert_from_leads(ring, rank, twists, leads, window):
    """Hilbert table of ambient/<monomial module generated by leads> where
    ``leads`` is a list of (monomial, component) pairs."""
    lo, hi = window
    if lo > hi:
        raise InvalidArgumentError("empty window [%d, %d]" % (lo, hi))
    weights = ring.weights
    r = ring.num_positive
    per_comp = [[] for _ in range(rank)]
    for mon, comp in leads:
        per_comp[comp].append(mon)
    dims = {}
    for comp in range(rank):
        shift = twists[comp]
        top = hi - shift
        if top < 0:
            continue
        gens = per_comp[comp]
        if not ring.has_parameter:
            counts = monomial_quotient_counts(weights, gens, top)
            for d, c in enumerate(counts):
                nu = d + shift
                if lo <= nu <= hi and c:
                    dims[nu] = dims.get(nu, 0) + c
            continue
        # parameter present: for a positive-degree monomial m the number of
        # standard parameter powers is the least t-exponent among generators
        # whose x-part divides m; sum over b of the quotients by the x-part
        # ideals of generators with t-exponent <= b
        tmax = max((g[r] for g in gens), default=0)
        tail_counts = monomial_quotient_counts(weights, [g[:r] for g in gens], top)
        if any(tail_counts[d] != 0 for d in range(max(0, lo - shift), top + 1)):
            raise InfiniteDimensionError(
                "quotient has infinite dimension per degree; specialize or "
                "eliminate the parameter first")
        for b in range(tmax):
            level = [g[:r] for g in gens if g[r] <= b]
            counts = monomial_quotient_counts(weights, level, top)
            for d, c in enumerate(counts):
                nu = d + shift
                if lo <= nu <= hi and c:
                    dims[nu] = dims.get(nu, 0) + c
    return HilbertTable(window, dims)
