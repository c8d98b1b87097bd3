"""Term orders on monomials and module orders on free-module terms.

Orders are exposed as key functions producing tuples; bigger key means
bigger monomial.  All orders here are global (1 is minimal) and
multiplicative, so sorted term lists stay sorted under term multiplication.

Module monomials are pairs ``(monomial, component)``.  The standing module
order is term-over-position (lower component index wins ties); syzygy levels
use the order induced by the leading terms of a marked basis, which is what
makes iterated syzygy computation canonical.
"""

from .errors import InvalidArgumentError, OrderMismatchError
from .rings import mon_mul

LT, EQ, GT = -1, 0, 1


class TermOrder:
    """One of lex, grevlex, weight-refined, or the x-over-t block order.

    The block order compares positive-degree parts first (grevlex), then the
    parameter exponent, so every monomial in t alone sits below every
    monomial containing an x-variable; with a parameter present the grevlex
    order here has the same elimination property by construction.
    """

    __slots__ = ("kind", "omega", "tiebreak")

    def __init__(self, kind, omega=None, tiebreak=None):
        if kind not in ("lex", "grevlex", "weighted", "block-x-over-t"):
            raise InvalidArgumentError("unknown term order kind %r" % (kind,))
        self.kind = kind
        self.omega = tuple(omega) if omega is not None else None
        self.tiebreak = tiebreak
        if kind == "weighted":
            if self.omega is None:
                raise InvalidArgumentError("weight-refined order needs a weight vector")
            if any(w < 0 for w in self.omega):
                raise InvalidArgumentError("order weights must be nonnegative")

    @staticmethod
    def lex():
        return TermOrder("lex")

    @staticmethod
    def grevlex():
        return TermOrder("grevlex")

    @staticmethod
    def weighted(omega, tiebreak=None):
        return TermOrder("weighted", omega, tiebreak or TermOrder.grevlex())

    @staticmethod
    def block_x_over_t():
        return TermOrder("block-x-over-t")

    def key(self, ring, mon):
        r = len(ring.weights)
        if self.kind == "lex":
            return mon
        if self.kind in ("grevlex", "block-x-over-t"):
            if ring.has_parameter:
                x = mon[:r]
                return (ring.degree(mon), tuple(-e for e in reversed(x)), mon[r])
            return (ring.degree(mon), tuple(-e for e in reversed(mon)))
        # weight-refined
        if len(self.omega) != r:
            raise OrderMismatchError(
                "weight vector has %d entries for a ring with %d positive-degree variables"
                % (len(self.omega), r))
        w = sum(o * e for o, e in zip(self.omega, mon))
        return (w,) + tuple(self.tiebreak.key(ring, mon))

    def describe(self):
        if self.kind == "weighted":
            return "weights:%s" % ",".join(str(w) for w in self.omega)
        return self.kind

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.kind == other.kind
            and self.omega == other.omega
            and self.tiebreak == other.tiebreak
        )

    def __hash__(self):
        return hash((self.kind, self.omega, self.tiebreak))

    def __repr__(self):
        return "TermOrder(%s)" % self.describe()


def order_from_string(text):
    """Parse ``lex``, ``grevlex``, ``block-x-over-t`` or ``weights:1,2,2``."""
    text = text.strip()
    if text == "lex":
        return TermOrder.lex()
    if text == "grevlex":
        return TermOrder.grevlex()
    if text == "block-x-over-t":
        return TermOrder.block_x_over_t()
    if text.startswith("weights:"):
        try:
            omega = [int(s) for s in text[len("weights:"):].split(",")]
        except ValueError:
            raise InvalidArgumentError("bad weight list in order %r" % text)
        return TermOrder.weighted(omega)
    raise InvalidArgumentError("unknown term order %r" % text)


def compare_monomials(ring, order, a, b):
    """Total multiplicative comparison; returns LT, EQ or GT."""
    ka, kb = order.key(ring, a), order.key(ring, b)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


class ModuleOrder:
    """Base for orders on (monomial, component) pairs."""

    def key(self, mon, comp):
        raise NotImplementedError


class TOPOrder(ModuleOrder):
    """Term over position: ring order first, lower component wins ties."""

    __slots__ = ("ring", "term_order")

    def __init__(self, ring, term_order):
        self.ring = ring
        self.term_order = term_order

    def key(self, mon, comp):
        return (self.term_order.key(self.ring, mon), -comp)

    def __eq__(self, other):
        return (
            isinstance(other, TOPOrder)
            and self.ring == other.ring
            and self.term_order == other.term_order
        )

    def __hash__(self):
        return hash(("TOP", self.ring, self.term_order))


class SchreyerOrder(ModuleOrder):
    """Order induced by the leading terms of a marked basis living in a
    parent module: compare images of leading terms, then position."""

    __slots__ = ("parent", "leads")

    def __init__(self, parent, leads):
        self.parent = parent
        self.leads = tuple(leads)

    def key(self, mon, comp):
        pm, pc = self.leads[comp]
        return (self.parent.key(mon_mul(mon, pm), pc), -comp)


class BlockTOPOrder(ModuleOrder):
    """Elimination order on components: the first ``split`` components sit
    above the rest; within each block, term over position."""

    __slots__ = ("ring", "term_order", "split")

    def __init__(self, ring, term_order, split):
        self.ring = ring
        self.term_order = term_order
        self.split = split

    def key(self, mon, comp):
        return (1 if comp < self.split else 0, self.term_order.key(self.ring, mon), -comp)
