"""Graded polynomial rings with positive weights and an optional degree-0
parameter variable, plus exact sparse polynomials.

Monomials are plain exponent tuples of length ``ring.nvars``; when the ring
has a parameter, its exponent occupies the last slot and contributes nothing
to the degree.  Polynomial term lists are kept sorted descending under the
ring's canonical order (grevlex on the positive-degree variables, parameter
exponent as final tiebreaker), which makes equality structural.
"""

from fractions import Fraction

from .errors import InvalidArgumentError, InvalidGradingError, RingMismatchError
from .fields import QQ

# ---------- monomial helpers (monomials are bare exponent tuples) ----------


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mon_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mon_is_one(a):
    return all(x == 0 for x in a)


class GradedRing:
    """k[x_1..x_r] with deg(x_i) = weights[i] > 0, optionally extended by a
    parameter variable of degree 0."""

    __slots__ = ("weights", "has_parameter", "field", "names", "delta", "nvars")

    def __init__(self, weights, has_parameter=False, field=QQ, names=None):
        weights = tuple(weights)
        if not weights:
            raise InvalidGradingError("at least one positive-degree variable required")
        for w in weights:
            if not isinstance(w, int) or w <= 0:
                raise InvalidGradingError("variable weights must be positive integers, got %r" % (w,))
        self.weights = weights
        self.has_parameter = bool(has_parameter)
        self.field = field
        r = len(weights)
        if names is None:
            names = tuple("x%d" % (i + 1) for i in range(r))
        else:
            names = tuple(names)
            if len(names) != r:
                raise InvalidArgumentError("expected %d variable names, got %d" % (r, len(names)))
        if self.has_parameter:
            names = names + ("t",)
        self.names = names
        self.delta = sum(weights)
        self.nvars = r + (1 if self.has_parameter else 0)

    # r in the grading sense: variables of positive degree
    @property
    def num_positive(self):
        return len(self.weights)

    def degree(self, mon):
        return sum(w * e for w, e in zip(self.weights, mon))

    def canonical_key(self, mon):
        """Grevlex on the positive-degree part, parameter exponent last."""
        r = len(self.weights)
        if self.has_parameter:
            x = mon[:r]
            return (self.degree(mon), tuple(-e for e in reversed(x)), mon[r])
        return (self.degree(mon), tuple(-e for e in reversed(mon)))

    def one_monomial(self):
        return (0,) * self.nvars

    def var_monomial(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return tuple(e)

    def parameter_index(self):
        if not self.has_parameter:
            raise InvalidArgumentError("ring has no parameter variable")
        return self.nvars - 1

    # ---------- conversions ----------

    def with_parameter(self):
        if self.has_parameter:
            return self
        return GradedRing(self.weights, True, self.field, self.names)

    def without_parameter(self):
        if not self.has_parameter:
            return self
        return GradedRing(self.weights, False, self.field, self.names[:-1])

    def with_field(self, field):
        names = self.names[:-1] if self.has_parameter else self.names
        return GradedRing(self.weights, self.has_parameter, field, names)

    # ---------- polynomial constructors ----------

    def poly(self, terms):
        """Build a polynomial from an iterable or dict of (monomial, coeff)."""
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for mon, c in terms:
            mon = tuple(mon)
            if len(mon) != self.nvars:
                raise InvalidArgumentError("monomial %r has wrong length for ring" % (mon,))
            c = self.field.coerce(c)
            if mon in acc:
                acc[mon] = self.field.add(acc[mon], c)
            else:
                acc[mon] = c
        items = [(m, c) for m, c in acc.items() if c != self.field.zero]
        items.sort(key=lambda mc: self.canonical_key(mc[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def variable(self, i):
        return Polynomial(self, ((self.var_monomial(i), self.field.one),))

    def parameter(self):
        return self.variable(self.parameter_index())

    def parse(self, text):
        from .parser import parse_polynomial

        return parse_polynomial(self, text)

    # ---------- structural identity ----------

    def __eq__(self, other):
        return (
            isinstance(other, GradedRing)
            and self.weights == other.weights
            and self.has_parameter == other.has_parameter
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.weights, self.has_parameter, self.field, self.names))

    def __repr__(self):
        f = repr(self.field)
        return "GradedRing(vars=%s, weights=%s, field=%s)" % (
            ",".join(self.names), list(self.weights), f)


def make_ring(weights, has_parameter=False, field=QQ, names=None):
    """Construct a graded polynomial ring; weights must be positive."""
    return GradedRing(weights, has_parameter, field, names)


class Polynomial:
    """Sparse polynomial with exact coefficients; terms sorted descending
    under the ring's canonical order, no zero coefficients, no duplicates."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and mon_is_one(self.terms[0][0]))

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero
        if not self.is_constant():
            raise InvalidArgumentError("not a constant polynomial")
        return self.terms[0][1]

    def monomials(self):
        return [m for m, _ in self.terms]

    def coefficient(self, mon):
        mon = tuple(mon)
        for m, c in self.terms:
            if m == mon:
                return c
        return self.ring.field.zero

    def degrees(self):
        return sorted({self.ring.degree(m) for m, _ in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """Weighted degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if not degs:
            raise InvalidArgumentError("degree of the zero polynomial")
        if len(degs) > 1:
            raise InvalidArgumentError("polynomial is not homogeneous")
        return degs[0]

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        return self.ring.poly(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field.coerce(other)
            if c == self.ring.field.zero:
                return self.ring.zero()
            mul = self.ring.field.mul
            return Polynomial(self.ring, tuple((m, mul(cf, c)) for m, cf in self.terms))
        self._check(other)
        field = self.ring.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mon_mul(m1, m2)
                c = field.mul(c1, c2)
                if m in acc:
                    acc[m] = field.add(acc[m], c)
                else:
                    acc[m] = c
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InvalidArgumentError("negative polynomial power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        return self * c

    def monic(self):
        if not self.terms:
            return self
        lead = self.terms[0][1]
        inv = self.ring.field.inv(lead)
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((m, mul(c, inv)) for m, c in self.terms))

    def mul_term(self, mon, coeff):
        mon = tuple(mon)
        field = self.ring.field
        coeff = field.coerce(coeff)
        if coeff == field.zero:
            return self.ring.zero()
        # multiplication by a single term preserves the canonical sorting
        return Polynomial(
            self.ring,
            tuple((mon_mul(m, mon), field.mul(c, coeff)) for m, c in self.terms),
        )

    def specialize_parameter(self, value, target_ring=None):
        """Substitute the parameter variable by a field element."""
        ring = self.ring
        ti = ring.parameter_index()
        target = target_ring if target_ring is not None else ring.without_parameter()
        field = target.field
        value = field.coerce(value)
        acc = []
        for m, c in self.terms:
            acc.append((m[:ti], field.mul(field.coerce(c), field.pow(value, m[ti]))))
        return target.poly(acc)

    def extend_with_parameter(self, target_ring=None):
        """View a parameter-free polynomial inside the parameter ring."""
        target = target_ring if target_ring is not None else self.ring.with_parameter()
        return target.poly([(m + (0,), c) for m, c in self.terms])

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for m, c in self.terms:
            mono = self._monomial_str(m)
            cs = field.coeff_str(c)
            if mono == "1":
                body = cs
                negative = cs.startswith("-")
                if negative:
                    body = cs[1:]
            else:
                negative = cs.startswith("-")
                mag = cs[1:] if negative else cs
                body = mono if mag == "1" else "%s*%s" % (mag, mono)
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append(" - " + body if negative else " + " + body)
        return "".join(parts)

    def _monomial_str(self, m):
        names = self.ring.names
        bits = []
        for i, e in enumerate(m):
            if e == 0:
                continue
            bits.append(names[i] if e == 1 else "%s^%d" % (names[i], e))
        return "*".join(bits) if bits else "1"

    def __repr__(self):
        return "<poly %s>" % self
