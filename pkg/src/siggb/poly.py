"""Sparse multivariate polynomials over a prime field.

A polynomial stores its terms as a tuple of ``(key, coeff)`` pairs in
strictly descending key order, where ``key`` is the term-order key of the
monomial (see :mod:`siggb.ground`).  Coefficients are canonical residues
and never zero.  The exponent vector of a term is recovered on demand via
``order.unkey``; hot paths never materialize it.
"""

from __future__ import annotations

from heapq import heappush, heappop
from operator import add as _iadd

from .errors import DimensionError, DivisibilityError, EmptyPolynomialError
from .ground import PrimeField, TermOrder


class PolyRing:
    """A polynomial ring: prime field + named variables + term order."""

    __slots__ = ("field", "names", "order")

    def __init__(self, field, names, order: TermOrder):
        if isinstance(field, int):
            field = PrimeField(field)
        names = tuple(names)
        if len(names) != order.nvars:
            raise DimensionError(
                "order is over %d variables but %d names given" % (order.nvars, len(names))
            )
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for n in names:
            if not n.isidentifier():
                raise ValueError("bad variable name %r" % (n,))
        self.field = field
        self.names = names
        self.order = order

    @property
    def nvars(self) -> int:
        return len(self.names)

    # -- constructors --------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c = self.field.normalize(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, ((self.order.one_key, c),))

    def gen(self, i: int) -> "Polynomial":
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((self.order.key(mono), 1),))

    def from_terms(self, pairs) -> "Polynomial":
        """Build from (monomial, coeff) pairs; combines duplicates, drops zeros."""
        acc = {}
        key = self.order.key
        p = self.field.p
        for mono, c in pairs:
            k = key(tuple(mono))
            acc[k] = (acc.get(k, 0) + c) % p
        terms = tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))
        return Polynomial(self, terms)

    def from_key_terms(self, terms) -> "Polynomial":
        """Trusted constructor: terms already (key, coeff), descending, nonzero."""
        return Polynomial(self, tuple(terms))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return "PolyRing(%r, %s, %s)" % (self.field, ",".join(self.names), self.order.kind)


def _same_ring(f: "Polynomial", g: "Polynomial"):
    if f.ring is not g.ring and f.ring != g.ring:
        raise DimensionError("operands live in different rings")


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = terms  # tuple of (key, coeff), strictly descending keys

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_key(self):
        if not self.terms:
            raise EmptyPolynomialError("zero polynomial has no lead term")
        return self.terms[0][0]

    @property
    def lead_coeff(self) -> int:
        if not self.terms:
            raise EmptyPolynomialError("zero polynomial has no lead term")
        return self.terms[0][1]

    def lead(self):
        """(monomial, coeff) of the lead term; raises on the zero polynomial."""
        if not self.terms:
            raise EmptyPolynomialError("zero polynomial has no lead term")
        k, c = self.terms[0]
        return self.ring.order.unkey(k), c

    def lead_or_none(self):
        if not self.terms:
            return None
        k, c = self.terms[0]
        return self.ring.order.unkey(k), c

    def total_degree(self) -> int:
        """Degree of the largest term, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.order.key_deg
        return max(deg(k) for k, _ in self.terms)

    def monomials(self):
        unkey = self.ring.order.unkey
        return [(unkey(k), c) for k, c in self.terms]

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        _same_ring(self, other)
        return Polynomial(self.ring, _merge(self.ring.field.p, self.terms, other.terms))

    def __sub__(self, other):
        _same_ring(self, other)
        return self + (-other)

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, tuple((k, p - c) for k, c in self.terms))

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial(self.ring, tuple((k, c * cf % p) for k, cf in self.terms))

    def shift(self, tkey, c: int) -> "Polynomial":
        """self * c * x^t with t given as an order key."""
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple((tuple(map(_iadd, k, tkey)), c * cf % p) for k, cf in self.terms),
        )

    def __mul__(self, other):
        _same_ring(self, other)
        p = self.ring.field.p
        acc = {}
        for ka, ca in self.terms:
            for kb, cb in other.terms:
                k = tuple(map(_iadd, ka, kb))
                acc[k] = (acc.get(k, 0) + ca * cb) % p
        return Polynomial(self.ring, tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True)))

    def monic(self) -> "Polynomial":
        if not self.terms:
            raise EmptyPolynomialError("cannot normalize the zero polynomial")
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    # -- comparisons and rendering ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.terms == self.terms
            and (other.ring is self.ring or other.ring == self.ring)
        )

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return "<poly %s>" % render_poly(self)


def render_poly(f: Polynomial) -> str:
    """Canonical text form: coefficient first, `*name^e` factors, ' + ' joins.

    Coefficients are canonical residues and always printed, so the output
    is stable enough to diff byte for byte.
    """
    if not f.terms:
        return "0"
    names = f.ring.names
    unkey = f.ring.order.unkey
    chunks = []
    for k, c in f.terms:
        factors = [str(c)]
        for i, e in enumerate(unkey(k)):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append("%s^%d" % (names[i], e))
        chunks.append("*".join(factors))
    return " + ".join(chunks)


def _merge(p: int, ta, tb):
    """Sum of two descending term lists, coefficients mod p."""
    out = []
    push = out.append
    i = j = 0
    na, nb = len(ta), len(tb)
    while i < na and j < nb:
        ka, ca = ta[i]
        kb, cb = tb[j]
        if ka > kb:
            push(ta[i])
            i += 1
        elif ka < kb:
            push(tb[j])
            j += 1
        else:
            c = (ca + cb) % p
            if c:
                push((ka, c))
            i += 1
            j += 1
    if i < na:
        out.extend(ta[i:])
    else:
        out.extend(tb[j:])
    return tuple(out)


def add_scaled(f: Polynomial, g: Polynomial, tkey, c: int) -> Polynomial:
    """f + c * x^t * g in one merge; the workhorse of every reducer."""
    p = f.ring.field.p
    c %= p
    if c == 0 or not g.terms:
        return f
    tb = tuple((tuple(map(_iadd, k, tkey)), c * cf % p) for k, cf in g.terms)
    return Polynomial(f.ring, _merge(p, f.terms, tb))


def term_scale(term, f: Polynomial) -> Polynomial:
    """(monomial, coeff) * f."""
    mono, c = term
    return f.shift(f.ring.order.key(tuple(mono)), c)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial t/lpp(f)*f - lc(f)/lc(g) * t/lpp(g)*g, t = lcm of the leads.

    Lead terms cancel by construction.  Not normalized to monic.
    """
    _same_ring(f, g)
    if not f.terms or not g.terms:
        raise EmptyPolynomialError("spoly needs two nonzero polynomials")
    order = f.ring.order
    field = f.ring.field
    kf, cf = f.terms[0]
    kg, cg = g.terms[0]
    t = order.key_lcm(kf, kg)
    left = f.shift(order.key_div(t, kf), 1)
    return add_scaled(left, g, order.key_div(t, kg), field.neg(field.div(cf, cg)))


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Full remainder of f under division by ``basis`` (list order breaks ties).

    Every term of the result is irreducible by every basis lead.  Zero
    members of ``basis`` are skipped.
    """
    ring = f.ring
    for g in basis:
        _same_ring(f, g)
    p = ring.field.p
    order = ring.order
    divides = order.key_divides
    reducers = []
    for g in basis:
        if g.terms:
            kg, cg = g.terms[0]
            reducers.append((kg, ring.field.inv(cg), g.terms))
    acc = {}
    heap = []
    for k, c in f.terms:
        acc[k] = c
        heappush(heap, (tuple(-x for x in k), k))
    out = []
    while heap:
        _, k = heappop(heap)
        c = acc.pop(k, 0)
        if not c:
            continue
        hit = None
        for kg, inv_cg, gterms in reducers:
            if divides(kg, k):
                hit = (kg, inv_cg, gterms)
                break
        if hit is None:
            out.append((k, c))
            continue
        kg, inv_cg, gterms = hit
        tk = order.key_div(k, kg)
        cf = c * inv_cg % p
        for kk, cc in gterms[1:]:
            k2 = tuple(map(_iadd, kk, tk))
            prev = acc.get(k2)
            if prev is None:
                acc[k2] = -cf * cc % p
                heappush(heap, (tuple(-x for x in k2), k2))
            else:
                acc[k2] = (prev - cf * cc) % p
    return Polynomial(ring, tuple(out))
