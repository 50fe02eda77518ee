"""Module signatures over R^m and the two supported module orders.

A signature is a plain ``(index, key)`` pair standing for the module
monomial x^a * e_index, with ``key`` the term-order key of x^a.  Keeping
the bare tuple keeps signature arithmetic allocation-free; pretty forms
exist only for rendering.
"""

from __future__ import annotations

from operator import add as _iadd

from .errors import DimensionError
from .ground import TermOrder
from .poly import Polynomial

# syzygy record origins
PRINCIPAL_INPUT = "principal-input"
KOSZUL = "koszul"
ZERO_REDUCTION = "zero-reduction"

POT = "pot"
SCHREYER = "schreyer"


def sig_make(index: int, mono, order: TermOrder):
    return (index, order.key(tuple(mono)))


def sig_mul(s, tkey):
    """x^t * s, with t given as an order key."""
    return (s[0], tuple(map(_iadd, s[1], tkey)))


def sig_divides(s, t, order: TermOrder) -> bool:
    """Does s divide t as module monomials (same index, monomial divides)."""
    return s[0] == t[0] and order.key_divides(s[1], t[1])


def render_sig(s, ring) -> str:
    mono = ring.order.unkey(s[1])
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(ring.names[i])
        elif e > 1:
            parts.append("%s^%d" % (ring.names[i], e))
    parts.append("e%d" % (s[0] + 1))
    return "*".join(parts)


class ModuleOrder:
    """POT (position over term) or a Schreyer-style weighted comparison.

    ``key`` maps a signature to a tuple whose lexicographic order realizes
    the module order; it is injective, so equal keys mean equal signatures.
    """

    __slots__ = ("kind", "nfields", "_rank", "_weights")

    def __init__(self, kind: str, nfields: int, precedence=None, weights=None):
        if nfields < 1:
            raise DimensionError("module must have at least one component")
        self.kind = kind
        self.nfields = nfields
        if kind == POT:
            if precedence is None:
                precedence = tuple(range(nfields))
            else:
                precedence = tuple(precedence)
                if sorted(precedence) != list(range(nfields)):
                    raise ValueError("precedence must be a permutation of component indices")
            rank = [0] * nfields
            for pos, idx in enumerate(precedence):
                rank[idx] = pos
            self._rank = tuple(rank)
            self._weights = None
        elif kind == SCHREYER:
            if weights is None or len(weights) != nfields:
                raise DimensionError("need one weight key per component")
            self._weights = tuple(weights)
            self._rank = None
        else:
            raise ValueError("unknown module order %r" % (kind,))

    @classmethod
    def pot(cls, nfields: int, precedence=None) -> "ModuleOrder":
        return cls(POT, nfields, precedence=precedence)

    @classmethod
    def schreyer(cls, lead_keys) -> "ModuleOrder":
        """Weights are the term-order keys of the input lead monomials."""
        return cls(SCHREYER, len(lead_keys), weights=tuple(lead_keys))

    def key(self, s):
        i, mk = s
        if self.kind == POT:
            # higher precedence components must sort above everything below them
            return (-self._rank[i],) + mk
        # weighted product decides; equal products give the larger index first
        return tuple(map(_iadd, mk, self._weights[i])) + (-i,)

    def cmp(self, s, t) -> int:
        ks, kt = self.key(s), self.key(t)
        if ks < kt:
            return -1
        if ks > kt:
            return 1
        return 0

    def sig_degree(self, s, order) -> int:
        """Total degree of the module monomial; weights count under schreyer."""
        d = order.key_deg(s[1])
        if self.kind == SCHREYER:
            d += order.key_deg(self._weights[s[0]])
        return d

    def __repr__(self):
        return "ModuleOrder(%r, %d)" % (self.kind, self.nfields)


class LabeledPoly:
    """A basis member: polynomial plus the lead signature of its module label.

    ``vector`` carries the full module representative when the engine runs
    in full-vector mode, as a tuple of m polynomials with sum(u_i * f_i)
    equal to ``poly``.  ``sig_lc`` is the lead coefficient of the label,
    fixed to 1 when vectors are not tracked.
    """

    __slots__ = ("serial", "sig", "sig_lc", "poly", "vector")

    def __init__(self, serial, sig, sig_lc, poly, vector=None):
        self.serial = serial
        self.sig = sig
        self.sig_lc = sig_lc
        self.poly = poly
        self.vector = vector

    @property
    def lead_key(self):
        return self.poly.terms[0][0] if self.poly.terms else None

    def __repr__(self):
        return "<lp #%s sig=(%d,%s) %r>" % (self.serial, self.sig[0], list(self.sig[1]), str(self.poly))


class SyzygyRecord:
    """Lead signature of a known module element with zero polynomial part."""

    __slots__ = ("serial", "sig", "origin")

    lead_key = None  # uniform shape with LabeledPoly for order comparisons
    poly = None

    def __init__(self, serial, sig, origin):
        self.serial = serial
        self.sig = sig
        self.origin = origin

    def __repr__(self):
        return "<syz #%s sig=(%d,%s) %s>" % (self.serial, self.sig[0], list(self.sig[1]), self.origin)


def vector_lead(vector, mo: ModuleOrder):
    """Exact lead signature and coefficient of a module vector, or None if zero."""
    best = None
    best_key = None
    for i, comp in enumerate(vector):
        if comp.terms:
            s = (i, comp.terms[0][0])
            k = mo.key(s)
            if best_key is None or k > best_key:
                best_key = k
                best = (s, comp.terms[0][1])
    return best


def principal_syzygy_sig(fi_lead_key, i, fj_lead_key, j, mo: ModuleOrder):
    """Lead signature of f_j*e_i - f_i*e_j; exact because the indices differ."""
    a = (i, fj_lead_key)
    b = (j, fi_lead_key)
    return a if mo.key(a) > mo.key(b) else b


def koszul_pair_sig(a: LabeledPoly, b: LabeledPoly, mo: ModuleOrder):
    """Lead signature of lpp-scale cancellation between two basis members.

    For members (u, f) and (v, g) the relation g*u - f*v maps to zero, so
    its lead is a syzygy signature.  The candidates are sig(a)*lpp(g) and
    sig(b)*lpp(f); when they differ the larger wins outright.  On a tie the
    label coefficients decide, falling back to building the difference
    vector when both are tracked; otherwise the record is skipped, which
    only costs rejection power.
    """
    f = a.poly
    g = b.poly
    cand_a = sig_mul(a.sig, g.terms[0][0])
    cand_b = sig_mul(b.sig, f.terms[0][0])
    if cand_a != cand_b:
        return cand_a if mo.key(cand_a) > mo.key(cand_b) else cand_b
    field = f.ring.field
    if field.sub(field.mul(g.terms[0][1], a.sig_lc), field.mul(f.terms[0][1], b.sig_lc)) != 0:
        return cand_a
    if a.vector is None or b.vector is None:
        return None
    diff = [g * ua - f * ub for ua, ub in zip(a.vector, b.vector)]
    led = vector_lead(diff, mo)
    return led[0] if led else None


def principal_syzygies(inputs, mo: ModuleOrder):
    """Lead signatures of all pairwise input syzygies, in (i, j) order, i < j.

    ``inputs`` are the nonzero generators in component order.
    """
    sigs = []
    leads = [f.terms[0][0] for f in inputs]
    for i in range(len(inputs)):
        for j in range(i + 1, len(inputs)):
            sigs.append(principal_syzygy_sig(leads[i], i, leads[j], j, mo))
    return sigs


def koszul_syzygy(new: LabeledPoly, i: int, f_i: Polynomial, mo: ModuleOrder):
    """Lead signature of h*e_i - f_i*w for the freshly inserted (w, h), or None.

    The two candidate leads are lpp(h)*e_i and lpp(f_i)*sig(w); when they
    differ as module monomials the larger one is the exact lead.  When they
    coincide the coefficients decide: with a tracked vector we can compare
    them (and fall back to building the vector difference outright if they
    cancel), without one we skip the record.  A skipped record only costs
    rejection power.
    """
    h = new.poly
    cand_a = (i, h.terms[0][0])
    cand_b = sig_mul(new.sig, f_i.terms[0][0])
    if cand_a != cand_b:
        return cand_a if mo.key(cand_a) > mo.key(cand_b) else cand_b
    if new.vector is None:
        return None
    field = h.ring.field
    if field.sub(h.terms[0][1], field.mul(f_i.terms[0][1], new.sig_lc)) != 0:
        return cand_a
    # exact but rare path: the candidate leads cancel, build the vector
    diff = []
    for j, comp in enumerate(new.vector):
        part = comp * (-f_i)
        if j == i:
            part = part + h
        diff.append(part)
    led = vector_lead(diff, mo)
    return led[0] if led else None
