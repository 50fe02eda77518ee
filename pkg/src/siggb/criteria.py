"""Rewrite criteria: partial orders on labeled polynomials and the tests
that prune critical pairs.

Everything here compares basis members of a duck-typed shape: ``.serial``,
``.sig`` and ``.lead_key`` (None for syzygy records and zero reductions).
The rewritable test never rewrites anything by itself; it only reports a
witness that justifies dropping a pair.
"""

from __future__ import annotations

from operator import add as _iadd

from .errors import ConfigError
from .sig import LabeledPoly, ZERO_REDUCTION, sig_mul

F5 = "f5"
RATIO = "ratio"
EARLIER_UNSOUND = "earlier-unsound"

ORDER_KINDS = (F5, RATIO, EARLIER_UNSOUND)

SYZYGY_DIVISOR = "syzygy-divisor"
ORDER_SMALLER = "order-smaller"


class RewriteWitness:
    __slots__ = ("serial", "sig", "reason")

    def __init__(self, serial, sig, reason):
        self.serial = serial
        self.sig = sig
        self.reason = reason

    def __repr__(self):
        return "<witness #%s %s>" % (self.serial, self.reason)


def po_less(a, b, kind: str, order) -> bool:
    """Strict partial order used by the rewritable criterion.

    f5: syzygies sit below nonzero elements; within one group the later
    arrival is smaller.  ratio: elements of equal component index compare
    by lpp(f)/sig as a formal ratio (cross multiplied, the zero polynomial
    counting as ratio zero), later arrival breaking exact ties; different
    components are incomparable.  earlier-unsound deliberately flips the
    f5 serial rule and violates admissibility; it exists as a negative
    control and must never drive production runs.
    """
    if kind == RATIO:
        if a.sig[0] != b.sig[0]:
            return False
        la, lb = a.lead_key, b.lead_key
        if la is None or lb is None:
            if la is None and lb is None:
                return a.serial > b.serial
            return la is None
        left = tuple(map(_iadd, la, b.sig[1]))
        right = tuple(map(_iadd, lb, a.sig[1]))
        if left != right:
            return left < right
        return a.serial > b.serial
    a0 = a.lead_key is None
    b0 = b.lead_key is None
    if a0 != b0:
        return a0
    if kind == F5:
        return a.serial > b.serial
    if kind == EARLIER_UNSOUND:
        return a.serial < b.serial
    raise ConfigError("unknown partial order %r" % (kind,))


def gen_rewritable(tkey, a, basis, kind: str):
    """Witness that x^t * a is rewritable by some smaller basis member.

    Searches syzygy records first (any syzygy whose signature divides wins
    outright, since a carries a nonzero polynomial), then nonzero members
    in serial order.  Deterministic, so rejection statistics reproduce.
    """
    order = a.poly.ring.order
    qsig = sig_mul(a.sig, tkey)
    idx, qk = qsig
    divides = order.key_divides
    for rec in basis.syzygy_bucket(idx):
        if divides(rec.sig[1], qk):
            return RewriteWitness(rec.serial, rec.sig, SYZYGY_DIVISOR)
    for w in basis.elements:
        if w.sig[0] == idx and divides(w.sig[1], qk) and po_less(w, a, kind, order):
            return RewriteWitness(w.serial, w.sig, ORDER_SMALLER)
    return None


def pair_rewritable(pair, basis, kind: str):
    """A pair is rewritable when either multiplied component is."""
    a = basis.by_serial[pair.ser_f]
    wit = gen_rewritable(pair.tf_key, a, basis, kind)
    if wit is not None:
        return wit
    b = basis.by_serial[pair.ser_g]
    return gen_rewritable(pair.tg_key, b, basis, kind)


def gvw_divisible(tkey, a, basis):
    """First-style criterion: a recorded syzygy signature divides x^t*sig(a)."""
    order = a.poly.ring.order
    qsig = sig_mul(a.sig, tkey)
    idx, qk = qsig
    for rec in basis.syzygy_bucket(idx):
        if order.key_divides(rec.sig[1], qk):
            return RewriteWitness(rec.serial, rec.sig, SYZYGY_DIVISOR)
    return None


def eventually_super_top_reducible(tkey, a, basis, reducer) -> bool:
    """Second-style criterion: reduce x^t * a and look for a super witness.

    This buys its rejections with a genuine signature-preserving reduction,
    which is exactly what makes it expensive.  When the reduction hits zero
    the outcome is recorded as a fresh syzygy and the answer is False; the
    new record will do the rejecting from then on.
    """
    ring = a.poly.ring
    field = ring.field
    vec = None
    if basis.full_vector and a.vector is not None:
        vec = tuple(comp.shift(tkey, 1) for comp in a.vector)
    cand = LabeledPoly(None, sig_mul(a.sig, tkey), a.sig_lc, a.poly.shift(tkey, 1), vec)
    red = reducer(cand, basis)
    if red.poly.is_zero():
        basis.add_syzygy(red.sig, ZERO_REDUCTION)
        return False
    hk, hc = red.poly.terms[0]
    idx, sk = red.sig
    divides = ring.order.key_divides
    for w in basis.elements:
        if w.sig[0] != idx or not divides(w.sig[1], sk):
            continue
        tq = ring.order.key_div(sk, w.sig[1])
        wk, wc = w.poly.terms[0]
        if tuple(map(_iadd, wk, tq)) != hk:
            continue
        if basis.full_vector:
            if field.div(red.sig_lc, w.sig_lc) != field.div(hc, wc):
                continue
        return True
    return False


class AdmissibilityMonitor:
    """Watches that every reduced pair lands strictly below its parent.

    A violation means the configured partial order cannot certify the run;
    the engine keeps going so the damage is observable downstream, but the
    violation list is what verification reads.
    """

    __slots__ = ("kind", "order", "enabled", "checks", "violations")

    def __init__(self, kind, order, enabled=True):
        self.kind = kind
        self.order = order
        self.enabled = enabled and kind is not None
        self.checks = 0
        self.violations = []

    def check(self, child, parent) -> bool:
        if not self.enabled:
            return True
        self.checks += 1
        if po_less(child, parent, self.kind, self.order):
            return True
        self.violations.append(
            (parent.serial, child.serial, parent.sig, child.sig)
        )
        return False


def admissible_check(monitor: AdmissibilityMonitor, parent, child) -> bool:
    return monitor.check(child, parent)
