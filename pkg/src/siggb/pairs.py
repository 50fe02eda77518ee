"""Critical pairs, their classification, and the pending-pair queue."""

from __future__ import annotations

from enum import Enum
from heapq import heappush, heappop

from .sig import ModuleOrder, sig_mul


class PairClass(Enum):
    NONREGULAR = "nonregular"
    SUPER_REGULAR = "super-regular"
    REGULAR = "regular"


class CriticalPair:
    """An oriented pair of basis serials with the derived lcm data cached.

    ``lead_sig`` is the signature of the multiplied first element and never
    compares below ``second_sig``; orientation is canonical, so building
    the pair from swapped arguments yields the same object contents.
    """

    __slots__ = (
        "lcm_key", "deg", "tf_key", "ser_f", "tg_key", "ser_g",
        "lead_sig", "second_sig", "seq", "alive",
    )

    def __init__(self, lcm_key, deg, tf_key, ser_f, tg_key, ser_g, lead_sig, second_sig):
        self.lcm_key = lcm_key
        self.deg = deg
        self.tf_key = tf_key
        self.ser_f = ser_f
        self.tg_key = tg_key
        self.ser_g = ser_g
        self.lead_sig = lead_sig
        self.second_sig = second_sig
        self.seq = -1
        self.alive = True

    def __repr__(self):
        return "<pair #%d,#%d lcm=%s>" % (self.ser_f, self.ser_g, list(self.lcm_key))


def make_pair(a, b, mo: ModuleOrder) -> CriticalPair:
    """Build the oriented critical pair of two nonzero labeled polynomials."""
    order = a.poly.ring.order
    ka = a.poly.terms[0][0]
    kb = b.poly.terms[0][0]
    lcm = order.key_lcm(ka, kb)
    ta = order.key_div(lcm, ka)
    tb = order.key_div(lcm, kb)
    sa = sig_mul(a.sig, ta)
    sb = sig_mul(b.sig, tb)
    c = mo.cmp(sa, sb)
    if c < 0 or (c == 0 and b.serial < a.serial):
        a, b, ta, tb, sa, sb = b, a, tb, ta, sb, sa
    return CriticalPair(lcm, order.key_deg(lcm), ta, a.serial, tb, b.serial, sa, sb)


def classify(pair: CriticalPair, basis) -> PairClass:
    """Regular when the signatures split; otherwise the label coefficients
    decide between cancellation and a super-regular survivor.  Without
    tracked vectors equal signatures are treated as cancelling."""
    if pair.lead_sig != pair.second_sig:
        return PairClass.REGULAR
    if not basis.full_vector:
        return PairClass.NONREGULAR
    a = basis.by_serial[pair.ser_f]
    b = basis.by_serial[pair.ser_g]
    field = a.poly.ring.field
    c = field.div(a.poly.terms[0][1], b.poly.terms[0][1])
    if field.sub(a.sig_lc, field.mul(c, b.sig_lc)) == 0:
        return PairClass.NONREGULAR
    return PairClass.SUPER_REGULAR


QUEUED = "queued"
REPLACED = "replaced"
DROPPED = "dropped"

STRATEGIES = ("sig", "deg", "fifo")


class PairQueue:
    """Pending critical pairs under one of three pop strategies.

    sig  : pop the pair with the smallest lead signature
    deg  : pop the pair with the smallest lcm total degree
    fifo : pop in insertion order

    Ties always fall back to insertion order.  With ``dedup`` enabled at
    most one live regular pair per lead signature is kept; the keep rule
    prefers the pair whose first element is smaller under ``first_less``
    and keeps the incumbent on ties.  Exactly one of the two colliding
    pairs survives, never both and never neither.

    Non-regular pairs are exempt: they are discarded unprocessed at pop
    time, so they cover no signature and must neither shadow a regular
    pair nor be counted as criterion rejections.  A pair's classification
    depends only on the two immutable labeled elements, so testing it at
    insert time and again at pop time gives the same answer.

    A kill is only allowed when the killed pair's pop-time rejection is
    already inevitable.  With distinct first elements that holds: the
    survivor's first element sits in the basis with a dividing signature
    and a strictly smaller order position, which is exactly a rewrite
    witness.  With the same first element it does not: the survivor can
    still die on its second component, leaving the signature unhandled.
    ``same_first`` opts into dropping those duplicates anyway; that is
    sound only when every pop-time rejection path depends on the first
    component alone, which is the case for the divisor and
    super-reducibility checks but not for two-sided rewritability.
    """

    def __init__(self, strategy: str, mo: ModuleOrder, dedup: bool = False,
                 first_less=None, same_first: bool = False):
        if strategy not in STRATEGIES:
            raise ValueError("unknown strategy %r" % (strategy,))
        if dedup and first_less is None:
            raise ValueError("dedup needs a first_less comparator")
        self.strategy = strategy
        self.mo = mo
        self.dedup = dedup
        self.first_less = first_less
        self.same_first = same_first
        self._heap = []
        self._live = {}
        self._seq = 0
        self._nlive = 0

    def _rank(self, pair: CriticalPair):
        if self.strategy == "sig":
            return self.mo.key(pair.lead_sig)
        if self.strategy == "deg":
            return (pair.deg,)
        return ()

    def insert(self, pair: CriticalPair, regular: bool = True) -> str:
        pair.seq = self._seq
        self._seq += 1
        outcome = QUEUED
        if self.dedup and regular:
            other = self._live.get(pair.lead_sig)
            if other is None:
                self._live[pair.lead_sig] = pair
            elif other.ser_f == pair.ser_f:
                if self.same_first:
                    pair.alive = False
                    return DROPPED
                # keep both; the incumbent stays the registry entry
            elif self.first_less(pair, other):
                other.alive = False
                self._nlive -= 1
                self._live[pair.lead_sig] = pair
                outcome = REPLACED
            else:
                pair.alive = False
                return DROPPED
        heappush(self._heap, (self._rank(pair), pair.seq, pair))
        self._nlive += 1
        return outcome

    def pop(self):
        while self._heap:
            _, _, pair = heappop(self._heap)
            if not pair.alive:
                continue
            pair.alive = False
            self._nlive -= 1
            if self.dedup and self._live.get(pair.lead_sig) is pair:
                del self._live[pair.lead_sig]
            return pair
        return None

    def __len__(self):
        return self._nlive

    def __bool__(self):
        return self._nlive > 0
