"""The signature-driven completion loop.

The engine maintains a monotonically growing list of labeled polynomials
plus a store of syzygy signatures, pops critical pairs in a configurable
order, rejects what the configured criterion can justify rejecting, and
signature-preservingly top-reduces the rest.  Every popped pair is
accounted for exactly once, so the counters reconcile:

    pairs_generated == rejected_nonregular + rejected_criterion + reduced

where pairs discarded by queue deduplication count as criterion
rejections.
"""

from __future__ import annotations

import time
from bisect import insort
from dataclasses import dataclass
from heapq import heappush, heappop
from operator import add as _iadd
from operator import sub as _isub

from .errors import CapExceededError, ConfigError, DimensionError, SoundnessError
from .ground import TermOrder
from .poly import Polynomial, add_scaled, normal_form
from .sig import (
    KOSZUL,
    PRINCIPAL_INPUT,
    ZERO_REDUCTION,
    LabeledPoly,
    ModuleOrder,
    SyzygyRecord,
    koszul_pair_sig,
    principal_syzygies,
    vector_lead,
)
from .pairs import QUEUED, PairClass, PairQueue, classify, make_pair
from .criteria import (
    AdmissibilityMonitor,
    EARLIER_UNSOUND,
    F5,
    RATIO,
    eventually_super_top_reducible,
    gvw_divisible,
    pair_rewritable,
    po_less,
)

CRITERIA = ("f5", "ratio", "gvw", "none", "earlier-unsound")
STRATEGIES = ("sig", "deg", "fifo")
MODORDERS = ("pot", "schreyer")

# rewrite order implied by each criterion mode
_ORDER_OF = {
    "f5": F5,
    "ratio": RATIO,
    "gvw": RATIO,
    "earlier-unsound": EARLIER_UNSOUND,
    "none": None,
}


@dataclass
class EngineConfig:
    criterion: str = "ratio"
    strategy: str = "sig"
    modorder: str = "schreyer"
    koszul: bool = True
    full_vector: bool = True
    check_admissible: bool = True
    dedup: bool = None  # None = on for ratio/gvw, off otherwise
    gvw_second: bool = None  # None = on exactly for criterion "gvw"
    cap: int = 1_000_000
    verify_module: bool = False
    allow_unsound: bool = False

    def validate(self):
        if self.criterion not in CRITERIA:
            raise ConfigError("unknown criterion %r" % (self.criterion,))
        if self.strategy not in STRATEGIES:
            raise ConfigError("unknown strategy %r" % (self.strategy,))
        if self.modorder not in MODORDERS:
            raise ConfigError("unknown module order %r" % (self.modorder,))
        if not isinstance(self.cap, int) or self.cap < 1:
            raise ConfigError("cap must be a positive integer")
        if self.criterion == "earlier-unsound" and not self.allow_unsound:
            raise ConfigError(
                "criterion 'earlier-unsound' is a negative control; "
                "set allow_unsound=True to run it anyway"
            )
        if self.gvw_second and self.criterion not in ("gvw", "ratio"):
            raise ConfigError("the super-reducibility test needs the ratio order")
        if self.dedup and _ORDER_OF[self.criterion] is None:
            raise ConfigError("queue dedup needs a rewrite order for its keep rule")

    def effective_dedup(self) -> bool:
        if self.dedup is None:
            return self.criterion in ("ratio", "gvw")
        return self.dedup

    def effective_gvw_second(self) -> bool:
        if self.gvw_second is None:
            return self.criterion == "gvw"
        return self.gvw_second


@dataclass
class RunStats:
    pairs_generated: int = 0
    rejected_nonregular: int = 0
    rejected_criterion: int = 0
    reduced: int = 0
    zero_reductions: int = 0
    basis_nonzero: int = 0
    reduced_gb_size: int = -1
    elapsed_ms: int = 0

    def as_dict(self):
        return {
            "pairs_generated": self.pairs_generated,
            "rejected_nonregular": self.rejected_nonregular,
            "rejected_criterion": self.rejected_criterion,
            "reduced": self.reduced,
            "zero_reductions": self.zero_reductions,
            "basis_nonzero": self.basis_nonzero,
            "reduced_gb_size": self.reduced_gb_size,
            "elapsed_ms": self.elapsed_ms,
        }


class Basis:
    """Growing basis: nonzero labeled polynomials plus syzygy records.

    Serials are handed out once and never reused; syzygy records share the
    same counter so rewrite orders can rank everything uniformly.  Records
    are deduplicated on their signature.
    """

    def __init__(self, ring, mo: ModuleOrder, inputs, full_vector=True, verify=False):
        self.ring = ring
        self.mo = mo
        self.inputs = list(inputs)
        self.full_vector = full_vector
        self.verify = verify
        self.elements = []
        self.by_serial = {}
        # zero-polynomial members kept only when full vectors are tracked;
        # they never reduce anything and never pair, but representation
        # checks need their module vectors
        self.zero_members = []
        # reducer lookup sorted by (lead key, serial); a divisor's key is
        # never above its multiple's, so scans can stop at the lead
        self.red_index = []
        self.syzygies = []
        self._buckets = {}
        self._syz_seen = set()
        self._serial = 0
        self.verified_inserts = 0
        self.monitor = None
        # with pruning on, records divisible by an existing one are skipped
        # and records the newcomer divides are dropped; rejection coverage
        # is unchanged, the buckets just stay minimal
        self.prune_syzygies = False

    def next_serial(self) -> int:
        s = self._serial
        self._serial += 1
        return s

    def add_element(self, lp: LabeledPoly):
        if self.verify and self.full_vector:
            self._verify_vector(lp)
        self.elements.append(lp)
        self.by_serial[lp.serial] = lp
        insort(self.red_index, (lp.poly.terms[0][0], lp.serial, lp))

    def _verify_vector(self, lp: LabeledPoly):
        total = self.ring.zero()
        for u_i, f_i in zip(lp.vector, self.inputs):
            if u_i.terms:
                total = total + u_i * f_i
        if total != lp.poly:
            raise SoundnessError("module vector of #%s does not multiply out" % lp.serial)
        led = vector_lead(lp.vector, self.mo)
        if led is None or led[0] != lp.sig or led[1] != lp.sig_lc:
            raise SoundnessError("stored signature of #%s is not the vector lead" % lp.serial)
        self.verified_inserts += 1

    def add_syzygy(self, sig, origin):
        if sig in self._syz_seen:
            return None
        bucket = self._buckets.setdefault(sig[0], [])
        if self.prune_syzygies:
            divides = self.ring.order.key_divides
            sk = sig[1]
            for rec in bucket:
                if divides(rec.sig[1], sk):
                    return None
            bucket[:] = [rec for rec in bucket if not divides(sk, rec.sig[1])]
        self._syz_seen.add(sig)
        rec = SyzygyRecord(self.next_serial(), sig, origin)
        self.syzygies.append(rec)
        bucket.append(rec)
        return rec

    def syzygy_bucket(self, idx):
        return self._buckets.get(idx, ())

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# signature-preserving top reduction
# ---------------------------------------------------------------------------


class _Reducend:
    """Mutable working element: coefficient dict + lazy max-heap of keys."""

    __slots__ = ("p", "sig", "sig_lc", "sig_mk", "acc", "heap", "vec")

    def __init__(self, p, sig, sig_lc, terms, vec):
        self.p = p
        self.sig = sig
        self.sig_lc = sig_lc
        self.sig_mk = None  # module-order key of sig, filled on first use
        acc = {}
        heap = []
        for k, c in terms:
            acc[k] = c
            heap.append((tuple(-x for x in k), k))
        heap.sort()
        self.acc = acc
        self.heap = heap
        self.vec = vec  # list of per-component coefficient dicts, or None

    def peek(self):
        acc, heap = self.acc, self.heap
        while heap:
            k = heap[0][1]
            c = acc.get(k, 0)
            if c:
                return k, c
            heappop(heap)
        return None

    def sub_scaled(self, terms, tkey, c):
        acc, heap, p = self.acc, self.heap, self.p
        for kk, cc in terms:
            k2 = tuple(map(_iadd, kk, tkey))
            prev = acc.get(k2)
            if prev is None:
                acc[k2] = -c * cc % p
                heappush(heap, (tuple(-x for x in k2), k2))
            else:
                acc[k2] = (prev - c * cc) % p

    def sub_scaled_vec(self, vector, tkey, c):
        p = self.p
        for d, comp in zip(self.vec, vector):
            for kk, cc in comp.terms:
                k2 = tuple(map(_iadd, kk, tkey))
                d[k2] = (d.get(k2, 0) - c * cc) % p


def _reduce_step(red: _Reducend, basis: Basis) -> bool:
    """Apply one signature-preserving top reduction; False at a fixpoint.

    Reducer choice is deterministic: smallest multiplied signature first,
    then lowest serial.  A reducer is eligible when its multiplied
    signature sits strictly below the working signature, or equals it with
    a surviving label coefficient (only decidable with tracked vectors).
    Candidates come from the lead-sorted index; the scan stops at the
    working lead since a divisor never exceeds its multiple in the term
    order.
    """
    top = red.peek()
    if top is None:
        return False
    k, c = top
    order = basis.ring.order
    mo = basis.mo
    field = basis.ring.field
    divides = order.key_divides
    sig = red.sig
    sig_mo_key = red.sig_mk
    if sig_mo_key is None:
        sig_mo_key = red.sig_mk = mo.key(sig)
    mo_key = mo.key
    best = None
    best_rank = None
    for vk, serial, v in basis.red_index:
        if vk > k:
            break
        if not divides(vk, k):
            continue
        tkey = tuple(map(_isub, k, vk))
        sv = (v.sig[0], tuple(map(_iadd, v.sig[1], tkey)))
        new_lc = None
        if sv == sig:
            if red.vec is None:
                continue
            cf = c * field.inv(v.poly.terms[0][1]) % field.p
            new_lc = (red.sig_lc - cf * v.sig_lc) % field.p
            if new_lc == 0:
                continue
            rank = (sig_mo_key, serial)
        else:
            mk = mo_key(sv)
            if mk > sig_mo_key:
                continue
            rank = (mk, serial)
        if best_rank is None or rank < best_rank:
            best_rank = rank
            best = (v, tkey, new_lc)
    if best is None:
        return False
    v, tkey, new_lc = best
    cf = c * field.inv(v.poly.terms[0][1]) % field.p
    red.sub_scaled(v.poly.terms, tkey, cf)
    if red.vec is not None:
        red.sub_scaled_vec(v.vector, tkey, cf)
    if new_lc is not None:
        red.sig_lc = new_lc
    return True


def _from_labeled(elem: LabeledPoly, basis: Basis) -> _Reducend:
    vec = None
    if basis.full_vector and elem.vector is not None:
        vec = [dict(comp.terms) for comp in elem.vector]
    return _Reducend(basis.ring.field.p, elem.sig, elem.sig_lc, elem.poly.terms, vec)


def _materialize(red: _Reducend, basis: Basis, serial=None) -> LabeledPoly:
    poly = basis.ring.from_key_terms(
        sorted(((k, c) for k, c in red.acc.items() if c), reverse=True)
    )
    vec = None
    if red.vec is not None:
        vec = tuple(
            basis.ring.from_key_terms(sorted(((k, c) for k, c in d.items() if c), reverse=True))
            for d in red.vec
        )
    return LabeledPoly(serial, red.sig, red.sig_lc, poly, vec)


def sig_reduce_step(elem: LabeledPoly, basis: Basis):
    """One top-reduction step; None when the lead is already irreducible."""
    red = _from_labeled(elem, basis)
    if not _reduce_step(red, basis):
        return None
    return _materialize(red, basis)


def sig_reduce(elem: LabeledPoly, basis: Basis) -> LabeledPoly:
    """Top-reduce to a fixpoint.  The signature never changes; the label
    coefficient can."""
    red = _from_labeled(elem, basis)
    while _reduce_step(red, basis):
        pass
    return _materialize(red, basis)


# ---------------------------------------------------------------------------
# the main loop
# ---------------------------------------------------------------------------


def _unit_vector(ring, m, i):
    return tuple(ring.one() if j == i else ring.zero() for j in range(m))


def signature_groebner(inputs, cfg: EngineConfig = None):
    """Run the completion loop.  Returns (Basis, RunStats).

    Zero input polynomials are dropped.  The admissibility monitor, when
    enabled, ends up on ``basis.monitor``; a violation does not stop the
    run, it only shows up there (and, through the CLI, as a verification
    failure).
    """
    if cfg is None:
        cfg = EngineConfig()
    cfg.validate()
    inputs = list(inputs)
    if not inputs:
        raise ValueError("need at least one input polynomial")
    ring = inputs[0].ring
    for f in inputs:
        if f.ring is not ring and f.ring != ring:
            raise DimensionError("inputs live in different rings")
    polys = [f for f in inputs if f.terms]
    t0 = time.perf_counter()
    stats = RunStats()

    m = len(polys)
    if m == 0:
        basis = Basis(ring, ModuleOrder.pot(1), [], cfg.full_vector, cfg.verify_module)
        basis.monitor = AdmissibilityMonitor(None, ring.order, enabled=False)
        stats.elapsed_ms = int((time.perf_counter() - t0) * 1000)
        return basis, stats

    order = ring.order
    field = ring.field
    if cfg.modorder == "pot":
        mo = ModuleOrder.pot(m)
    else:
        mo = ModuleOrder.schreyer([f.terms[0][0] for f in polys])
    basis = Basis(ring, mo, polys, cfg.full_vector, cfg.verify_module)
    basis.prune_syzygies = True

    order_kind = _ORDER_OF[cfg.criterion]
    monitor = AdmissibilityMonitor(order_kind, order, enabled=cfg.check_admissible)
    basis.monitor = monitor

    dedup = cfg.effective_dedup()
    use_second = cfg.effective_gvw_second()

    def first_less(pnew, pold):
        return po_less(
            basis.by_serial[pnew.ser_f], basis.by_serial[pold.ser_f], order_kind, order
        )

    # dropping a same-first-element duplicate needs every pop rejection to
    # look at the first component only; that holds for the divisor plus
    # super-reducibility checks, not for two-sided rewritability
    queue = PairQueue(cfg.strategy, mo, dedup, first_less if dedup else None,
                      same_first=cfg.criterion == "gvw")

    def offer(pair):
        stats.pairs_generated += 1
        regular = classify(pair, basis) is PairClass.REGULAR
        outcome = queue.insert(pair, regular)
        if outcome != QUEUED:
            # dedup killed one of the two colliding regular pairs early;
            # same bucket as a pop-time criterion rejection
            stats.rejected_criterion += 1

    for i, f in enumerate(polys):
        vec = _unit_vector(ring, m, i) if cfg.full_vector else None
        lp = LabeledPoly(basis.next_serial(), (i, order.one_key), 1, f, vec)
        basis.add_element(lp)
    for i in range(m):
        for j in range(i + 1, m):
            offer(make_pair(basis.elements[i], basis.elements[j], mo))
    if cfg.koszul:
        for s in principal_syzygies(polys, mo):
            basis.add_syzygy(s, PRINCIPAL_INPUT)

    pops = 0
    while True:
        pair = queue.pop()
        if pair is None:
            break
        pops += 1
        if pops > cfg.cap:
            raise CapExceededError("iteration cap %d exceeded" % cfg.cap)

        if classify(pair, basis) is not PairClass.REGULAR:
            stats.rejected_nonregular += 1
            continue

        a = basis.by_serial[pair.ser_f]
        b = basis.by_serial[pair.ser_g]

        if order_kind is not None:
            if cfg.criterion == "gvw":
                rejected = gvw_divisible(pair.tf_key, a, basis) is not None or (
                    use_second
                    and eventually_super_top_reducible(pair.tf_key, a, basis, sig_reduce)
                )
            else:
                rejected = pair_rewritable(pair, basis, order_kind) is not None
                if not rejected and use_second:
                    rejected = eventually_super_top_reducible(
                        pair.tf_key, a, basis, sig_reduce
                    )
            if rejected:
                stats.rejected_criterion += 1
                continue

        stats.reduced += 1
        c = field.div(a.poly.terms[0][1], b.poly.terms[0][1])
        sterms = add_scaled(
            a.poly.shift(pair.tf_key, 1), b.poly, pair.tg_key, field.neg(c)
        ).terms
        vec = None
        if cfg.full_vector:
            vec = []
            neg_c = field.neg(c)
            for ua, ub in zip(a.vector, b.vector):
                comp = add_scaled(ua.shift(pair.tf_key, 1), ub, pair.tg_key, neg_c)
                vec.append(dict(comp.terms))
        red = _Reducend(field.p, pair.lead_sig, a.sig_lc, sterms, vec)
        while _reduce_step(red, basis):
            pass
        child = _materialize(red, basis, serial=basis.next_serial())
        monitor.check(child, a)

        if child.poly.terms:
            older = list(basis.elements)
            basis.add_element(child)
            for q in older:
                offer(make_pair(child, q, mo))
            if cfg.koszul:
                # syzygy-divisor rejection earns its keep through lead
                # cancellations against the whole basis, inputs included
                for q in older:
                    s = koszul_pair_sig(q, child, mo)
                    if s is not None:
                        basis.add_syzygy(s, KOSZUL)
        else:
            stats.zero_reductions += 1
            basis.add_syzygy(child.sig, ZERO_REDUCTION)
            if cfg.full_vector:
                if basis.verify:
                    basis._verify_vector(child)
                basis.zero_members.append(child)

    stats.basis_nonzero = len(basis.elements)
    stats.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return basis, stats


# ---------------------------------------------------------------------------
# final basis extraction
# ---------------------------------------------------------------------------


def extract_gb(basis: Basis):
    """Monic, fully interreduced polynomials, sorted by ascending lead.

    When the completion ran with a sound criterion this is the reduced
    Groebner basis of the input ideal, and it is unique, which is what the
    oracle comparison leans on.
    """
    return interreduce([e.poly for e in basis.elements])


def interreduce(polys):
    live = [f.monic() for f in polys if f.terms]
    if not live:
        return []
    order = live[0].ring.order
    live.sort(key=lambda f: f.terms[0][0])
    kept = []
    for f in live:
        fk = f.terms[0][0]
        if any(order.key_divides(g.terms[0][0], fk) for g in kept):
            continue
        kept.append(f)
    while True:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            nf = normal_form(kept[i], others)
            if not nf.terms:
                kept.pop(i)
                changed = True
                break
            nf = nf.monic()
            if nf != kept[i]:
                kept[i] = nf
                changed = True
        if not changed:
            break
    kept.sort(key=lambda f: f.terms[0][0])
    return kept
