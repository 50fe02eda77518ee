"""Classical cross-checks for the signature engine.

``buchberger`` is a deliberately plain completion: degree-ordered pairs,
the coprime-lead skip, full normal forms, nothing else.  It is slow and
easy to audit, which is the point; the engine is never trusted against
itself.  ``has_standard_representation`` decides, by exact linear algebra
over the ground field, whether a module element is a combination of basis
members with the usual lead bounds on both components.
"""

from __future__ import annotations

from heapq import heappush, heappop
from operator import add as _iadd

from .errors import EmptyPolynomialError, SizeGuardError, SoundnessError
from .poly import Polynomial, add_scaled, normal_form, spoly
from .sig import LabeledPoly, ModuleOrder, sig_mul, vector_lead


def buchberger(inputs):
    """Groebner basis by pair completion; raw, monic members, not reduced."""
    polys = [f.monic() for f in inputs if f.terms]
    if not polys:
        return []
    ring = polys[0].ring
    order = ring.order
    unkey = order.unkey
    basis = list(polys)
    leads = [unkey(f.terms[0][0]) for f in basis]
    heap = []

    def push_pairs(j):
        mj = leads[j]
        for i in range(j):
            mi = leads[i]
            lcm_deg = sum(max(a, b) for a, b in zip(mi, mj))
            heappush(heap, (lcm_deg, i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while heap:
        _, i, j = heappop(heap)
        mi, mj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue  # coprime leads, the S-polynomial reduces to zero
        r = normal_form(spoly(basis[i], basis[j]), basis)
        if r.terms:
            basis.append(r.monic())
            leads.append(unkey(r.terms[0][0]))
            push_pairs(len(basis) - 1)
    return basis


def reduce_gb(gb):
    """The unique reduced basis: monic, every member fully reduced by the
    rest, sorted by ascending lead.  Input must generate what it claims to;
    this function only normalizes."""
    work = [g for g in gb if g.terms]
    while True:
        again = False
        for i in range(len(work)):
            others = work[:i] + work[i + 1 :]
            r = normal_form(work[i], others)
            if not r.terms:
                work.pop(i)
                again = True
                break
            r = r.monic()
            if r != work[i]:
                work[i] = r
                again = True
        if not again:
            break
    work.sort(key=lambda f: f.terms[0][0])
    return work


def gb_equal(a, b) -> bool:
    """Do two Groebner bases generate the same ideal?  Decided by comparing
    reduced forms, which are canonical."""
    return reduce_gb(list(a)) == reduce_gb(list(b))


# ---------------------------------------------------------------------------
# standard representations
# ---------------------------------------------------------------------------


def _monomials_up_to(nvars, maxdeg):
    out = [(0,) * nvars]
    frontier = out[:]
    for _ in range(maxdeg):
        nxt = []
        seen = set()
        for m in frontier:
            for i in range(nvars):
                m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(m2)
        out.extend(nxt)
        frontier = nxt
    return out


def has_standard_representation(elem, members, mo: ModuleOrder) -> bool:
    """Is elem = sum p_i * members[i] with lead bounds on both components?

    elem must carry an exact module vector.  The bounds are the usual ones:
    no summand's module lead may exceed elem's module lead, no summand's
    polynomial lead may exceed lpp(elem.poly).  Members with a zero
    polynomial part (pure syzygies) are allowed; for those only the module
    bound constrains the multipliers, and when elem.poly is zero they are
    the only members that may appear at all.  Solved exactly: candidate
    multiplier monomials are enumerated under the bounds and the resulting
    linear system over the ground field is tested for consistency.  The
    enumeration adds two degrees of slack, which makes it exhaustive for
    graded orders; oversized instances raise SizeGuardError instead of
    guessing.
    """
    if elem.vector is None:
        raise ValueError("needs an element with a tracked module vector")
    if sum(1 for g in members if g.poly.terms) > 12:
        raise SizeGuardError("rated for at most 12 nonzero basis members")
    if all(not comp.terms for comp in elem.vector):
        return elem.poly.is_zero()
    if not members:
        return False
    ring = elem.poly.ring
    order = ring.order
    field = ring.field
    led = vector_lead(elem.vector, mo)
    sig_bound = mo.key(led[0])
    sig_deg_bound = mo.sig_degree(led[0], order)
    f_lead = elem.poly.terms[0][0] if elem.poly.terms else None

    # every term of a multiplier obeys both lead bounds (monomial shifts
    # are order-preserving), so the candidate pool per member is finite;
    # size it by the loosest degree budget any member admits
    usable = []  # (member index, poly lead key or None, module lead)
    maxdeg = 0
    for idx, g in enumerate(members):
        glead2 = vector_lead(g.vector, mo)
        if glead2 is None:
            continue
        if g.poly.terms:
            if f_lead is None:
                # a zero polynomial combination cannot spend a nonzero member
                continue
            gl = g.poly.terms[0][0]
            budget = order.key_deg(f_lead) - order.key_deg(gl)
        else:
            gl = None
            budget = sig_deg_bound - mo.sig_degree(glead2[0], order)
        usable.append((idx, gl, glead2[0]))
        if budget > maxdeg:
            maxdeg = budget
    if not usable:
        return False
    maxdeg = max(0, maxdeg) + 2
    pool = [order.key(m) for m in _monomials_up_to(ring.nvars, maxdeg)]
    columns = []  # (member index, multiplier key)
    for idx, gl, sig_lead in usable:
        for gk in pool:
            if gl is not None and tuple(map(_iadd, gk, gl)) > f_lead:
                continue
            if mo.key(sig_mul(sig_lead, gk)) > sig_bound:
                continue
            columns.append((idx, gk))
    if len(columns) > 30000:
        raise SizeGuardError("candidate multiplier set too large (%d)" % len(columns))
    if not columns:
        return False

    # rows are module monomials (component, key); solve A x = u for existence
    rows = {}
    rhs = {}
    col_rows = {}
    for col, (idx, gk) in enumerate(columns):
        for j, comp in enumerate(members[idx].vector):
            for k, c in comp.terms:
                rid = (j, tuple(map(_iadd, k, gk)))
                row = rows.get(rid)
                if row is None:
                    row = rows[rid] = {}
                row[col] = (row.get(col, 0) + c) % field.p
        # normalize: drop cancelled entries lazily below
    for j, comp in enumerate(elem.vector):
        for k, c in comp.terms:
            rhs[(j, k)] = c
            rows.setdefault((j, k), {})
    for rid, row in rows.items():
        for col in [c for c, v in row.items() if v == 0]:
            del row[col]
        for col in row:
            col_rows.setdefault(col, set()).add(rid)

    # sparse Gauss-Jordan, existence only
    p = field.p
    done = set()
    for rid in list(rows):
        row = rows[rid]
        if rid in done:
            continue
        if not row:
            continue
        pivot = next(iter(row))
        inv = field.inv(row[pivot])
        if inv != 1:
            for c in row:
                row[c] = row[c] * inv % p
            rhs[rid] = rhs.get(rid, 0) * inv % p
        for other in list(col_rows.get(pivot, ())):
            if other == rid:
                continue
            orow = rows[other]
            factor = orow.get(pivot)
            if not factor:
                col_rows[pivot].discard(other)
                continue
            for c, v in row.items():
                nv = (orow.get(c, 0) - factor * v) % p
                if nv:
                    orow[c] = nv
                    col_rows.setdefault(c, set()).add(other)
                else:
                    if c in orow:
                        del orow[c]
                        col_rows[c].discard(other)
            rv = (rhs.get(other, 0) - factor * rhs.get(rid, 0)) % p
            if rv:
                rhs[other] = rv
            elif other in rhs:
                del rhs[other]
        col_rows[pivot] = {rid}
        done.add(rid)
    for rid, row in rows.items():
        if not row and rhs.get(rid, 0):
            return False
    if elem.poly.terms:
        _assert_divisor_pair(elem, members, mo, sig_bound, f_lead)
    return True


def _assert_divisor_pair(elem, members, mo, sig_bound, f_lead):
    """A positive answer must come with a member whose lead divides the
    polynomial lead within the signature bound; anything else means the
    solver and the math disagree."""
    order = elem.poly.ring.order
    for g in members:
        if not g.poly.terms:
            continue
        gl = g.poly.terms[0][0]
        if not order.key_divides(gl, f_lead):
            continue
        t = order.key_div(f_lead, gl)
        glead2 = vector_lead(g.vector, mo)
        if mo.key(sig_mul(glead2[0], t)) <= sig_bound:
            return
    raise SoundnessError("standard representation without a top divisor")


def _syzygy_members(basis):
    """Zero-polynomial members of the completed basis, reconstructed exactly:
    one lead-cancellation relation g*u - f*v per pair of nonzero members
    (u, f), (v, g) -- pairs of inputs give the classical input relations --
    plus any zero reductions whose vectors were kept.  Each is a genuine
    module element with zero polynomial part."""
    ring = basis.ring
    mo = basis.mo
    zero = ring.zero()
    els = basis.elements
    out = []
    seen = set()

    def push(vec):
        if all(not comp.terms for comp in vec):
            return
        tag = tuple(tuple(comp.terms) for comp in vec)
        if tag in seen:
            return
        seen.add(tag)
        led = vector_lead(vec, mo)
        out.append(LabeledPoly(None, led[0], led[1], zero, vec))

    for z in basis.zero_members:
        push(tuple(z.vector))
    for i in range(len(els)):
        a = els[i]
        for j in range(i + 1, len(els)):
            b = els[j]
            push(tuple(b.poly * ua - a.poly * ub for ua, ub in zip(a.vector, b.vector)))
    return out


def spotcheck_standard_reps(basis, member_limit: int = 8):
    """Check every pairwise S-polynomial of the final basis for a standard
    representation.  Returns (all_ok, details); details holds one
    (serial_f, serial_g, ok) triple per pair.

    The member set is the completed basis as returned: the nonzero elements
    plus its zero-polynomial members (lead-cancellation relations between
    elements and recorded zero reductions).  Leaving the latter out would
    test a stronger property than completion guarantees: an S-polynomial's
    residue after top reduction is often exactly one of those relations.
    """
    els = basis.elements
    if len(els) > member_limit:
        raise SizeGuardError("spot check rated for at most %d members" % member_limit)
    if not basis.full_vector:
        raise ValueError("spot check needs tracked module vectors")
    ring = basis.ring
    order = ring.order
    field = ring.field
    members = list(els) + _syzygy_members(basis)
    details = []
    ok_all = True
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            a, b = els[i], els[j]
            ka = a.poly.terms[0][0]
            kb = b.poly.terms[0][0]
            lcm = order.key_lcm(ka, kb)
            ta = order.key_div(lcm, ka)
            tb = order.key_div(lcm, kb)
            c = field.neg(field.div(a.poly.terms[0][1], b.poly.terms[0][1]))
            poly = add_scaled(a.poly.shift(ta, 1), b.poly, tb, c)
            vec = tuple(
                add_scaled(ua.shift(ta, 1), ub, tb, c)
                for ua, ub in zip(a.vector, b.vector)
            )
            if all(not comp.terms for comp in vec):
                ok = poly.is_zero()
            else:
                probe = type(a)(None, a.sig, a.sig_lc, poly, vec)
                ok = has_standard_representation(probe, members, basis.mo)
            details.append((a.serial, b.serial, ok))
            ok_all = ok_all and ok
    return ok_all, details
