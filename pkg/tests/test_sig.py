"""Signatures, module orders, and syzygy lead-signature helpers."""

import pytest

from siggb.errors import DimensionError
from siggb.ground import TermOrder
from siggb.poly import PolyRing
from siggb.sig import (
    KOSZUL,
    LabeledPoly,
    ModuleOrder,
    SyzygyRecord,
    koszul_pair_sig,
    koszul_syzygy,
    principal_syzygies,
    principal_syzygy_sig,
    render_sig,
    sig_divides,
    sig_make,
    sig_mul,
    vector_lead,
)

from conftest import poly_of


@pytest.fixture
def order2():
    return TermOrder("grevlex", 2)


def unit_vector(ring, n, i):
    return tuple(ring.one() if j == i else ring.zero() for j in range(n))


class TestSignatureBasics:
    def test_make_and_mul(self, order2):
        s = sig_make(1, (2, 0), order2)
        assert s == (1, order2.key((2, 0)))
        t = sig_mul(s, order2.key((0, 3)))
        assert t == (1, order2.key((2, 3)))

    def test_divides_same_component_only(self, order2):
        a = sig_make(0, (1, 0), order2)
        b = sig_make(0, (2, 1), order2)
        c = sig_make(1, (2, 1), order2)
        assert sig_divides(a, b, order2)
        assert not sig_divides(b, a, order2)
        assert not sig_divides(a, c, order2)

    def test_render(self, gf7_xy):
        o = gf7_xy.order
        assert render_sig(sig_make(0, (1, 2), o), gf7_xy) == "x*y^2*e1"
        assert render_sig(sig_make(2, (0, 0), o), gf7_xy) == "e3"


class TestModuleOrder:
    def test_pot_earlier_component_dominates(self, order2):
        mo = ModuleOrder.pot(3)
        low = sig_make(1, (9, 9), order2)
        high = sig_make(0, (0, 0), order2)
        assert mo.cmp(high, low) > 0
        assert mo.cmp(low, high) < 0
        assert mo.cmp(low, low) == 0

    def test_pot_term_order_breaks_ties(self, order2):
        mo = ModuleOrder.pot(2)
        a = sig_make(0, (2, 0), order2)
        b = sig_make(0, (1, 0), order2)
        assert mo.cmp(a, b) > 0

    def test_pot_precedence(self, order2):
        mo = ModuleOrder.pot(2, precedence=(1, 0))
        assert mo.cmp(sig_make(1, (0, 0), order2), sig_make(0, (9, 9), order2)) > 0

    def test_schreyer_compares_weighted_products(self, order2):
        # weights: lead keys of x^2 and y
        mo = ModuleOrder.schreyer([order2.key((2, 0)), order2.key((0, 1))])
        # 1*e1 carries x^2, x*e2 carries x*y; x^2 > x*y under grevlex
        assert mo.cmp(sig_make(0, (0, 0), order2), sig_make(1, (1, 0), order2)) > 0
        # y*e1 carries x^2*y, x^2*e2 carries the same product; larger index loses
        assert mo.cmp(sig_make(0, (0, 1), order2), sig_make(1, (2, 0), order2)) > 0

    def test_key_injective(self, order2):
        sigs = [
            sig_make(i, (a, b), order2)
            for i in range(3)
            for a in range(3)
            for b in range(3)
        ]
        for mo in (
            ModuleOrder.pot(3),
            ModuleOrder.schreyer([order2.key((2, 0)), order2.key((1, 1)), order2.key((0, 2))]),
        ):
            keys = {mo.key(s) for s in sigs}
            assert len(keys) == len(sigs)

    def test_multiplicativity(self, order2):
        mo = ModuleOrder.schreyer([order2.key((2, 0)), order2.key((1, 1))])
        s = sig_make(0, (0, 2), order2)
        t = sig_make(1, (1, 0), order2)
        u = order2.key((1, 3))
        assert mo.cmp(s, t) == mo.cmp(sig_mul(s, u), sig_mul(t, u))

    def test_sig_degree_pot_is_term_degree(self, order2):
        mo = ModuleOrder.pot(3)
        assert mo.sig_degree(sig_make(2, (2, 1), order2), order2) == 3
        assert mo.sig_degree(sig_make(0, (0, 0), order2), order2) == 0

    def test_sig_degree_schreyer_adds_weight_degree(self, order2):
        mo = ModuleOrder.schreyer([order2.key((2, 0)), order2.key((0, 3))])
        s = sig_make(0, (1, 1), order2)
        assert mo.sig_degree(s, order2) == 4
        t = sig_make(1, (1, 1), order2)
        assert mo.sig_degree(t, order2) == 5

    def test_construction_errors(self, order2):
        with pytest.raises(DimensionError):
            ModuleOrder.pot(0)
        with pytest.raises(ValueError):
            ModuleOrder("top", 2)
        with pytest.raises(DimensionError):
            ModuleOrder.schreyer([])
        with pytest.raises(ValueError):
            ModuleOrder.pot(2, precedence=(0, 0))


class TestLabeledShapes:
    def test_labeled_poly_lead_key(self, gf7_xy):
        f = poly_of(gf7_xy, "x + 1")
        lp = LabeledPoly(0, (0, gf7_xy.order.one_key), 1, f)
        assert lp.lead_key == f.lead_key
        zp = LabeledPoly(1, (0, gf7_xy.order.one_key), 1, gf7_xy.zero())
        assert zp.lead_key is None

    def test_syzygy_record_shape(self, gf7_xy):
        rec = SyzygyRecord(5, (0, gf7_xy.order.one_key), KOSZUL)
        assert rec.lead_key is None
        assert rec.poly is None
        assert rec.origin == KOSZUL


class TestVectorLead:
    def test_picks_largest_component_lead(self, gf7_xy):
        mo = ModuleOrder.pot(2)
        vec = (poly_of(gf7_xy, "x*y - 1"), poly_of(gf7_xy, "x^2"))
        sig, coeff = vector_lead(vec, mo)
        assert sig == (0, gf7_xy.order.key((1, 1)))
        assert coeff == 1

    def test_zero_vector(self, gf7_xy):
        mo = ModuleOrder.pot(2)
        assert vector_lead((gf7_xy.zero(), gf7_xy.zero()), mo) is None


class TestPrincipalSyzygies:
    def test_matches_explicit_vector(self, gf7_xy, two_poly):
        f, g = two_poly
        for mo in (
            ModuleOrder.pot(2),
            ModuleOrder.schreyer([f.lead_key, g.lead_key]),
        ):
            got = principal_syzygy_sig(f.lead_key, 0, g.lead_key, 1, mo)
            led = vector_lead((g, -f), mo)
            assert got == led[0]

    def test_enumerates_all_pairs(self, gf7_xyz):
        polys = [poly_of(gf7_xyz, t) for t in ("x^2", "x*y", "y*z", "z^2")]
        mo = ModuleOrder.pot(4)
        sigs = principal_syzygies(polys, mo)
        assert len(sigs) == 6
        expected = [
            principal_syzygy_sig(polys[i].lead_key, i, polys[j].lead_key, j, mo)
            for i in range(4)
            for j in range(i + 1, 4)
        ]
        assert sigs == expected


class TestKoszulSigs:
    def _inputs(self, gf7_xy, two_poly):
        f, g = two_poly
        one = gf7_xy.order.one_key
        a = LabeledPoly(0, (0, one), 1, f, unit_vector(gf7_xy, 2, 0))
        b = LabeledPoly(1, (1, one), 1, g, unit_vector(gf7_xy, 2, 1))
        return f, g, a, b

    def test_pair_sig_matches_explicit_vector(self, gf7_xy, two_poly):
        f, g, a, b = self._inputs(gf7_xy, two_poly)
        for mo in (ModuleOrder.pot(2), ModuleOrder.schreyer([f.lead_key, g.lead_key])):
            got = koszul_pair_sig(a, b, mo)
            diff = [g * ua - f * ub for ua, ub in zip(a.vector, b.vector)]
            assert got == vector_lead(diff, mo)[0]

    def test_pair_sig_tie_resolved_by_coefficients(self, gf7_xy):
        # labels y*e1 and x*e1 with leads y^2 and 2*x*y: both candidates
        # are x*y^2*e1, and the candidate coefficients differ (2 vs 1)
        o = gf7_xy.order
        mo = ModuleOrder.pot(1)
        a = LabeledPoly(0, (0, o.key((0, 1))), 1, poly_of(gf7_xy, "y^2"))
        b = LabeledPoly(1, (0, o.key((1, 0))), 1, poly_of(gf7_xy, "2*x*y"))
        assert koszul_pair_sig(a, b, mo) == (0, o.key((1, 2)))

    def test_pair_sig_tie_without_vectors_skips(self, gf7_xy):
        o = gf7_xy.order
        mo = ModuleOrder.pot(1)
        a = LabeledPoly(0, (0, o.key((0, 1))), 1, poly_of(gf7_xy, "y^2"))
        b = LabeledPoly(1, (0, o.key((1, 0))), 1, poly_of(gf7_xy, "x*y"))
        assert koszul_pair_sig(a, b, mo) is None

    def test_member_vs_input_matches_explicit_vector(self, gf7_xy, two_poly):
        f, g, a, b = self._inputs(gf7_xy, two_poly)
        mo = ModuleOrder.pot(2)
        got = koszul_syzygy(b, 0, f, mo)
        # h*e_i - f_i*w with w = e_1, h = g: vector is (g, -f)
        assert got == vector_lead((g, -f), mo)[0]
        assert got == koszul_pair_sig(a, b, mo)

    def test_input_against_itself_is_trivial(self, gf7_xy, two_poly):
        f, g, a, b = self._inputs(gf7_xy, two_poly)
        mo = ModuleOrder.pot(2)
        assert koszul_syzygy(a, 0, f, mo) is None

    def test_member_vs_input_skips_tie_without_vector(self, gf7_xy, two_poly):
        f, g, a, b = self._inputs(gf7_xy, two_poly)
        mo = ModuleOrder.pot(2)
        bare = LabeledPoly(2, a.sig, 1, f, None)
        assert koszul_syzygy(bare, 0, f, mo) is None
