"""Engine configuration, the completion loop, and reduction mechanics."""

import pytest

from siggb.engine import (
    Basis,
    EngineConfig,
    RunStats,
    extract_gb,
    interreduce,
    sig_reduce,
    sig_reduce_step,
    signature_groebner,
)
from siggb.errors import (
    CapExceededError,
    ConfigError,
    DimensionError,
    SoundnessError,
)
from siggb.ground import TermOrder
from siggb.poly import PolyRing, render_poly
from siggb.sig import LabeledPoly, ModuleOrder

from conftest import poly_of

STATS_KEYS = (
    "pairs_generated",
    "rejected_nonregular",
    "rejected_criterion",
    "reduced",
    "zero_reductions",
    "basis_nonzero",
    "reduced_gb_size",
    "elapsed_ms",
)


class TestEngineConfig:
    def test_defaults_validate(self):
        EngineConfig().validate()

    @pytest.mark.parametrize("field,value", [
        ("criterion", "f4"),
        ("strategy", "random"),
        ("modorder", "term-over-position"),
        ("cap", 0),
        ("cap", "many"),
    ])
    def test_bad_values_rejected(self, field, value):
        cfg = EngineConfig(**{field: value})
        with pytest.raises(ConfigError):
            cfg.validate()

    def test_unsound_criterion_needs_opt_in(self):
        with pytest.raises(ConfigError):
            EngineConfig(criterion="earlier-unsound").validate()
        EngineConfig(criterion="earlier-unsound", allow_unsound=True).validate()

    def test_super_reducibility_needs_ratio_order(self):
        with pytest.raises(ConfigError):
            EngineConfig(criterion="f5", gvw_second=True).validate()
        EngineConfig(criterion="ratio", gvw_second=True).validate()

    def test_dedup_needs_rewrite_order(self):
        with pytest.raises(ConfigError):
            EngineConfig(criterion="none", dedup=True).validate()

    def test_effective_dedup_defaults(self):
        assert EngineConfig(criterion="ratio").effective_dedup()
        assert EngineConfig(criterion="gvw").effective_dedup()
        assert not EngineConfig(criterion="f5").effective_dedup()
        assert not EngineConfig(criterion="none").effective_dedup()
        assert EngineConfig(criterion="f5", dedup=True).effective_dedup()
        assert not EngineConfig(criterion="ratio", dedup=False).effective_dedup()

    def test_effective_gvw_second_defaults(self):
        assert EngineConfig(criterion="gvw").effective_gvw_second()
        assert not EngineConfig(criterion="ratio").effective_gvw_second()
        assert EngineConfig(criterion="ratio", gvw_second=True).effective_gvw_second()


class TestRunStats:
    def test_dict_keys_exact_order(self):
        assert tuple(RunStats().as_dict()) == STATS_KEYS

    def test_engine_leaves_reduced_gb_size_unset(self, two_poly):
        _, stats = signature_groebner(two_poly)
        assert stats.reduced_gb_size == -1
        assert stats.elapsed_ms >= 0


class TestTwoPolyRun:
    """The x^2-1, x*y-1 system over GF(7) has fully pinned-down counters."""

    EXPECTED_GB = ["1*x + 6*y", "1*y^2 + 6"]

    @pytest.mark.parametrize("criterion", ["ratio", "f5", "gvw"])
    def test_counters_and_basis(self, two_poly, criterion):
        basis, stats = signature_groebner(two_poly, EngineConfig(criterion=criterion))
        assert stats.pairs_generated == 6
        assert stats.rejected_nonregular == 0
        assert stats.rejected_criterion == 4
        assert stats.reduced == 2
        assert stats.zero_reductions == 0
        assert stats.basis_nonzero == 4
        assert [render_poly(f) for f in extract_gb(basis)] == self.EXPECTED_GB

    def test_without_criterion_everything_reduces(self, two_poly):
        cfg = EngineConfig(criterion="none")
        basis, stats = signature_groebner(two_poly, cfg)
        assert stats.pairs_generated == 6
        assert stats.rejected_nonregular == 0
        assert stats.rejected_criterion == 0
        assert stats.reduced == 6
        assert stats.zero_reductions == 4
        assert stats.basis_nonzero == 4
        # same ideal, same reduced basis, four wasted reductions
        assert [render_poly(f) for f in extract_gb(basis)] == self.EXPECTED_GB

    def test_zero_reduction_vectors_kept_in_full_vector_mode(self, two_poly):
        cfg = EngineConfig(criterion="none", full_vector=True)
        basis, stats = signature_groebner(two_poly, cfg)
        assert len(basis.zero_members) == stats.zero_reductions == 4
        for z in basis.zero_members:
            assert z.poly.is_zero()
            # each kept vector is an exact relation among the inputs
            acc = basis.ring.zero()
            for u_i, f_i in zip(z.vector, basis.inputs):
                acc = acc + u_i * f_i
            assert acc.is_zero()

    def test_zero_reduction_vectors_dropped_otherwise(self, two_poly):
        cfg = EngineConfig(criterion="none", full_vector=False)
        basis, stats = signature_groebner(two_poly, cfg)
        assert stats.zero_reductions == 4
        assert basis.zero_members == []

    @pytest.mark.parametrize("strategy", ["sig", "deg", "fifo"])
    @pytest.mark.parametrize("modorder", ["pot", "schreyer"])
    @pytest.mark.parametrize("full_vector", [True, False])
    def test_reduced_basis_schedule_independent(self, two_poly, strategy, modorder,
                                                full_vector):
        cfg = EngineConfig(strategy=strategy, modorder=modorder,
                           full_vector=full_vector)
        basis, stats = signature_groebner(two_poly, cfg)
        assert [render_poly(f) for f in extract_gb(basis)] == self.EXPECTED_GB
        assert (stats.pairs_generated
                == stats.rejected_nonregular + stats.rejected_criterion
                + stats.reduced)


class TestInputHandling:
    def test_empty_input_list_rejected(self):
        with pytest.raises(ValueError):
            signature_groebner([])

    def test_mixed_rings_rejected(self, gf7_xy):
        other = PolyRing(11, ("x", "y"), TermOrder("grevlex", 2))
        with pytest.raises(DimensionError):
            signature_groebner([gf7_xy.one(), other.one()])

    def test_all_zero_inputs_give_empty_basis(self, gf7_xy):
        basis, stats = signature_groebner([gf7_xy.zero(), gf7_xy.zero()])
        assert len(basis) == 0
        assert stats.pairs_generated == 0
        assert extract_gb(basis) == []

    def test_zero_inputs_dropped(self, gf7_xy, two_poly):
        with_zero = [two_poly[0], gf7_xy.zero(), two_poly[1]]
        basis, stats = signature_groebner(with_zero)
        assert stats.pairs_generated == 6
        assert [render_poly(f) for f in extract_gb(basis)] == TestTwoPolyRun.EXPECTED_GB

    def test_cap_exceeded(self, gf7_xyz):
        gens = [poly_of(gf7_xyz, t) for t in
                ("x + y + z", "x*y + y*z + z*x", "x*y*z - 1")]
        with pytest.raises(CapExceededError):
            signature_groebner(gens, EngineConfig(cap=2))

    def test_verified_run_checks_inserts(self, two_poly):
        cfg = EngineConfig(verify_module=True, full_vector=True)
        basis, _ = signature_groebner(two_poly, cfg)
        assert basis.verified_inserts > 0

    def test_verification_catches_forged_vector(self, gf7_xy, two_poly):
        mo = ModuleOrder.pot(2)
        basis = Basis(gf7_xy, mo, two_poly, full_vector=True, verify=True)
        wrong = LabeledPoly(basis.next_serial(), (0, gf7_xy.order.one_key), 1,
                            two_poly[0],
                            (gf7_xy.one(), gf7_xy.one()))
        with pytest.raises(SoundnessError):
            basis.add_element(wrong)


class TestSigReduce:
    def _single_member_basis(self, gf7_xy, text, full_vector=False, sig_lc=1,
                             vector=None):
        mo = ModuleOrder.pot(1)
        f = poly_of(gf7_xy, text)
        basis = Basis(gf7_xy, mo, [f], full_vector=full_vector)
        lp = LabeledPoly(basis.next_serial(), (0, gf7_xy.order.one_key), sig_lc,
                         f, vector)
        basis.add_element(lp)
        return basis

    def test_reduces_below_signature(self, gf7_xy):
        basis = self._single_member_basis(gf7_xy, "x - y")
        elem = LabeledPoly(None, (0, gf7_xy.order.key((2, 0))), 1,
                           poly_of(gf7_xy, "x^2"))
        out = sig_reduce(elem, basis)
        assert render_poly(out.poly) == "1*y^2"
        assert out.sig == elem.sig

    def test_step_returns_none_at_fixpoint(self, gf7_xy):
        basis = self._single_member_basis(gf7_xy, "x - y")
        elem = LabeledPoly(None, (0, gf7_xy.order.key((2, 0))), 1,
                           poly_of(gf7_xy, "y^2"))
        assert sig_reduce_step(elem, basis) is None

    def test_equal_signature_step_blocked_without_vectors(self, gf7_xy):
        # the only reducer would multiply its signature up to the working
        # one; without label coefficients that step must not happen
        basis = self._single_member_basis(gf7_xy, "x - y")
        elem = LabeledPoly(None, (0, gf7_xy.order.key((1, 0))), 1,
                           poly_of(gf7_xy, "x^2"))
        out = sig_reduce(elem, basis)
        assert render_poly(out.poly) == "1*x^2"

    def test_equal_signature_step_blocked_when_labels_cancel(self, gf7_xy):
        basis = self._single_member_basis(
            gf7_xy, "x - y", full_vector=True, sig_lc=1, vector=(gf7_xy.one(),))
        elem = LabeledPoly(None, (0, gf7_xy.order.key((1, 0))), 1,
                           poly_of(gf7_xy, "x^2"), (poly_of(gf7_xy, "x"),))
        out = sig_reduce(elem, basis)
        assert render_poly(out.poly) == "1*x^2"
        assert out.sig_lc == 1

    def test_equal_signature_step_allowed_when_labels_differ(self, gf7_xy):
        basis = self._single_member_basis(
            gf7_xy, "x - y", full_vector=True, sig_lc=3,
            vector=(gf7_xy.constant(3),))
        elem = LabeledPoly(None, (0, gf7_xy.order.key((1, 0))), 1,
                           poly_of(gf7_xy, "x^2"), (poly_of(gf7_xy, "x"),))
        out = sig_reduce(elem, basis)
        assert render_poly(out.poly) == "1*y^2"
        assert out.sig == elem.sig
        # label coefficient absorbed the cancellation: 1 - 3 = 5 mod 7
        assert out.sig_lc == 5

    def test_reducer_choice_prefers_smaller_multiplied_signature(self, gf7_xy):
        mo = ModuleOrder.pot(1)
        f1 = poly_of(gf7_xy, "x*y + 1")
        f2 = poly_of(gf7_xy, "x^2 - 1")
        basis = Basis(gf7_xy, mo, [f1, f2], full_vector=False)
        o = gf7_xy.order
        v1 = LabeledPoly(basis.next_serial(), (0, o.key((2, 0))), 1, f1)
        v2 = LabeledPoly(basis.next_serial(), (0, o.one_key), 1, f2)
        basis.add_element(v1)
        basis.add_element(v2)
        elem = LabeledPoly(None, (0, o.key((3, 1))), 1, poly_of(gf7_xy, "x^2*y"))
        out = sig_reduce_step(elem, basis)
        # v2 multiplies to y*e1, far below x^3*e1 from v1: x^2*y - y*(x^2-1) = y
        assert render_poly(out.poly) == "1*y"

    def test_reducer_choice_breaks_ties_by_serial(self, gf7_xy):
        mo = ModuleOrder.pot(1)
        f1 = poly_of(gf7_xy, "x^2 + 1")
        f2 = poly_of(gf7_xy, "x*y + 1")
        basis = Basis(gf7_xy, mo, [f1, f2], full_vector=False)
        o = gf7_xy.order
        # both reducers multiply their signature to exactly x*y*e1
        v1 = LabeledPoly(basis.next_serial(), (0, o.key((1, 0))), 1, f1)
        v2 = LabeledPoly(basis.next_serial(), (0, o.key((0, 1))), 1, f2)
        basis.add_element(v1)
        basis.add_element(v2)
        elem = LabeledPoly(None, (0, o.key((2, 2))), 1, poly_of(gf7_xy, "x^2*y"))
        out = sig_reduce_step(elem, basis)
        # the earlier arrival wins the tie: x^2*y - y*(x^2+1) = -y
        assert render_poly(out.poly) == "6*y"


class TestInterreduce:
    def test_divisible_leads_dropped_and_monic(self, gf7_xy):
        polys = [poly_of(gf7_xy, "2*x"), poly_of(gf7_xy, "x^2")]
        assert [render_poly(f) for f in interreduce(polys)] == ["1*x"]

    def test_tails_fully_reduced(self, gf7_xy):
        polys = [poly_of(gf7_xy, "x + y"), poly_of(gf7_xy, "y + 1")]
        out = interreduce(polys)
        assert [render_poly(f) for f in out] == ["1*y + 1", "1*x + 6"]

    def test_idempotent(self, gf7_xyz):
        polys = [poly_of(gf7_xyz, t) for t in
                 ("x^2 - y", "x*y - z", "3*y^2 + x", "y^2 + 2*z")]
        once = interreduce(polys)
        assert interreduce(once) == once

    def test_zero_members_ignored(self, gf7_xy):
        assert interreduce([gf7_xy.zero()]) == []
        assert interreduce([]) == []

    def test_sorted_by_ascending_lead(self, gf7_xyz):
        polys = [poly_of(gf7_xyz, t) for t in ("z^2 - 1", "y - z", "x^3 - z")]
        out = interreduce(polys)
        keys = [f.lead_key for f in out]
        assert keys == sorted(keys)
