import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ergoengine import analytics as an
from ergoengine.cycle import FIVE, FOUR, THREE, run_cycle, run_five_stroke, run_four_stroke, run_three_stroke, verify_work_identity
from ergoengine.ergotropy import PASSIVE, R1, R2
from ergoengine.measurement import C0_MAX, MeasurementSpec, zz_post_probs
from ergoengine.model import EngineParams
from ergoengine.sweep import build_inputs, random_point

from conftest import thermal

REF = EngineParams(3.5, 3.0, 1.0, 1.0)


def zz(c0):
    return MeasurementSpec.preset("zz", c0)


class TestLedger:
    def test_kinds(self):
        assert run_five_stroke(REF, zz(0.5)).cycle_kind == FIVE
        assert run_four_stroke(REF, zz(0.5)).cycle_kind == FOUR
        assert run_three_stroke(REF, zz(0.5)).cycle_kind == THREE

    def test_run_cycle_dispatch(self):
        assert run_cycle("Five", REF, zz(0.5)).w_total == run_five_stroke(REF, zz(0.5)).w_total
        with pytest.raises(ValueError):
            run_cycle("six", REF, zz(0.5))

    @given(st.integers(0, 2**32 - 1))
    def test_conservation(self, seed):
        params, spec = build_inputs(random_point(np.random.default_rng(seed)))
        for run in (run_five_stroke, run_four_stroke, run_three_stroke):
            L = run(params, spec)
            assert L.conservation_residual < 1e-12
            np.testing.assert_allclose(L.p_final.sum(), 1.0, atol=1e-12)

    def test_as_dict(self):
        d = run_five_stroke(REF, zz(0.5)).as_dict()
        assert d["ordering"] == R1 and d["is_engine"] is True
        assert set(d) >= {"w1", "q_m", "w_erg", "w2", "q_res", "w_total", "eta"}


class TestZZClosedForms:
    def test_reference_values(self):
        L = run_five_stroke(REF, zz(0.5))
        assert L.eta == pytest.approx(0.54743231519906328, rel=1e-12)
        assert L.q_m == pytest.approx(3.5209634801873943, rel=1e-12)
        assert L.w_total == pytest.approx(1.9274891896903364, rel=1e-12)
        assert L.ordering.tag == R1
        assert L.coherence == 0.0

    @pytest.mark.parametrize("c0", [0.25, 0.4, 0.5, 0.6])
    def test_strokes(self, c0):
        L = run_five_stroke(REF, zz(c0))
        p, p_pm = L.p, L.p_pm
        B1, B2, J = REF.B1, REF.B2, REF.J
        assert L.ordering.tag == R1
        assert L.w1 == pytest.approx(an.w1_zz(p, B1, B2), abs=1e-13)
        assert L.q_m == pytest.approx(an.qm_zz(p, p_pm, J), abs=1e-13)
        assert L.w_erg == pytest.approx(an.werg_r1(p, p_pm, B1), abs=1e-13)
        assert L.w2 == pytest.approx(an.w2_r1(p, p_pm, B1, B2), abs=1e-13)
        assert L.q_res == pytest.approx(an.qres_r1(p, p_pm, B2, J), abs=1e-13)
        assert L.w_total == pytest.approx(an.wt5_r1(p, p_pm, B2), abs=1e-13)
        assert L.eta == pytest.approx(an.eta_r1(B2, J, REF.beta, c0), abs=1e-12)

    def test_r2(self):
        params = EngineParams(3.9, 3.9, 1.0, 1.0)
        L = run_five_stroke(params, zz(0.5))
        assert L.ordering.tag == R2
        assert L.w_total == pytest.approx(an.wt5_r2(L.p, L.p_pm, 3.9, 1.0), abs=1e-13)
        assert L.eta == pytest.approx(an.eta_r2(L.p, L.p_pm, 3.9, 1.0), abs=1e-12)

    def test_four_stroke_no_work(self):
        for c0 in np.linspace(0, C0_MAX, 41):
            assert abs(run_four_stroke(REF, zz(c0)).w_total) < 1e-12

    def test_three_stroke_equals_five(self):
        # z-z four-stroke work vanishes, so the identity makes W3 = W5
        for c0 in (0.3, 0.5):
            assert run_three_stroke(REF, zz(c0)).w_total == pytest.approx(run_five_stroke(REF, zz(c0)).w_total, abs=1e-12)

    def test_eta_independent_of_b1(self):
        etas = [run_five_stroke(EngineParams(b1, 3.0, 1.0, 1.0), zz(0.4)).eta for b1 in (3.0, 3.3, 3.6, 3.99)]
        np.testing.assert_allclose(etas, etas[0], atol=1e-12)

    def test_argmax_at_half(self):
        c0 = np.linspace(0.01, C0_MAX, 201)
        etas = [run_five_stroke(REF, zz(c)).eta for c in c0]
        assert c0[int(np.nanargmax(etas))] == pytest.approx(0.5, abs=C0_MAX / 200)

    def test_trivial_measurement_not_engine(self):
        L = run_five_stroke(REF, zz(0.0))
        assert L.ordering.tag == PASSIVE
        assert not L.is_engine
        assert math.isnan(L.eta)


class TestXX:
    def test_projective_closed_forms(self):
        spec = MeasurementSpec.preset("xx", 0.5)
        p = thermal(REF.B2, REF.J, REF.beta)
        ref = an.xx_projective_energetics(p, REF.B1, REF.B2, REF.J)
        five = run_five_stroke(REF, spec)
        assert five.q_m == pytest.approx(ref.q_m, abs=1e-13)
        assert five.w_erg == pytest.approx(ref.w_erg, abs=1e-13)
        assert five.w_total == pytest.approx(ref.w_total5, abs=1e-13)
        assert run_four_stroke(REF, spec).w_total == pytest.approx(ref.w_total4, abs=1e-13)
        assert run_three_stroke(REF, spec).w_total == pytest.approx(ref.w_total3, abs=1e-13)
        assert five.coherence > 0.1

    def test_xz_projective_closed_forms(self):
        spec = MeasurementSpec.preset("xz", 0.5)
        p = thermal(REF.B2, REF.J, REF.beta)
        ref = an.xz_projective_energetics(p, REF.B1, REF.B2, REF.J)
        five = run_five_stroke(REF, spec)
        assert five.q_m == pytest.approx(ref.q_m, abs=1e-13)
        assert five.w_total == pytest.approx(ref.w_total5, abs=1e-13)
        assert run_four_stroke(REF, spec).w_total == pytest.approx(ref.w_total4, abs=1e-13)
        assert run_three_stroke(REF, spec).w_total == pytest.approx(ref.w_total3, abs=1e-13)

    def test_unitary_flip_at_c0_zero(self):
        # c0 = 0 makes the x-x channel a sigma_x flip of both spins: nothing reaches the reservoir
        L = run_five_stroke(REF, MeasurementSpec.preset("xx", 0.0))
        assert L.q_res == pytest.approx(0.0, abs=1e-12)
        assert L.eta == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("name", ["xx", "xz", "xy"])
    def test_channel_matches_auto(self, name):
        for c0 in (0.1, 0.35, 0.5, 0.65):
            spec = MeasurementSpec.preset(name, c0)
            a = run_five_stroke(REF, spec)
            b = run_five_stroke(REF, spec, method="channel")
            np.testing.assert_allclose(a.p_pm, b.p_pm, atol=1e-12)
            assert a.w_total == pytest.approx(b.w_total, abs=1e-12)

    def test_xy_projective_passive(self):
        L = run_five_stroke(REF, MeasurementSpec.preset("xy", 0.5))
        np.testing.assert_allclose(L.p_pm, 0.25, atol=1e-12)
        assert L.w_erg == 0.0 and L.ordering.tag == PASSIVE


def test_three_stroke_field_value():
    L = run_three_stroke(REF, zz(0.5), field_value=REF.B1)
    np.testing.assert_allclose(L.p, thermal(REF.B1, REF.J, REF.beta), rtol=1e-13)
    assert L.w_total == -L.w_erg


def test_work_identity_random(rng):
    worst = 0.0
    for _ in range(300):
        params, spec = build_inputs(random_point(rng))
        chk = verify_work_identity(params, spec)
        worst = max(worst, chk.residual)
    assert worst < 1e-9


def test_sign_structure(rng):
    for _ in range(300):
        params, spec = build_inputs(random_point(rng))
        L = run_five_stroke(params, spec)
        assert L.w_erg <= 0.0
        assert L.q_m >= -1e-12
        if L.is_engine and spec.c0 > 0.0:
            assert L.q_m > 0
            assert L.q_res < 1e-12
