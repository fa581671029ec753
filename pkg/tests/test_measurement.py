import numpy as np
import pytest
from hypothesis import given, strategies as st

from ergoengine.core import validate_kraus
from ergoengine.errors import InvalidStrength
from ergoengine.measurement import (
    C0_MAX,
    MeasurementSpec,
    build_kraus,
    channel_post_probs,
    post_probs,
    projective_post_probs,
    xx_post_probs,
    xz_projective_post_probs,
    zz_post_probs,
)

from conftest import thermal

probs = st.lists(st.floats(1e-3, 1.0), min_size=4, max_size=4).map(lambda w: np.array(w) / sum(w))
strengths = st.floats(0.0, C0_MAX)
angles = st.tuples(st.floats(0, np.pi), st.floats(0, 2 * np.pi))


class TestBuildKraus:
    def test_projective_zz_factors_are_projectors(self):
        ks = build_kraus(MeasurementSpec(0.5))
        for m in ks.operators:
            np.testing.assert_allclose(m @ m, m, atol=1e-15)
            assert np.linalg.matrix_rank(m) == 1

    def test_identity_limit(self):
        for m in build_kraus(MeasurementSpec(C0_MAX)).operators:
            np.testing.assert_allclose(m, np.eye(4) / 2, atol=1e-15)

    @given(strengths, angles, angles)
    def test_complete_and_hermitian(self, c0, a, b):
        ks = build_kraus(MeasurementSpec(c0, a, b))
        assert validate_kraus(ks)
        for m in ks.operators:
            np.testing.assert_allclose(m, m.conj().T, atol=1e-12)

    @pytest.mark.parametrize("c0", [-0.1, 0.71, float("nan")])
    def test_invalid_strength(self, c0):
        with pytest.raises(InvalidStrength):
            MeasurementSpec(c0)


class TestZZ:
    def test_trivial(self, thermal_p):
        np.testing.assert_array_equal(zz_post_probs(thermal_p, 0.0), thermal_p)

    def test_projective_equalizes(self, thermal_p):
        out = zz_post_probs(thermal_p, 0.5)
        mid = (thermal_p[0] + thermal_p[2]) / 2
        assert out[0] == pytest.approx(mid, abs=1e-15)
        assert out[2] == pytest.approx(mid, abs=1e-15)

    def test_matches_channel(self, thermal_p):
        np.testing.assert_allclose(
            zz_post_probs(thermal_p, 0.3), channel_post_probs(thermal_p, MeasurementSpec(0.3)), atol=1e-12
        )

    @given(probs, strengths)
    def test_equivalence_and_gap(self, p, c0):
        out = zz_post_probs(p, c0)
        np.testing.assert_allclose(out, channel_post_probs(p, MeasurementSpec(c0)), atol=1e-12)
        assert out.sum() == pytest.approx(1, abs=1e-12)
        assert out[0] - out[2] == pytest.approx((4 * c0**2 - 1) ** 2 * (p[0] - p[2]), abs=1e-12)


class TestXX:
    def test_identity_limit(self, thermal_p):
        np.testing.assert_allclose(xx_post_probs(thermal_p, C0_MAX), thermal_p, atol=1e-15)

    def test_projective(self, thermal_p):
        d = thermal_p[0] - thermal_p[2]
        np.testing.assert_allclose(xx_post_probs(thermal_p, 0.5), [0.25 + d / 4, 0.25, 0.25 - d / 4, 0.25], atol=1e-15)

    def test_matches_channel(self, thermal_p):
        np.testing.assert_allclose(
            xx_post_probs(thermal_p, 0.3), channel_post_probs(thermal_p, MeasurementSpec.preset("xx", 0.3)), atol=1e-12
        )

    @given(probs, strengths)
    def test_equivalence(self, p, c0):
        out = xx_post_probs(p, c0)
        np.testing.assert_allclose(out, channel_post_probs(p, MeasurementSpec.preset("xx", c0)), atol=1e-12)
        assert out.sum() == pytest.approx(1, abs=1e-12)

    @pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
    def test_ordering_facts(self, beta):
        p = thermal(3, 1, beta)
        for c0 in np.linspace(0.0, C0_MAX, 41)[:-1]:
            out = xx_post_probs(p, c0)
            assert out[0] > out[2]
            if c0 < 0.5 - 1e-9:
                assert out[1] < out[3]
            elif c0 > 0.5 + 1e-9:
                assert out[1] > out[3]


class TestProjective:
    def test_zz_keeps_levels_2_and_4(self, thermal_p):
        out = projective_post_probs(thermal_p, (0, 0), (0, 0))
        assert out[1] == pytest.approx(thermal_p[1], abs=1e-15)
        assert out[3] == pytest.approx(thermal_p[3], abs=1e-15)

    @pytest.mark.parametrize("phis", [(0, 0), (0, np.pi / 2), (1.3, 4.0), (np.pi, 0.2)])
    def test_xy_plane_equalizes_2_and_4(self, thermal_p, phis):
        out = projective_post_probs(thermal_p, (np.pi / 2, phis[0]), (np.pi / 2, phis[1]))
        assert out[1] == pytest.approx(out[3], abs=1e-12)

    def test_xy_uniform(self, thermal_p):
        out = projective_post_probs(thermal_p, (np.pi / 2, 0), (np.pi / 2, np.pi / 2))
        np.testing.assert_allclose(out, 0.25, atol=1e-12)

    @given(probs, angles, angles)
    def test_gap_identity(self, p, a, b):
        out = projective_post_probs(p, a, b)
        gap = 0.5 * (np.cos(a[0]) ** 2 + np.cos(b[0]) ** 2) * (p[1] - p[3])
        assert out[1] - out[3] == pytest.approx(gap, abs=1e-12)


class TestXZ:
    def test_thermal_structure(self, thermal_p):
        out = xz_projective_post_probs(thermal_p)
        assert out[0] == pytest.approx(0.25, abs=1e-12)
        assert out[2] == pytest.approx(0.25, abs=1e-12)
        assert out[1] > 0.25 > out[3]

    def test_uniform_fixed_point(self):
        np.testing.assert_allclose(xz_projective_post_probs(np.full(4, 0.25)), 0.25, atol=1e-15)


def test_post_probs_dispatch(thermal_p):
    zz = MeasurementSpec.preset("zz", 0.3)
    assert zz.axis_kind() == "zz"
    assert MeasurementSpec.preset("xx", 0.3).axis_kind() == "xx"
    assert MeasurementSpec.preset("xz", 0.3).axis_kind() is None
    np.testing.assert_array_equal(post_probs(thermal_p, zz), zz_post_probs(thermal_p, 0.3))
    np.testing.assert_allclose(post_probs(thermal_p, zz, method="channel"), zz_post_probs(thermal_p, 0.3), atol=1e-15)
    with pytest.raises(ValueError):
        post_probs(thermal_p, zz, method="nope")
