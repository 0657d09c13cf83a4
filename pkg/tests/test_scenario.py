import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from relaycap import (
    MonteCarloConfig,
    Scenario,
    SelfInterferenceModel,
    db_to_linear,
    linear_to_db,
    pathloss_db,
    residual_self_interference,
    sinr_relay,
    snr_dest,
    snr_relay,
)


class TestDbConversions:
    def test_definition_values(self):
        assert db_to_linear(0.0) == 1.0
        assert db_to_linear(10.0) == pytest.approx(10.0, rel=1e-12)
        assert db_to_linear(38.0) == pytest.approx(6309.57344480193, rel=1e-12)

    @given(st.floats(min_value=-300.0, max_value=300.0))
    def test_round_trip(self, x_db):
        assert linear_to_db(db_to_linear(x_db)) == pytest.approx(x_db, rel=1e-12, abs=1e-12)

    def test_rejects_non_finite(self):
        for bad in (math.inf, -math.inf, math.nan):
            with pytest.raises(ValueError):
                db_to_linear(bad)

    def test_linear_to_db_rejects_non_positive(self):
        with pytest.raises(ValueError):
            linear_to_db(0.0)
        with pytest.raises(ValueError):
            linear_to_db(-1.0)


class TestPathloss:
    def test_values(self):
        assert pathloss_db(0.0, 1.0, 3.0) == pytest.approx(0.0, abs=1e-12)
        assert pathloss_db(20.0, 10.0, 2.0) == pytest.approx(40.0, rel=1e-12)
        assert pathloss_db(10.0, 100.0, 3.5) == pytest.approx(80.0, rel=1e-12)

    def test_rejects_non_positive_distance(self):
        with pytest.raises(ValueError):
            pathloss_db(0.0, 0.0, 2.0)
        with pytest.raises(ValueError):
            pathloss_db(0.0, -3.0, 2.0)


class TestLinkBudgets:
    def test_snr_relay_reference_constants(self, make_scenario):
        # P_S = 10 dB over a 50 dB path loss with 1e-5 W noise.
        assert snr_relay(make_scenario()) == pytest.approx(10.0, rel=1e-12)

    def test_snr_relay_identity(self, make_scenario):
        s = make_scenario(p_s_db=0.0, pathloss_sr_db=0.0, noise_r_db=0.0)
        assert snr_relay(s) == pytest.approx(1.0, rel=1e-12)

    def test_snr_relay_linearity(self, make_scenario):
        s = make_scenario()
        doubled = make_scenario(p_s_db=10.0 + 10.0 * math.log10(2.0))
        assert snr_relay(doubled) == pytest.approx(2.0 * snr_relay(s), rel=1e-12)

    def test_snr_dest_reference_constants(self, make_scenario):
        assert snr_dest(make_scenario(), 10.0) == pytest.approx(10.0, rel=1e-12)

    def test_snr_dest_vanishes_with_power(self, make_scenario):
        s = make_scenario()
        assert snr_dest(s, 0.0) == 0.0
        assert snr_dest(s, 1e-9) < 1e-8

    def test_snr_dest_pathloss_linearity(self, make_scenario):
        s = make_scenario()
        attenuated = make_scenario(pathloss_rd_db=60.0)
        assert snr_dest(attenuated, 10.0) == pytest.approx(snr_dest(s, 10.0) / 10.0, rel=1e-12)

    def test_snr_dest_rejects_over_budget(self, make_scenario):
        s = make_scenario(p_r_db=10.0)  # 10 W budget
        with pytest.raises(ValueError):
            snr_dest(s, 10.5)
        # at most a hair over budget is tolerated (numerical slack)
        assert snr_dest(s, 10.0) > 0.0


class TestResidualSelfInterference:
    def test_power_independent_when_lambda_one(self):
        model = SelfInterferenceModel(lambda_=1.0, beta_db=20.0, mu_db=10.0)
        expected = 1.0 / (100.0 * 10.0)
        assert residual_self_interference(model, 1.0) == pytest.approx(expected, rel=1e-12)
        assert residual_self_interference(model, 123.4) == pytest.approx(expected, rel=1e-12)

    def test_linear_when_lambda_zero(self):
        model = SelfInterferenceModel(lambda_=0.0, beta_db=10.0, mu_db=0.0)
        assert residual_self_interference(model, 5.0) == pytest.approx(0.5, rel=1e-12)

    def test_reference_constants(self):
        # lambda 0.2, beta 38 dB, mu 13 dB at 10 W: 10^0.8 / (10^3.8 * 10^0.26)
        model = SelfInterferenceModel(lambda_=0.2, beta_db=38.0, mu_db=13.0)
        expected = 10.0 ** (0.8 - 3.8 - 0.26)
        assert residual_self_interference(model, 10.0) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(5.495408738576e-4, rel=1e-10)

    def test_rejects_non_positive_power(self):
        model = SelfInterferenceModel(lambda_=0.5, beta_db=30.0, mu_db=10.0)
        for bad in (0.0, -1.0):
            with pytest.raises(ValueError):
                residual_self_interference(model, bad)

    @given(
        lam=st.floats(min_value=0.0, max_value=1.0),
        p=st.floats(min_value=1e-6, max_value=1e6),
        a=st.floats(min_value=1e-3, max_value=1e3),
    )
    def test_multiplicative_homogeneity(self, lam, p, a):
        model = SelfInterferenceModel(lambda_=lam, beta_db=38.0, mu_db=13.0)
        lhs = residual_self_interference(model, a * p)
        rhs = a ** (1.0 - lam) * residual_self_interference(model, p)
        assert lhs == pytest.approx(rhs, rel=1e-9)


class TestSinrRelay:
    def test_reference_constants(self, make_scenario):
        s = make_scenario()
        sinr = sinr_relay(s, 10.0)
        interference = 10.0 ** (0.8 - 3.8 - 0.26)
        assert sinr == pytest.approx(10.0 / (1e5 * (interference + 1e-5)), rel=1e-12)
        assert sinr == pytest.approx(0.178718, rel=1e-5)

    def test_bounded_by_snr(self, make_scenario):
        s = make_scenario()
        for p in (0.01, 0.1, 1.0, 10.0):
            assert sinr_relay(s, p) < snr_relay(s)

    def test_approaches_snr_with_perfect_suppression(self, make_scenario):
        s = make_scenario(beta_db=500.0)
        assert sinr_relay(s, 10.0) == pytest.approx(snr_relay(s), rel=1e-9)

    def test_monotone_in_power_below_lambda_one(self, make_scenario):
        s = make_scenario(lambda_=0.2)
        assert sinr_relay(s, 2.0) < sinr_relay(s, 1.0)

    def test_constant_in_power_at_lambda_one(self, make_scenario):
        s = make_scenario(lambda_=1.0)
        assert sinr_relay(s, 1.0) == sinr_relay(s, 10.0)


class TestValidation:
    def test_antenna_counts(self, make_scenario):
        for field in ("n_s", "n_r", "n_d"):
            with pytest.raises(ValueError, match=field):
                make_scenario(**{field: 0})

    def test_non_finite_db_fields(self, make_scenario):
        with pytest.raises(ValueError, match="p_s_db"):
            make_scenario(p_s_db=math.nan)
        with pytest.raises(ValueError, match="pathloss_rd_db"):
            make_scenario(pathloss_rd_db=math.inf)

    def test_lambda_range(self):
        with pytest.raises(ValueError, match="si_lambda"):
            SelfInterferenceModel(lambda_=1.5, beta_db=38.0, mu_db=13.0)
        with pytest.raises(ValueError, match="si_lambda"):
            SelfInterferenceModel(lambda_=-0.1, beta_db=38.0, mu_db=13.0)

    def test_monte_carlo_config(self):
        with pytest.raises(ValueError, match="mc_samples"):
            MonteCarloConfig(n_samples=0)
        with pytest.raises(ValueError, match="mc_seed"):
            MonteCarloConfig(seed=-1)
        with pytest.raises(ValueError, match="mc_seed"):
            MonteCarloConfig(seed=2**64)

    def test_linear_properties_positive(self, make_scenario):
        s = make_scenario()
        assert s.p_s_w > 0 and s.p_r_w > 0
        assert s.noise_r_w > 0 and s.noise_d_w > 0
        assert s.pathloss_sr > 0 and s.pathloss_rd > 0
