import pytest

from relaycap import MonteCarloConfig, Scenario, SelfInterferenceModel


@pytest.fixture
def make_scenario():
    """Factory for scenarios; defaults match the standard single-antenna setup
    (10 dB source power, 50 dB path losses, -50 dB noise, beta 38 dB, mu 13 dB)
    which gives SNR_R = 10 at the relay."""

    def factory(
        n_s=1,
        n_r=2,
        n_d=1,
        p_s_db=10.0,
        p_r_db=10.0,
        noise_r_db=-50.0,
        noise_d_db=-50.0,
        pathloss_sr_db=50.0,
        pathloss_rd_db=50.0,
        lambda_=0.2,
        beta_db=38.0,
        mu_db=13.0,
        n_samples=2000,
        seed=0,
    ):
        return Scenario(
            n_s=n_s,
            n_r=n_r,
            n_d=n_d,
            p_s_db=p_s_db,
            p_r_db=p_r_db,
            noise_r_db=noise_r_db,
            noise_d_db=noise_d_db,
            pathloss_sr_db=pathloss_sr_db,
            pathloss_rd_db=pathloss_rd_db,
            si=SelfInterferenceModel(lambda_=lambda_, beta_db=beta_db, mu_db=mu_db),
            mc=MonteCarloConfig(n_samples=n_samples, seed=seed),
        )

    return factory
