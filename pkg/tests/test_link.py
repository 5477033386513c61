"""SNR routes (explicit complex sum vs co-phased closed form) and harvest model."""

import cmath
import math

import numpy as np
import pytest

from risharvest import (
    ReflectionState,
    absorbed_power_element,
    default_scenario,
    element_grid,
    harvested_power,
    link_report,
    snr_cophased,
    snr_explicit,
)
from risharvest.geometry import (
    center_distances,
    departure_angle,
    element_distances,
    incidence_angle,
)
from risharvest.link import element_gain, path_phase_rad, phase_mod_2pi


def co_phased_state(r1h_m, a, scenario):
    grid = element_grid(scenario)
    psi = path_phase_rad(r1h_m, grid, scenario)
    return ReflectionState(amplitudes=np.full(grid.shape, a), phases=-psi)


# ------------------------------------------------------------ reflection state


def test_reflection_state_validation():
    with pytest.raises(ValueError, match="shape"):
        ReflectionState(amplitudes=np.zeros((2, 2)), phases=np.zeros((2, 3)))
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        ReflectionState(amplitudes=np.full((1, 1), 1.5), phases=np.zeros((1, 1)))
    with pytest.raises(ValueError, match="finite"):
        ReflectionState(amplitudes=np.ones((1, 1)), phases=np.full((1, 1), np.nan))


def test_element_gain_values():
    assert element_gain(0.0) == 4.0
    assert element_gain(math.pi / 3) == pytest.approx(2.0, rel=1e-15)


def test_phase_mod_2pi():
    assert phase_mod_2pi(-math.pi) == pytest.approx(math.pi, rel=1e-15)
    assert phase_mod_2pi(5 * math.pi) == pytest.approx(math.pi, rel=1e-12)


# -------------------------------------------------------------- explicit SNR


def test_zero_amplitudes_zero_snr(scenario):
    state = ReflectionState(
        amplitudes=np.zeros((50, 50)), phases=np.zeros((50, 50))
    )
    assert snr_explicit(10.0, state, scenario) == 0.0


def test_shape_mismatch_rejected(scenario):
    state = ReflectionState(amplitudes=np.ones((2, 2)), phases=np.zeros((2, 2)))
    with pytest.raises(ValueError, match="shape"):
        snr_explicit(10.0, state, scenario)


def test_cophased_sum_is_coherent(scenario):
    # path-cancelling phases collapse the sum to |M_s * A|^2
    for r1h, a in ((1.0, 1.0), (10.0, 0.5), (60.0, 0.9)):
        explicit = snr_explicit(r1h, co_phased_state(r1h, a, scenario), scenario)
        closed = snr_cophased(r1h, a, scenario)
        assert explicit == pytest.approx(closed, rel=1e-9)


def test_2x2_matches_handrolled_oracle(tiny_scenario):
    rng = np.random.default_rng(7)
    grid = element_grid(tiny_scenario)
    lam = tiny_scenario.wavelength_m
    r1, r2 = center_distances(3.0, tiny_scenario)
    th_i = incidence_angle(3.0, tiny_scenario)
    th_r = departure_angle(3.0, tiny_scenario)
    r1pl, r2pl = element_distances(3.0, grid, tiny_scenario)
    const = (
        (lam / (4 * math.pi)) ** 4
        * tiny_scenario.transmit_power_w
        * tiny_scenario.tx_gain
        * tiny_scenario.rx_gain
        * (4 * math.cos(th_i))
        * (4 * math.cos(th_r))
        / (r1**2 * r2**2 * tiny_scenario.noise_w)
    )
    for _ in range(25):
        amps = rng.uniform(0, 1, size=(2, 2))
        phases = rng.uniform(-10, 10, size=(2, 2))
        total = 0 + 0j
        for p in range(2):
            for l in range(2):
                phase = phases[p, l] + 2 * math.pi * (r1pl[p, l] + r2pl[p, l]) / lam
                total += amps[p, l] * cmath.exp(-1j * phase)
        expected = const * abs(total) ** 2
        state = ReflectionState(amplitudes=amps, phases=phases)
        assert snr_explicit(3.0, state, tiny_scenario) == pytest.approx(expected, rel=1e-12)


def test_random_phases_never_beat_cophased(scenario):
    # Cauchy-Schwarz: any phase profile is bounded by the coherent sum
    rng = np.random.default_rng(11)
    best = snr_cophased(10.0, 0.8, scenario)
    for _ in range(20):
        state = ReflectionState(
            amplitudes=np.full((50, 50), 0.8),
            phases=rng.uniform(0, 2 * math.pi, size=(50, 50)),
        )
        assert snr_explicit(10.0, state, scenario) <= best * (1 + 1e-12)


def test_pairwise_sum_agrees_with_fsum(scenario):
    # 2500-term reduction stays within float accumulation noise of exact fsum
    rng = np.random.default_rng(23)
    amps = rng.uniform(0, 1, size=(50, 50))
    phases = rng.uniform(0, 2 * math.pi, size=(50, 50))
    grid = element_grid(scenario)
    psi = path_phase_rad(10.0, grid, scenario)
    angle = phases + psi
    re = math.fsum((amps * np.cos(-angle)).ravel().tolist())
    im = math.fsum((amps * np.sin(-angle)).ravel().tolist())
    state = ReflectionState(amplitudes=amps, phases=phases)
    got = snr_explicit(10.0, state, scenario)
    zero = ReflectionState(amplitudes=np.ones((50, 50)), phases=-psi)
    const = snr_explicit(10.0, zero, scenario) / scenario.m_s**2
    assert got == pytest.approx(const * (re**2 + im**2), rel=1e-10)


# -------------------------------------------------------------- co-phased SNR


def test_cophased_zero_amplitude(scenario):
    assert snr_cophased(10.0, 0.0, scenario) == 0.0


def test_cophased_amplitude_out_of_range(scenario):
    with pytest.raises(ValueError):
        snr_cophased(10.0, 1.2, scenario)


def test_cophased_quadratic_in_amplitude(scenario):
    for a in (0.2, 0.5, 0.9, 1.0):
        assert snr_cophased(5.0, a, scenario) / snr_cophased(5.0, a / 2, scenario) == 4.0


# ----------------------------------------------------------------- absorption


def test_full_reflection_absorbs_nothing(scenario):
    assert absorbed_power_element(1.0, 10.0, scenario) == 0.0


def test_absorbed_power_table_point(scenario):
    lam = scenario.wavelength_m
    r1, _ = center_distances(10.0, scenario)
    th_i = incidence_angle(10.0, scenario)
    expected = (
        (lam / (4 * math.pi)) ** 2
        * scenario.transmit_power_w
        * scenario.tx_gain
        * 4
        * math.cos(th_i)
        / r1**2
    )
    got = absorbed_power_element(0.0, 10.0, scenario)
    assert got == pytest.approx(expected, rel=1e-12)
    assert got == pytest.approx(2.6634817900711117e-05, rel=1e-12)


def test_power_split_identity(scenario):
    p_inc = absorbed_power_element(0.0, 10.0, scenario)
    for a in (0.1, 0.5, 0.99):
        p_abs = absorbed_power_element(a, 10.0, scenario)
        assert p_abs + a * a * p_inc == pytest.approx(p_inc, rel=1e-12)


# -------------------------------------------------------------------- harvest


def test_full_reflection_harvests_nothing(scenario):
    assert harvested_power(10.0, np.ones((50, 50)), scenario) == 0.0


def test_uniform_harvest_collapse(scenario):
    for a in (0.0, 0.3, 0.9):
        total = harvested_power(10.0, np.full((50, 50), a), scenario)
        single = absorbed_power_element(a, 10.0, scenario)
        assert total == pytest.approx(
            scenario.m_s * scenario.conversion_efficiency * single, rel=1e-12
        )


def test_harvest_ceiling_near_tx(scenario):
    # term-by-term oracle at the foot of the surface, full absorption
    lam = scenario.wavelength_m
    total = 0.0
    for _ in range(scenario.m_s):
        r1sq = scenario.lateral_offset_m**2 + (scenario.ris_height_m - scenario.tx_height_m) ** 2
        cos_ti = scenario.lateral_offset_m / math.sqrt(r1sq)
        total += (
            scenario.conversion_efficiency
            * (lam / (4 * math.pi)) ** 2
            * scenario.transmit_power_w
            * scenario.tx_gain
            * 4
            * cos_ti
            / r1sq
        )
    got = harvested_power(0.0, np.zeros((50, 50)), scenario)
    assert got == pytest.approx(total, rel=1e-9)
    assert got == pytest.approx(0.10823881367070927, rel=1e-9)
    assert 0.05 < got < 0.2


def test_harvest_monotone_in_amplitude(scenario):
    rng = np.random.default_rng(3)
    amps = rng.uniform(0, 1, size=(50, 50))
    lower = harvested_power(10.0, amps, scenario)
    ceiling = harvested_power(10.0, np.zeros((50, 50)), scenario)
    assert 0.0 <= lower <= ceiling


# ---------------------------------------------------------------- link report


def test_link_report_consistency(scenario):
    state = co_phased_state(10.0, 0.9, scenario)
    rep = link_report(10.0, state, scenario, per_element=True)
    assert rep.snr_linear == snr_explicit(10.0, state, scenario)
    assert rep.snr_db == pytest.approx(10 * math.log10(rep.snr_linear), rel=1e-12)
    assert rep.p_harv_w == harvested_power(10.0, state.amplitudes, scenario)
    assert rep.p_abs_per_element_w.shape == (50, 50)
    total = scenario.conversion_efficiency * rep.p_abs_per_element_w.sum()
    assert rep.p_harv_w == pytest.approx(total, rel=1e-12)


def test_link_report_zero_state(scenario):
    state = ReflectionState(amplitudes=np.zeros((50, 50)), phases=np.zeros((50, 50)))
    rep = link_report(10.0, state, scenario)
    assert rep.snr_linear == 0.0
    assert rep.snr_db == float("-inf")
    assert rep.p_abs_per_element_w is None
