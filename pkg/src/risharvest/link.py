"""Link budget through the reflecting surface: SNR and harvested power.

Two SNR routes are provided. snr_explicit evaluates the full per-element
complex sum with exact element distances in the phase terms. snr_cophased is
the closed form that assumes per-element phases already co-phase every
contribution and a uniform reflection amplitude. Amplitude terms always use
the center distance and angle for every element (far-field collapse); only
phases keep per-element distances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .scenario import Scenario, db


@dataclass(frozen=True)
class ReflectionState:
    """Per-element reflection coefficients A * exp(-j*phi).

    Amplitudes are accepted on the closed interval [0, 1]; the physical
    constraint is open but the boundary values are the useful limits in
    tests. Phases are stored unwrapped and only ever compared modulo 2*pi.
    """

    amplitudes: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=float)
        ph = np.asarray(self.phases, dtype=float)
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "phases", ph)
        if amp.shape != ph.shape:
            raise ValueError("amplitudes and phases must have the same shape")
        if amp.size and (amp.min() < 0.0 or amp.max() > 1.0):
            raise ValueError("amplitudes must lie in [0, 1]")
        if not np.all(np.isfinite(ph)):
            raise ValueError("phases must be finite")

    @property
    def shape(self):
        return self.amplitudes.shape


@dataclass(frozen=True)
class LinkReport:
    """Evaluated link state at one placement."""

    snr_linear: float
    snr_db: float
    p_harv_w: float
    p_abs_per_element_w: np.ndarray | None = None


def element_gain(theta_rad):
    """Reflective-unit gain pattern 4*cos(theta), valid for theta in [0, pi/2)."""
    return 4.0 * np.cos(theta_rad)


def phase_mod_2pi(phi):
    """Reduce phases to [0, 2*pi) for comparisons."""
    return np.mod(phi, 2.0 * math.pi)


def path_phase_rad(r1h_m: float, grid: geometry.ElementGrid, scenario: Scenario):
    """Per-element propagation phase 2*pi*(r1pl + r2pl)/lambda.

    Shared by snr_explicit and the phase optimizer so that the optimal phases
    cancel this term bitwise, not just approximately.
    """
    r1pl, r2pl = geometry.element_distances(r1h_m, grid, scenario)
    return 2.0 * math.pi * (r1pl + r2pl) / scenario.wavelength_m


def _check_shape(array_shape, scenario: Scenario, what: str):
    expected = (scenario.ris_rows, scenario.ris_cols)
    if tuple(array_shape) != expected:
        raise ValueError(f"{what} shape {tuple(array_shape)} does not match surface {expected}")


def snr_explicit(r1h_m: float, reflection: ReflectionState, scenario: Scenario) -> float:
    """Received SNR with the explicit per-element complex sum.

    snr = (lambda/4pi)^4 * P_t G_t G_r G_s(th_i) G_s(th_r) / (r1^2 r2^2 sigma^2)
          * |sum_pl A_pl exp(-j(phi_pl + 2pi(r1pl + r2pl)/lambda))|^2

    The reduction uses numpy's pairwise summation in a fixed order (single
    partition), so results are reproducible bit-for-bit.
    """
    _check_shape(reflection.shape, scenario, "reflection state")
    lam = scenario.wavelength_m
    r1, r2 = geometry.center_distances(r1h_m, scenario)
    th_i = geometry.incidence_angle(r1h_m, scenario)
    th_r = geometry.departure_angle(r1h_m, scenario)
    const = (
        (lam / (4.0 * math.pi)) ** 4
        * scenario.transmit_power_w * scenario.tx_gain * scenario.rx_gain
        * element_gain(th_i) * element_gain(th_r)
        / (r1 ** 2 * r2 ** 2 * scenario.noise_w)
    )
    psi = path_phase_rad(r1h_m, geometry.element_grid(scenario), scenario)
    terms = reflection.amplitudes * np.exp(-1j * (reflection.phases + psi))
    total = np.sum(terms)
    return float(const * (total.real ** 2 + total.imag ** 2))


def snr_cophased(r1h_m: float, uniform_a: float, scenario: Scenario) -> float:
    """Received SNR when all elements are co-phased at uniform amplitude.

    Closed form 16 * P_t G_t G_r (lambda/4pi)^4 M_s^2 A^2
    * cos(th_i) cos(th_r) / (r1^2 r2^2 sigma^2); the 16 absorbs both element
    gains. Computed as base * A^2 so the quadratic amplitude law is exact.
    """
    if not 0.0 <= uniform_a <= 1.0:
        raise ValueError("uniform_a must lie in [0, 1]")
    lam = scenario.wavelength_m
    r1, r2 = geometry.center_distances(r1h_m, scenario)
    th_i = geometry.incidence_angle(r1h_m, scenario)
    th_r = geometry.departure_angle(r1h_m, scenario)
    base = (
        16.0 * scenario.transmit_power_w * scenario.tx_gain * scenario.rx_gain
        * (lam / (4.0 * math.pi)) ** 4 * float(scenario.m_s) ** 2
        * math.cos(th_i) * math.cos(th_r)
        / (r1 ** 2 * r2 ** 2 * scenario.noise_w)
    )
    return base * (uniform_a * uniform_a)


def absorbed_power_element(a: float, r1h_m: float, scenario: Scenario) -> float:
    """Power absorbed by one element at reflection amplitude a.

    (1 - a^2) * (lambda/4pi)^2 * P_t G_t * 4 cos(th_i) / r1^2, with the center
    distance and incidence angle standing in for every element.
    """
    lam = scenario.wavelength_m
    r1, _ = geometry.center_distances(r1h_m, scenario)
    th_i = geometry.incidence_angle(r1h_m, scenario)
    p_inc = (
        (lam / (4.0 * math.pi)) ** 2
        * scenario.transmit_power_w * scenario.tx_gain
        * element_gain(th_i) / (r1 ** 2)
    )
    return (1.0 - a * a) * p_inc


def harvested_power(r1h_m: float, amplitudes, scenario: Scenario) -> float:
    """Total harvested power for a per-element amplitude array.

    eps_conv * sum_pl (1 - A_pl^2) * P_inc with the center-based incident
    power P_inc shared by all elements. The sum is numpy pairwise.
    """
    amp = np.asarray(amplitudes, dtype=float)
    _check_shape(amp.shape, scenario, "amplitude array")
    p_inc = absorbed_power_element(0.0, r1h_m, scenario)
    per_element = (1.0 - amp ** 2) * p_inc
    return float(scenario.conversion_efficiency * np.sum(per_element))


def link_report(
    r1h_m: float,
    reflection: ReflectionState,
    scenario: Scenario,
    per_element: bool = False,
) -> LinkReport:
    """Evaluate SNR and harvest for one reflection state at one placement."""
    snr = snr_explicit(r1h_m, reflection, scenario)
    p_harv = harvested_power(r1h_m, reflection.amplitudes, scenario)
    p_abs = None
    if per_element:
        p_inc = absorbed_power_element(0.0, r1h_m, scenario)
        p_abs = (1.0 - reflection.amplitudes ** 2) * p_inc
    return LinkReport(
        snr_linear=snr,
        snr_db=db(snr) if snr > 0.0 else float("-inf"),
        p_harv_w=p_harv,
        p_abs_per_element_w=p_abs,
    )


__all__ = [
    "ReflectionState", "LinkReport",
    "element_gain", "phase_mod_2pi", "path_phase_rad",
    "snr_explicit", "snr_cophased", "absorbed_power_element",
    "harvested_power", "link_report",
]
