"""Brute-force validation solvers, independent of the analytic optimizer.

This module never calls into the optimizer; it reaches the same answers by
scanning lattices and enumerating phase profiles through the plain link
evaluations, so the two paths can be compared in tests and in the CLI
validate command. Not a production solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import link
from .scenario import Scenario

# tractability guard for the exhaustive phase enumeration
_MAX_ELEMENTS = 9
_MAX_PROFILES = 10 ** 8


@dataclass(frozen=True)
class OracleResult:
    """Best lattice point found by brute_force_solve."""

    feasible: bool
    r1h_step_m: float
    a_step: float
    r1h_m: float | None = None
    a: float | None = None
    snr_linear: float | None = None
    p_harv_w: float | None = None
    # first-order bound on how much the amplitude lattice can inflate SNR
    # beyond the exact-constraint value (a_step * dSNR/dA at the kept point)
    snr_slack_linear: float | None = None


def brute_force_solve(scenario: Scenario, r1h_step_m: float = 0.5, a_step: float = 0.001) -> OracleResult:
    """Grid search over (r1h, uniform A) with the harvest equality enforced
    numerically.

    For every r1h column the harvest at full absorption is evaluated once
    through link.harvested_power; the uniform-amplitude harvest is that
    ceiling times (1 - a^2), so the whole amplitude lattice of a column can
    be scored at once. The lattice amplitude whose harvest lands nearest the
    required consumption is kept (columns whose ceiling cannot cover the
    consumption are dropped), and the kept point with maximal co-phased SNR
    wins; exact ties go to the lowest r1h.
    """
    if r1h_step_m <= 0 or a_step <= 0:
        raise ValueError("lattice steps must be positive")
    p_ris = scenario.p_ris_w
    shape = (scenario.ris_rows, scenario.ris_cols)
    zeros = np.zeros(shape)
    r_grid = r1h_step_m * np.arange(int(round(scenario.txrx_horizontal_m / r1h_step_m)) + 1)
    a_grid = a_step * np.arange(int(round(1.0 / a_step)))  # [0, 1)
    one_minus_a2 = 1.0 - a_grid ** 2

    best = None
    for r in r_grid:
        ceiling = link.harvested_power(float(r), zeros, scenario)
        if ceiling < p_ris:
            continue
        p_harv_col = ceiling * one_minus_a2
        k = int(np.argmin(np.abs(p_harv_col - p_ris)))
        a = float(a_grid[k])
        snr = link.snr_cophased(float(r), a, scenario)
        if best is None or snr > best[2]:
            best = (float(r), a, snr, float(p_harv_col[k]))

    if best is None:
        return OracleResult(feasible=False, r1h_step_m=r1h_step_m, a_step=a_step)
    r, a, snr, p_harv = best
    slack = 2.0 * snr * a_step / max(a, a_step)
    return OracleResult(
        feasible=True,
        r1h_step_m=r1h_step_m,
        a_step=a_step,
        r1h_m=r,
        a=a,
        snr_linear=snr,
        p_harv_w=p_harv,
        snr_slack_linear=slack,
    )


def exhaustive_phase_search(
    scenario: Scenario,
    r1h_m: float,
    phase_levels: int,
    uniform_a: float,
):
    """Enumerate every quantized phase profile and return the best.

    Levels are 2*pi*k/phase_levels for k = 0..phase_levels-1. Each profile is
    scored through link.snr_explicit at the given placement and uniform
    amplitude. Only tractable on tiny surfaces; guarded to at most 9 elements
    and 1e8 profiles. Returns (best_phases, best_snr_linear).
    """
    m_s = scenario.m_s
    if m_s > _MAX_ELEMENTS:
        raise ValueError(f"exhaustive search limited to {_MAX_ELEMENTS} elements, got {m_s}")
    if phase_levels < 1:
        raise ValueError("phase_levels must be at least 1")
    if phase_levels ** m_s > _MAX_PROFILES:
        raise ValueError("phase_levels ** m_s exceeds the tractability guard")

    shape = (scenario.ris_rows, scenario.ris_cols)
    amplitudes = np.full(shape, float(uniform_a))
    level_values = 2.0 * math.pi * np.arange(phase_levels) / phase_levels

    best_snr = -math.inf
    best_combo = None
    for combo in itertools.product(range(phase_levels), repeat=m_s):
        phases = level_values[list(combo)].reshape(shape)
        snr = link.snr_explicit(r1h_m, link.ReflectionState(amplitudes, phases), scenario)
        if snr > best_snr:
            best_snr = snr
            best_combo = combo
    best_phases = level_values[list(best_combo)].reshape(shape)
    return best_phases, best_snr


__all__ = ["OracleResult", "brute_force_solve", "exhaustive_phase_search"]
