"""Optimal reflection response and placement under the harvest-equality rule.

Phases and amplitude have closed forms once the placement r1h is fixed: the
phases cancel the per-element propagation phase, and the uniform amplitude is
pinned by requiring harvested power to equal the surface consumption exactly.
What is left is a one-dimensional search over r1h of a reduced objective,
done as a coarse grid scan plus golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry, link
from .scenario import Scenario, db

# interior reporting clamp; the physical amplitude interval is open (0, 1)
_EPS_A = 1e-9


@dataclass(frozen=True)
class PlacementSolution:
    """Result of a placement evaluation or search.

    When infeasible (consumption exceeds the harvest ceiling everywhere in
    the searched range), all optimum fields stay None. a_boundary marks the
    degenerate endpoints: a_opt = 1 at zero consumption, a_opt = 0 when the
    harvest ceiling is met exactly.
    """

    feasible: bool
    p_ris_w: float
    r1h_opt_m: float | None = None
    a_opt: float | None = None
    a_boundary: bool = False
    phases_opt: np.ndarray | None = None
    snr_opt_linear: float | None = None
    snr_opt_db: float | None = None
    p_harv_w: float | None = None
    objective_curve: np.ndarray | None = None  # sampled (r1h, objective) trace


@dataclass(frozen=True)
class SearchConfig:
    """Linear-search parameters for solve_placement.

    r1h_max_m = None means the TX-to-RX horizontal span; refine_bracket_m =
    None means one coarse step each side of the coarse argmax.
    """

    r1h_min_m: float = 0.0
    r1h_max_m: float | None = None
    coarse_step_m: float = 0.1
    refine_iterations: int = 40
    refine_bracket_m: float | None = None

    def __post_init__(self):
        if self.coarse_step_m <= 0:
            raise ValueError("coarse_step_m must be positive")
        if self.refine_iterations < 0:
            raise ValueError("refine_iterations must be nonnegative")
        if self.r1h_max_m is not None and not self.r1h_min_m < self.r1h_max_m:
            raise ValueError("r1h_min_m must be below r1h_max_m")
        if self.refine_bracket_m is not None and self.refine_bracket_m <= 0:
            raise ValueError("refine_bracket_m must be positive")


@dataclass(frozen=True)
class SiteCandidate:
    """A mounted (immovable) surface site: scenario variant plus fixed r1h."""

    scenario: Scenario
    r1h_m: float


@dataclass(frozen=True)
class SiteSelection:
    best_index: int | None
    solutions: tuple


def optimal_phases(r1h_m: float, scenario: Scenario) -> np.ndarray:
    """Per-element phases that co-phase all contributions at the receiver.

    phi_pl = -2*pi*(r1pl + r2pl)/lambda, the exact negative of the propagation
    phase used by link.snr_explicit, so substitution cancels bitwise. Returned
    unwrapped.
    """
    grid = geometry.element_grid(scenario)
    return -link.path_phase_rad(r1h_m, grid, scenario)


def _harvest_factor(r1h_m, scenario: Scenario):
    """Harvest ceiling at this placement: harvested power when every element
    absorbs fully (A = 0). The uniform-amplitude harvest is this times
    (1 - A^2)."""
    p_inc = link.absorbed_power_element(0.0, r1h_m, scenario)
    return scenario.conversion_efficiency * scenario.m_s * p_inc


def _amplitude_radicand(r1h_m, p_ris_w: float, scenario: Scenario):
    """1 - P_ris / harvest ceiling; the square of the optimal amplitude."""
    return 1.0 - p_ris_w / _harvest_factor(r1h_m, scenario)


def optimal_amplitude(r1h_m: float, p_ris_w: float, scenario: Scenario) -> float | None:
    """Uniform amplitude meeting the harvest equality at this placement.

    A* = sqrt(1 - P_ris * r1^2 / (4 M_s eps_conv (lambda/4pi)^2 P_t G_t
    cos(th_i))). Returns None when the radicand is negative (the surface
    cannot cover its consumption here even fully absorbing), 0.0 when the
    ceiling is met exactly, and 1.0 at zero consumption (boundary case).
    """
    if p_ris_w < 0:
        raise ValueError("p_ris_w must be nonnegative")
    radicand = float(_amplitude_radicand(r1h_m, p_ris_w, scenario))
    if radicand < 0.0:
        return None
    return math.sqrt(radicand)


def placement_objective(r1h_m, p_ris_w: float, scenario: Scenario):
    """Reduced placement objective after phases and amplitude are eliminated.

    G(r1h) = cos(th_i) cos(th_r) / (r1^2 r2^2 sigma^2) * (1 - P_ris * r1^2 /
    (4 M_s eps_conv (lambda/4pi)^2 P_t G_t cos(th_i))). Negative where the
    placement is infeasible; those values are never selected by the search.
    Accepts scalar or array r1h. The optimal SNR is
    16 P_t G_t G_r (lambda/4pi)^4 M_s^2 * G(r1h).
    """
    r1, r2 = geometry.center_distances(r1h_m, scenario)
    th_i = geometry.incidence_angle(r1h_m, scenario)
    th_r = geometry.departure_angle(r1h_m, scenario)
    snr_shape = np.cos(th_i) * np.cos(th_r) / (r1 ** 2 * r2 ** 2 * scenario.noise_w)
    return snr_shape * _amplitude_radicand(r1h_m, p_ris_w, scenario)


def evaluate_placement(
    scenario: Scenario,
    r1h_m: float,
    p_ris_w: float | None = None,
    objective_curve: np.ndarray | None = None,
) -> PlacementSolution:
    """Closed-form solution at a fixed placement (no search)."""
    p_ris = scenario.p_ris_w if p_ris_w is None else p_ris_w
    a = optimal_amplitude(r1h_m, p_ris, scenario)
    if a is None:
        return PlacementSolution(
            feasible=False, p_ris_w=p_ris, objective_curve=objective_curve,
        )
    boundary = a == 0.0 or a == 1.0
    if not boundary:
        a = min(max(a, _EPS_A), 1.0 - _EPS_A)
    snr = link.snr_cophased(r1h_m, a, scenario)
    amplitudes = np.full((scenario.ris_rows, scenario.ris_cols), a)
    return PlacementSolution(
        feasible=True,
        p_ris_w=p_ris,
        r1h_opt_m=float(r1h_m),
        a_opt=a,
        a_boundary=boundary,
        phases_opt=optimal_phases(r1h_m, scenario),
        snr_opt_linear=snr,
        snr_opt_db=db(snr) if snr > 0.0 else float("-inf"),
        p_harv_w=link.harvested_power(r1h_m, amplitudes, scenario),
        objective_curve=objective_curve,
    )


def _golden_section_max(g, lo: float, hi: float, iterations: int) -> float:
    # shrink the bracket around the maximum; ties keep the left interval so
    # the lowest placement wins
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = g(x1), g(x2)
    for _ in range(iterations):
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = g(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = g(x2)
    return 0.5 * (lo + hi)


def solve_placement(scenario: Scenario, search: SearchConfig | None = None) -> PlacementSolution:
    """Linear search over r1h maximizing the reduced placement objective.

    Coarse grid scan restricted to feasible placements (positive amplitude
    radicand), then golden-section refinement inside the bracket around the
    coarse argmax. Exact grid ties go to the lowest r1h. The sampled coarse
    trace is returned in the solution for auditing multi-modal cases.
    """
    cfg = search or SearchConfig()
    p_ris = scenario.p_ris_w
    r_min = cfg.r1h_min_m
    r_max = cfg.r1h_max_m if cfg.r1h_max_m is not None else scenario.txrx_horizontal_m
    if not r_min < r_max:
        raise ValueError("search range is empty")
    step = cfg.coarse_step_m
    bracket = cfg.refine_bracket_m if cfg.refine_bracket_m is not None else step

    n = int(math.floor((r_max - r_min) / step + 1e-9)) + 1
    grid = r_min + step * np.arange(n)
    if grid[-1] < r_max - 1e-12:
        grid = np.append(grid, r_max)
    objective = placement_objective(grid, p_ris, scenario)
    radicand = _amplitude_radicand(grid, p_ris, scenario)
    curve = np.column_stack((grid, objective))

    feasible = radicand > 0.0
    if not feasible.any():
        return PlacementSolution(feasible=False, p_ris_w=p_ris, objective_curve=curve)

    # argmax over the feasible set; np.argmax takes the first (lowest-r) max
    best = int(np.argmax(np.where(feasible, objective, -np.inf)))

    def g(r):
        return float(placement_objective(r, p_ris, scenario))

    lo = max(grid[best] - bracket, r_min)
    hi = min(grid[best] + bracket, r_max)
    r_star = _golden_section_max(g, lo, hi, cfg.refine_iterations)
    if not float(_amplitude_radicand(r_star, p_ris, scenario)) > 0.0:
        # refinement drifted outside the feasible set (only possible in
        # near-degenerate landscapes); fall back to the coarse point
        r_star = float(grid[best])
    return evaluate_placement(scenario, r_star, p_ris, objective_curve=curve)


def select_site(candidates, p_ris_w: float | None = None) -> SiteSelection:
    """Pick the best mounted site among fixed (scenario, r1h) candidates.

    Each candidate is evaluated at its fixed placement (mounted surfaces do
    not move). Returns the feasible candidate with maximal SNR; exact ties
    and duplicates resolve to the lowest index. best_index is None when every
    candidate is infeasible.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("candidate list is empty")
    solutions = []
    best_index = None
    best_snr = -math.inf
    for idx, cand in enumerate(candidates):
        sol = evaluate_placement(cand.scenario, cand.r1h_m, p_ris_w)
        solutions.append(sol)
        if sol.feasible and sol.snr_opt_linear > best_snr:
            best_index = idx
            best_snr = sol.snr_opt_linear
    return SiteSelection(best_index=best_index, solutions=tuple(solutions))


__all__ = [
    "PlacementSolution", "SearchConfig", "SiteCandidate", "SiteSelection",
    "optimal_phases", "optimal_amplitude", "placement_objective",
    "evaluate_placement", "solve_placement", "select_site",
]
