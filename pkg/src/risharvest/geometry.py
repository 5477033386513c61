"""Placement geometry: element offsets, distances, incidence/departure angles.

Coordinate model: TX at (0, 0, h_t), RX at (r_h, 0, h_r), surface center at
(r1h, y_s, h_s) with y_s > 0. Element (p, l) sits at
(r1h - d_p, y_s, h_s - d_l), so d_l > 0 means below the center.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scenario import Scenario


@dataclass(frozen=True)
class ElementGrid:
    """Per-element lateral offsets from the surface center.

    d_p: horizontal offsets, shape (M_x, M_y); d_l: vertical offsets, same
    shape. The grid is centered, so both arrays sum to zero.
    """

    d_p: np.ndarray
    d_l: np.ndarray

    def __post_init__(self):
        if self.d_p.shape != self.d_l.shape:
            raise ValueError("d_p and d_l must have the same shape")

    @property
    def shape(self):
        return self.d_p.shape


@dataclass(frozen=True)
class LinkGeometry:
    """Center distances and angles for one placement."""

    r1h_m: float         # horizontal TX-to-surface distance (placement variable)
    r1_m: float          # TX to surface center
    r2_m: float          # surface center to RX
    theta_i_rad: float   # incidence angle, measured from the surface normal
    theta_r_rad: float   # departure angle


def element_offsets(m_x: int, m_y: int, d_x_m: float, d_y_m: float) -> ElementGrid:
    """Centered offset grid for an m_x-by-m_y surface.

    1-indexed convention: element (p, l) has offsets
    d_p = (p - (m_x + 1)/2) * d_x and d_l = (l - (m_y + 1)/2) * d_y,
    which puts the grid centroid exactly at the surface center.
    """
    if m_x < 1 or m_y < 1:
        raise ValueError("grid dimensions must be at least 1")
    p = np.arange(1, m_x + 1, dtype=float)
    l = np.arange(1, m_y + 1, dtype=float)
    dp = (p - (m_x + 1) / 2.0) * d_x_m
    dl = (l - (m_y + 1) / 2.0) * d_y_m
    d_p, d_l = np.meshgrid(dp, dl, indexing="ij")
    return ElementGrid(d_p=d_p, d_l=d_l)


def element_grid(scenario: Scenario) -> ElementGrid:
    """Offset grid matching the scenario's surface dimensions."""
    return element_offsets(
        scenario.ris_rows, scenario.ris_cols,
        scenario.element_dx_m, scenario.element_dy_m,
    )


def center_distances(r1h_m, scenario: Scenario):
    """TX-to-center and center-to-RX distances. Accepts scalar or array r1h."""
    r1h = np.asarray(r1h_m, dtype=float)
    ys = scenario.lateral_offset_m
    dz_t = scenario.ris_height_m - scenario.tx_height_m
    dz_r = scenario.ris_height_m - scenario.rx_height_m
    r1 = np.sqrt(r1h ** 2 + ys ** 2 + dz_t ** 2)
    r2 = np.sqrt((scenario.txrx_horizontal_m - r1h) ** 2 + ys ** 2 + dz_r ** 2)
    if np.isscalar(r1h_m):
        return float(r1), float(r2)
    return r1, r2


def element_distances(r1h_m: float, grid: ElementGrid, scenario: Scenario):
    """Per-element TX-to-element and element-to-RX distances.

    The element offset d_p points toward the TX in the horizontal term of the
    first hop, so it enters the second hop with the opposite sign; d_l lowers
    the element on both hops.
    """
    ys = scenario.lateral_offset_m
    dz_t = scenario.ris_height_m - scenario.tx_height_m
    dz_r = scenario.ris_height_m - scenario.rx_height_m
    rh = scenario.txrx_horizontal_m
    r1pl = np.sqrt((r1h_m - grid.d_p) ** 2 + ys ** 2 + (dz_t - grid.d_l) ** 2)
    r2pl = np.sqrt((rh - r1h_m + grid.d_p) ** 2 + ys ** 2 + (dz_r - grid.d_l) ** 2)
    return r1pl, r2pl


def incidence_angle(r1h_m, scenario: Scenario):
    """Angle between the TX direction and the surface normal, in [0, pi/2)."""
    r1h = np.asarray(r1h_m, dtype=float)
    dz_t = scenario.ris_height_m - scenario.tx_height_m
    theta = np.arctan(np.sqrt(r1h ** 2 + dz_t ** 2) / scenario.lateral_offset_m)
    return float(theta) if np.isscalar(r1h_m) else theta


def departure_angle(r1h_m, scenario: Scenario):
    """Angle between the RX direction and the surface normal, in [0, pi/2)."""
    r1h = np.asarray(r1h_m, dtype=float)
    dz_r = scenario.ris_height_m - scenario.rx_height_m
    theta = np.arctan(
        np.sqrt((r1h - scenario.txrx_horizontal_m) ** 2 + dz_r ** 2)
        / scenario.lateral_offset_m
    )
    return float(theta) if np.isscalar(r1h_m) else theta


def link_geometry(r1h_m: float, scenario: Scenario) -> LinkGeometry:
    """Bundle center distances and angles for one placement."""
    r1, r2 = center_distances(r1h_m, scenario)
    return LinkGeometry(
        r1h_m=float(r1h_m),
        r1_m=r1,
        r2_m=r2,
        theta_i_rad=incidence_angle(r1h_m, scenario),
        theta_r_rad=departure_angle(r1h_m, scenario),
    )


__all__ = [
    "ElementGrid", "LinkGeometry",
    "element_offsets", "element_grid", "center_distances", "element_distances",
    "incidence_angle", "departure_angle", "link_geometry",
]
