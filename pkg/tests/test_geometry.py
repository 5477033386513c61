"""Offset grids, center/per-element distances, and angles vs a 3-D coordinate oracle.

The oracle places TX at (0, 0, h_t), element (p, l) at (r1h - d_p, y_s, h_s - d_l)
and RX at (r_h, 0, h_r), then measures plain Euclidean distances.
"""

import math

import numpy as np
import pytest

from risharvest import (
    ElementGrid,
    center_distances,
    default_scenario,
    departure_angle,
    element_distances,
    element_grid,
    element_offsets,
    incidence_angle,
    link_geometry,
)

LAM = 299_792_458.0 / 28e9


# -------------------------------------------------------------- offset grids


def test_single_element_grid():
    g = element_offsets(1, 1, LAM / 2, LAM / 2)
    assert g.shape == (1, 1)
    assert g.d_p[0, 0] == 0.0
    assert g.d_l[0, 0] == 0.0


def test_two_element_row_symmetric():
    g = element_offsets(2, 1, LAM / 2, LAM / 2)
    assert sorted(g.d_p[:, 0]) == [-LAM / 4, LAM / 4]


def test_50x50_grid_centering(scenario):
    g = element_grid(scenario)
    assert g.shape == (50, 50)
    assert g.d_p.max() == pytest.approx(24.5 * scenario.element_dx_m, rel=1e-15)
    assert g.d_p.min() == pytest.approx(-24.5 * scenario.element_dx_m, rel=1e-15)
    assert abs(g.d_p.mean()) < 1e-12
    assert abs(g.d_l.mean()) < 1e-12


def test_grid_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        ElementGrid(d_p=np.zeros((2, 2)), d_l=np.zeros((2, 3)))


def test_degenerate_dimensions_rejected():
    with pytest.raises(ValueError):
        element_offsets(0, 5, LAM / 2, LAM / 2)


# ----------------------------------------------------------- center distances


def test_center_distance_single_term():
    sc = default_scenario(lateral_offset_m=3.0, ris_height_m=3.0, tx_height_m=3.0)
    r1, _ = center_distances(0.0, sc)
    assert r1 == pytest.approx(3.0, rel=1e-15)


def test_center_distance_table_point(scenario):
    r1, _ = center_distances(10.0, scenario)
    assert r1 == pytest.approx(math.sqrt(100 + 25 + 81), rel=1e-12)
    assert r1 == pytest.approx(14.353, abs=5e-4)


def test_midpoint_mirror_symmetry(scenario):
    # equal TX/RX heights make the two hops congruent at the midpoint
    assert scenario.tx_height_m == scenario.rx_height_m
    r1, r2 = center_distances(scenario.txrx_horizontal_m / 2, scenario)
    assert r1 == r2


def test_center_distances_array_path(scenario):
    r1h = np.array([0.0, 10.0, 50.0, 100.0])
    r1_arr, r2_arr = center_distances(r1h, scenario)
    for i, r in enumerate(r1h):
        r1, r2 = center_distances(float(r), scenario)
        assert r1_arr[i] == r1 and r2_arr[i] == r2


# ------------------------------------------------------ per-element distances


def test_center_element_equals_center_distance(scenario):
    g = ElementGrid(d_p=np.zeros((1, 1)), d_l=np.zeros((1, 1)))
    r1pl, r2pl = element_distances(10.0, g, scenario)
    r1, r2 = center_distances(10.0, scenario)
    assert r1pl[0, 0] == r1
    assert r2pl[0, 0] == r2


def test_mirror_elements_swap_distances(scenario):
    # +-(d_p, d_l) pairs swap hop lengths at the midpoint when h_t = h_r
    g = ElementGrid(
        d_p=np.array([[LAM / 4], [-LAM / 4]]),
        d_l=np.array([[LAM / 8], [LAM / 8]]),
    )
    mid = scenario.txrx_horizontal_m / 2
    r1pl, r2pl = element_distances(mid, g, scenario)
    assert r1pl[0, 0] == pytest.approx(r2pl[1, 0], rel=1e-15)
    assert r1pl[1, 0] == pytest.approx(r2pl[0, 0], rel=1e-15)


def test_element_distances_table_point(scenario):
    dp = dl = LAM / 4
    g = ElementGrid(d_p=np.array([[dp]]), d_l=np.array([[dl]]))
    r1pl, r2pl = element_distances(10.0, g, scenario)
    tx = np.array([0.0, 0.0, scenario.tx_height_m])
    rx = np.array([scenario.txrx_horizontal_m, 0.0, scenario.rx_height_m])
    el = np.array([10.0 - dp, scenario.lateral_offset_m, scenario.ris_height_m - dl])
    assert r1pl[0, 0] == pytest.approx(np.linalg.norm(el - tx), rel=1e-12)
    assert r2pl[0, 0] == pytest.approx(np.linalg.norm(rx - el), rel=1e-12)


def test_element_distances_random_configs():
    rng = np.random.default_rng(20260814)
    for _ in range(100):
        sc = default_scenario(
            tx_height_m=float(rng.uniform(1, 10)),
            rx_height_m=float(rng.uniform(1, 10)),
            ris_height_m=float(rng.uniform(6, 30)),
            lateral_offset_m=float(rng.uniform(0.5, 40)),
            txrx_horizontal_m=float(rng.uniform(20, 300)),
            ris_rows=int(rng.integers(1, 6)),
            ris_cols=int(rng.integers(1, 6)),
            element_dx_m=float(rng.uniform(0.2, 3) * LAM),
            element_dy_m=float(rng.uniform(0.2, 3) * LAM),
        )
        r1h = float(rng.uniform(0, sc.txrx_horizontal_m))
        g = element_grid(sc)
        r1pl, r2pl = element_distances(r1h, g, sc)
        tx = np.array([0.0, 0.0, sc.tx_height_m])
        rx = np.array([sc.txrx_horizontal_m, 0.0, sc.rx_height_m])
        for p in range(sc.ris_rows):
            for l in range(sc.ris_cols):
                el = np.array([
                    r1h - g.d_p[p, l],
                    sc.lateral_offset_m,
                    sc.ris_height_m - g.d_l[p, l],
                ])
                assert r1pl[p, l] == pytest.approx(np.linalg.norm(el - tx), rel=1e-12)
                assert r2pl[p, l] == pytest.approx(np.linalg.norm(rx - el), rel=1e-12)


def test_triangle_inequality_against_center(scenario):
    g = element_grid(scenario)
    bound = np.sqrt(g.d_p ** 2 + g.d_l ** 2) + 1e-9
    for r1h in (0.0, 1.0, 10.0, 50.0, 99.0):
        r1, r2 = center_distances(r1h, scenario)
        r1pl, r2pl = element_distances(r1h, g, scenario)
        assert np.all(np.abs(r1pl - r1) <= bound)
        assert np.all(np.abs(r2pl - r2) <= bound)


# --------------------------------------------------------------------- angles


def test_broadside_incidence():
    sc = default_scenario(ris_height_m=3.0, tx_height_m=3.0)
    assert incidence_angle(0.0, sc) == 0.0


def test_incidence_angle_table_point(scenario):
    got = incidence_angle(10.0, scenario)
    assert got == pytest.approx(math.atan(math.sqrt(100 + 81) / 5), rel=1e-12)
    assert got == pytest.approx(1.2149684442983177, rel=1e-12)
    # coarse published rounding of the same expression
    assert got == pytest.approx(1.2165, abs=2e-3)


def test_broadside_departure():
    sc = default_scenario(ris_height_m=6.0, rx_height_m=6.0)
    assert departure_angle(sc.txrx_horizontal_m, sc) == 0.0


def test_angle_monotonicity(scenario):
    r = np.linspace(0.0, scenario.txrx_horizontal_m, 401)
    ti = incidence_angle(r, scenario)
    tr = departure_angle(r, scenario)
    assert np.all(np.diff(ti) > 0)
    assert np.all(np.diff(tr) < 0)
    assert np.all(ti >= 0) and np.all(ti < math.pi / 2)
    assert np.all(tr >= 0) and np.all(tr < math.pi / 2)


def test_link_geometry_bundle(scenario):
    lg = link_geometry(10.0, scenario)
    r1, r2 = center_distances(10.0, scenario)
    assert lg.r1h_m == 10.0
    assert lg.r1_m == r1 and lg.r2_m == r2
    assert lg.theta_i_rad == incidence_angle(10.0, scenario)
    assert lg.theta_r_rad == departure_angle(10.0, scenario)
