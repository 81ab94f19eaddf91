import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad

from ontology_lab.fermion import (
    GridTooSmallError,
    PAULI,
    QuadratureUnderResolvedError,
    SheetGrid,
    SheetState,
    beable_commutator_residuals,
    beable_to_position_wave,
    direction_vector,
    distance_growth_check,
    evolve_sheet,
    helicity_spinor,
    load_grid,
    ray_grid,
    save_grid,
    single_ray_grid,
    sphere_product_grid,
    transform_with_refinement,
    weyl_consistency_check,
)


def sigma_dot(k):
    return k[0] * PAULI[0] + k[1] * PAULI[1] + k[2] * PAULI[2]


def test_helicity_spinor_is_plus_eigenvector():
    rng = np.random.default_rng(31)
    for _ in range(100):
        theta = float(rng.uniform(0.0, np.pi))
        phi = float(rng.uniform(-np.pi, 2.0 * np.pi))
        k = direction_vector(theta, phi)
        chi = helicity_spinor(theta, phi)
        assert abs(np.vdot(k, k) - 1.0) < 1e-14
        assert abs(np.vdot(chi, chi) - 1.0) < 1e-14
        assert np.max(np.abs(sigma_dot(k) @ chi - chi)) < 1e-14


def test_sheet_evolution_moves_only_z():
    state = SheetState(theta=0.7, phi=-1.2, z=0.3)
    moved = evolve_sheet(state, 2.5)
    assert moved.z == 0.3 + 2.5
    assert moved.theta == state.theta and moved.phi == state.phi
    with pytest.raises(ValueError):
        SheetState(theta=3.5, phi=0.0, z=0.0)
    with pytest.raises(ValueError):
        SheetState(theta=0.5, phi=np.inf, z=0.0)


def test_grid_norm_and_phase_evolution():
    grid = single_ray_grid(0.4, 1.0, q=2.0)
    assert abs(grid.norm() - 1.0) < 1e-15
    moved = grid.evolved(0.9)
    assert abs(moved.norm() - 1.0) < 1e-15
    assert np.max(np.abs(moved.amplitudes - grid.amplitudes * np.exp(-2.0j * 0.9))) == 0.0
    with pytest.raises(ValueError):
        single_ray_grid(0.4, 1.0, q=0.0)
    with pytest.raises(ValueError):
        ray_grid([[0.1, 0.2, 1.0]], [1.0, 2.0], [1.0, 1.0], np.ones((2, 2)))
    with pytest.raises(ValueError):
        SheetGrid(
            thetas=[0.1], phis=[0.0], weights=[1.0],
            q_nodes=[1.0], q_weights=[1.0],
            amplitudes=np.zeros((1, 1)),
        ).normalized()


def test_beable_commutators_vanish_structurally():
    grid = sphere_product_grid(n_theta=6, n_phi=8, n_rho=16, rho_min=-2.0, rho_max=2.0)
    report = beable_commutator_residuals(grid)
    assert report.max_pairwise == 0.0
    assert report.direction_direction == 0.0
    assert report.direction_helicity == 0.0
    assert report.direction_dilatation == 0.0
    assert report.helicity_dilatation == 0.0
    assert report.dilatation_hermiticity == 0.0
    assert report.dilatation_shift_residual > 0.0
    keys = set(report.to_json())
    assert "max_pairwise" in keys and "dilatation_shift_residual" in keys


def test_dilatation_shift_residual_is_second_order():
    coarse = beable_commutator_residuals(
        sphere_product_grid(n_theta=4, n_phi=4, n_rho=17, rho_min=-3.0, rho_max=3.0)
    ).dilatation_shift_residual
    fine = beable_commutator_residuals(
        sphere_product_grid(n_theta=4, n_phi=4, n_rho=33, rho_min=-3.0, rho_max=3.0)
    ).dilatation_shift_residual
    # halving the log step should cut the canonical-pair defect ~4x
    assert fine < coarse / 3.0


def test_commutator_grid_requirements():
    with pytest.raises(GridTooSmallError):
        beable_commutator_residuals(
            sphere_product_grid(n_theta=4, n_phi=4, n_rho=4)
        )
    with pytest.raises(ValueError):
        beable_commutator_residuals(single_ray_grid(0.1, 0.2))


def test_single_ray_wave_is_plane_wave():
    grid = single_ray_grid(0.0, 0.0, q=1.0)
    pts = np.array([
        [0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.3, -0.4, 2.5],
        [0.0, 0.0, -np.pi],
    ])
    psi = beable_to_position_wave(grid, pts)
    expected = np.stack([np.exp(1j * pts[:, 2]), np.zeros(4, dtype=complex)], axis=-1)
    assert np.max(np.abs(psi - expected)) < 1e-12

    # tilted ray: e^{i q k.x} chi scaled by the q^2 measure factor
    theta, phi, q = 1.1, 0.7, 2.0
    grid = single_ray_grid(theta, phi, q=q)
    k = direction_vector(theta, phi)
    chi = helicity_spinor(theta, phi)
    x = np.array([0.2, -1.0, 0.5])
    psi = beable_to_position_wave(grid, x)
    assert psi.shape == (2,)
    assert np.max(np.abs(psi - q**2 * np.exp(1j * q * np.dot(k, x)) * chi)) < 1e-12


def uniform_direction_builder(n_theta):
    cos_nodes, cos_weights = leggauss(int(n_theta))
    n_phi = 2 * int(n_theta)
    rays = []
    for c, w in zip(cos_nodes, cos_weights):
        for j in range(n_phi):
            rays.append([np.arccos(c), 2.0 * np.pi * j / n_phi, w * 2.0 * np.pi / n_phi])
    rays = np.asarray(rays)
    amp = np.ones((rays.shape[0], 1), dtype=np.complex128)
    return ray_grid(rays, [1.0], [1.0], amp)


def axis_wave_oracle(x3):
    # same angular integral done by adaptive quadrature: the up component of
    # a uniform-direction unit-q state on the z axis
    up_re = quad(lambda c: np.sqrt((1.0 + c) / 2.0) * np.cos(x3 * c), -1.0, 1.0)[0]
    up_im = quad(lambda c: np.sqrt((1.0 + c) / 2.0) * np.sin(x3 * c), -1.0, 1.0)[0]
    return 2.0 * np.pi * (up_re + 1j * up_im)


def test_uniform_state_matches_adaptive_quadrature():
    x3 = 0.7
    point = np.array([0.0, 0.0, x3])
    oracle = axis_wave_oracle(x3)
    errors = []
    for n_theta in (8, 16, 32):
        psi = beable_to_position_wave(uniform_direction_builder(n_theta), point)
        assert abs(psi[1]) < 1e-12
        errors.append(abs(psi[0] - oracle))
    assert errors[0] < 5e-3
    # refinement must keep improving on the oracle
    assert errors[1] < errors[0]
    assert errors[2] < errors[1]


def test_refinement_guard():
    point = np.array([[0.0, 0.0, 0.7]])
    values, change = transform_with_refinement(
        uniform_direction_builder, point, tol=1e-2, n_theta=8
    )
    assert change < 1e-2
    assert abs(values[0, 0] - axis_wave_oracle(0.7)) < 1e-3
    with pytest.raises(QuadratureUnderResolvedError):
        transform_with_refinement(uniform_direction_builder, point, tol=1e-18, n_theta=8)


def three_ray_state():
    rays = np.array([
        [0.4, 0.0, 0.5],
        [1.2, 2.0, 0.3],
        [2.3, 4.4, 0.2],
    ])
    q_nodes = [0.7, 1.3, -0.9]
    q_weights = [0.5, 0.8, 0.4]
    rng = np.random.default_rng(32)
    amp = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    return ray_grid(rays, q_nodes, q_weights, amp)


def test_weyl_consistency_single_ray():
    pts = np.array([[0.0, 0.0, 0.0], [1.0, -0.5, 0.3], [0.1, 0.1, 2.0]])
    for theta, phi, q in ((0.3, 1.1, 1.7), (2.0, -0.4, -1.3), (0.0, 0.0, 1.0)):
        dev = weyl_consistency_check(single_ray_grid(theta, phi, q), 2.0, pts)
        assert dev <= 1e-8


def test_weyl_consistency_superposition():
    pts = np.array([[0.0, 0.0, 0.0], [0.4, 0.2, -1.0], [2.0, 0.0, 0.5]])
    dev = weyl_consistency_check(three_ray_state(), 1.5, pts)
    assert dev <= 1e-6


def test_rotation_about_z_covariance():
    grid = three_ray_state()
    delta = 0.9
    rot = ray_grid(
        np.stack([grid.thetas, grid.phis + delta, grid.weights], axis=-1),
        grid.q_nodes, grid.q_weights, grid.amplitudes,
    )
    rz = np.array([
        [np.cos(delta), -np.sin(delta), 0.0],
        [np.sin(delta), np.cos(delta), 0.0],
        [0.0, 0.0, 1.0],
    ])
    pts = np.array([[0.3, 0.0, 0.1], [-0.2, 0.5, 1.0], [0.0, 0.0, 0.0]])
    psi = beable_to_position_wave(grid, pts)
    psi_rot = beable_to_position_wave(rot, pts @ rz.T)
    # spin-half response to an azimuthal turn, up to the global phase choice
    gauge = np.diag([1.0, np.exp(1j * delta)])
    assert np.max(np.abs(psi_rot - psi @ gauge.T)) < 1e-12


def test_rotation_general_axis_single_ray():
    rng = np.random.default_rng(33)
    for _ in range(20):
        theta = float(rng.uniform(0.05, np.pi - 0.05))
        phi = float(rng.uniform(0.0, 2.0 * np.pi))
        axis = rng.standard_normal(3)
        axis /= np.linalg.norm(axis)
        delta = float(rng.uniform(0.1, 3.0))
        u = np.cos(delta / 2.0) * np.eye(2) - 1j * np.sin(delta / 2.0) * sigma_dot(axis)

        k = direction_vector(theta, phi)
        cross = np.cross(axis, k)
        k_rot = (k * np.cos(delta) + cross * np.sin(delta)
                 + axis * np.dot(axis, k) * (1.0 - np.cos(delta)))
        chi_rot = helicity_spinor(
            float(np.arccos(np.clip(k_rot[2], -1.0, 1.0))),
            float(np.arctan2(k_rot[1], k_rot[0])),
        )
        # rotating the sheet direction rotates the spinor up to a phase
        overlap = np.vdot(chi_rot, u @ helicity_spinor(theta, phi))
        assert abs(abs(overlap) - 1.0) < 1e-12


def test_distance_grows_at_unit_rate():
    report = distance_growth_check()
    assert abs(report.slope - 1.0) < 1e-9
    assert abs(report.intercept) < 1e-9
    assert report.max_fit_residual < 1e-9
    assert report.times.size == report.means.size == 21
    with pytest.raises(ValueError):
        distance_growth_check(q_center=1.0, q_halfwidth=2.0)


def test_grid_json_roundtrip(tmp_path):
    grid = three_ray_state()
    path = tmp_path / "state.json"
    save_grid(path, grid)
    back = load_grid(path)
    assert np.array_equal(back.thetas, grid.thetas)
    assert np.array_equal(back.phis, grid.phis)
    assert np.array_equal(back.weights, grid.weights)
    assert np.array_equal(back.q_nodes, grid.q_nodes)
    assert np.array_equal(back.q_weights, grid.q_weights)
    assert np.array_equal(back.amplitudes, grid.amplitudes)
    assert back.n_rho is None
