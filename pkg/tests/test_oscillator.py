import numpy as np
import pytest

from ontology_lab.clock import ClockModel, energy_spectrum
from ontology_lab.oscillator import (
    build_spin_rep,
    casimir_residual,
    commutator_identity_residual,
    continuum_scan,
    hamiltonian,
    hamiltonian_identity_residual,
    oscillator_hamiltonian,
    oscillator_levels,
    predicted_deviation,
    richardson_limit,
    su2_residual,
)


def test_spin_one_matrices_exact():
    rep = build_spin_rep(1, tau=np.pi)
    s = 1.0 / np.sqrt(2.0)
    lx = np.array([[0, s, 0], [s, 0, s], [0, s, 0]])
    ly = np.array([[0, s * 1j, 0], [-s * 1j, 0, s * 1j], [0, -s * 1j, 0]])
    assert np.max(np.abs(rep.lx - lx)) < 1e-15
    assert np.max(np.abs(rep.ly - ly)) < 1e-15
    assert np.max(np.abs(rep.lz - np.diag([-1.0, 0.0, 1.0]))) == 0.0
    # scale factors collapse to 1 and -2/3 at tau = pi
    assert abs(rep.alpha - 1.0) < 1e-15
    assert abs(rep.beta + 2.0 / 3.0) < 1e-15


def test_deformed_commutator_matrix_spin_one():
    rep = build_spin_rep(1, tau=1.0)
    lhs = rep.xhat @ rep.phat - rep.phat @ rep.xhat
    assert np.max(np.abs(lhs - np.diag([2j / 3.0, 0.0, -2j / 3.0]))) < 1e-15


def test_identity_residuals_small_and_medium():
    for ell in (1, 10, 100):
        rep = build_spin_rep(ell, tau=0.8)
        assert su2_residual(rep) < 1e-11
        assert casimir_residual(rep) < 1e-11
        assert commutator_identity_residual(rep) < 1e-11
        assert hamiltonian_identity_residual(rep) < 1e-11


def test_identity_residuals_large():
    # sqrt ladder roundoff grows with the matrix norm; at ell = 200 the
    # identities still hold comfortably inside the 1e-9 class
    rep = build_spin_rep(200, tau=1.0)
    assert su2_residual(rep) < 1e-9
    assert casimir_residual(rep) < 1e-9
    assert commutator_identity_residual(rep) < 1e-9
    assert hamiltonian_identity_residual(rep) < 1e-9


def test_ladder_spectrum_matches_clock():
    for ell in (2, 7, 31):
        rep = build_spin_rep(ell, tau=1.4)
        ladder = np.sort(np.diag(hamiltonian(rep)).real)
        clock_e = energy_spectrum(ClockModel(rep.dim, tau=rep.tau)).eigenvalues
        assert np.max(np.abs(ladder - clock_e)) < 1e-12


def test_quadratic_part_levels_pair_up():
    rep = build_spin_rep(12, tau=0.5)
    h = oscillator_hamiltonian(rep)
    vals = np.linalg.eigvalsh(h)
    # depends on Lz only through its square: ascending values in +-m pairs
    assert np.max(np.abs(vals[0:-1:2] - vals[1::2])) < 1e-12


def test_ground_level_known_value():
    ell = 200
    omega = 1.0
    rep = build_spin_rep(ell, tau=2.0 * np.pi / ((2 * ell + 1) * omega))
    levels = oscillator_levels(rep, 3)
    assert abs(levels[0] - (0.5 - 0.5 / 401.0)) < 1e-9


def test_deviation_law_is_exact_at_finite_size():
    scan = continuum_scan([50, 100, 200], omega=1.0, levels=5)
    for ell, n, _, dev, pred in scan.rows:
        assert abs(dev - pred) < 1e-9
        assert abs(pred - predicted_deviation(1.0, ell, n)) == 0.0


def test_scan_fit_recovers_coefficients():
    scan = continuum_scan([50, 100, 200], omega=2.0, levels=4)
    fitted = scan.fitted_coefficients
    predicted = scan.predicted_coefficients
    assert np.max(np.abs(fitted / predicted - 1.0)) < 0.02
    assert abs(scan.observed_order - 1.0) < 0.05


def test_scan_single_ell_has_no_fit():
    scan = continuum_scan([30], omega=1.0, levels=2)
    assert scan.fitted_coefficients is None
    assert scan.observed_order is None
    assert len(scan.rows) == 2


def test_richardson_removes_leading_error():
    ells = [100, 200, 400]
    ground = []
    for ell in ells:
        rep = build_spin_rep(ell, tau=2.0 * np.pi / (2 * ell + 1))
        ground.append(oscillator_levels(rep, 1)[0])
    assert abs(richardson_limit(ells, ground) - 0.5) < 1e-6
    # plain values are visibly below 1/2, so the extrapolation did the work
    assert ground[-1] < 0.5 - 1e-4


def test_scan_csv_export(tmp_path):
    scan = continuum_scan([10, 20], omega=1.0, levels=2)
    path = tmp_path / "scan.csv"
    scan.to_csv(path)
    lines = path.read_bytes().decode().strip().split("\r\n")
    assert lines[0] == "ell,level,eigenvalue,deviation,predicted_deviation"
    assert len(lines) == 5
    first = lines[1].split(",")
    assert first[0] == "10" and first[1] == "0"
    assert abs(float(first[2]) - scan.rows[0][2]) == 0.0


def test_validation():
    with pytest.raises(ValueError):
        build_spin_rep(0)
    with pytest.raises(ValueError):
        build_spin_rep(3, tau=-1.0)
    with pytest.raises(ValueError):
        oscillator_levels(build_spin_rep(2), 5)
    with pytest.raises(ValueError):
        continuum_scan([])
    with pytest.raises(ValueError):
        continuum_scan([10, 10])
    with pytest.raises(ValueError):
        continuum_scan([20, 10])
    with pytest.raises(ValueError):
        richardson_limit([10], [0.4])
