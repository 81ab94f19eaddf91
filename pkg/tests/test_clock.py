import numpy as np
import pytest

from ontology_lab.clock import (
    ClockModel,
    closed_form_energies,
    energy_spectrum,
    evolution_matrix,
    ontological_to_energy,
    step_state,
)


def test_step_state_cycles():
    model = ClockModel(5)
    assert step_state(model, 0) == 1
    assert step_state(model, 4) == 0
    assert step_state(model, 2, steps=13) == 0
    assert step_state(model, 3, steps=0) == 3
    with pytest.raises(IndexError):
        step_state(model, 5)
    with pytest.raises(IndexError):
        step_state(model, -1)
    with pytest.raises(ValueError):
        step_state(model, 1, steps=-2)


def test_evolution_matrix_entries_n3():
    u = evolution_matrix(ClockModel(3))
    phase = np.exp(-1j * np.pi / 3.0)
    expected = np.zeros((3, 3), dtype=np.complex128)
    expected[1, 0] = expected[2, 1] = expected[0, 2] = phase
    assert np.max(np.abs(u - expected)) == 0.0


def test_nth_power_is_minus_identity():
    for n in (1, 2, 3, 5, 8, 21):
        u = evolution_matrix(ClockModel(n))
        assert np.max(np.abs(np.linalg.matrix_power(u, n) + np.eye(n))) < 1e-13


def test_single_state_clock():
    model = ClockModel(1, tau=2.0)
    spec = energy_spectrum(model)
    # one level at half a quantum: pi / tau
    assert abs(spec.eigenvalues[0] - np.pi / 2.0) < 1e-14
    assert abs(closed_form_energies(model)[0] - np.pi / 2.0) < 1e-15


def test_two_state_clock_tau_half():
    model = ClockModel(2, tau=0.5)
    spec = energy_spectrum(model)
    assert np.max(np.abs(spec.eigenvalues - [np.pi, 3.0 * np.pi])) < 1e-13


def test_spectrum_matches_closed_form():
    for n in (3, 4, 5, 11, 32):
        for tau in (1.0, 0.25, 3.0):
            model = ClockModel(n, tau=tau)
            spec = energy_spectrum(model)
            assert np.max(np.abs(spec.eigenvalues - closed_form_energies(model))) < 1e-12


def test_energies_positive_and_below_one_turn():
    for n in (2, 7, 40):
        model = ClockModel(n, tau=0.7)
        e = energy_spectrum(model).eigenvalues
        assert np.all(e > 0.0)
        assert np.all(e < 2.0 * np.pi / model.tau + 1e-12)


def test_eigenvectors_solve_the_evolution():
    model = ClockModel(9, tau=1.3)
    u = evolution_matrix(model)
    spec = energy_spectrum(model)
    phases = np.exp(-1j * spec.eigenvalues * model.tau)
    assert np.max(np.abs(u @ spec.eigenvectors - spec.eigenvectors * phases)) < 1e-12


def test_fourier_column_is_stationary_mode():
    model = ClockModel(6)
    u = evolution_matrix(model)
    for nu in range(6):
        w = ontological_to_energy(model, nu)
        lam = np.exp(-1j * np.pi * (2 * nu + 1) / 6.0)
        assert np.max(np.abs(u @ w - lam * w)) < 1e-13
        # uniform spread over the basis states
        assert np.max(np.abs(np.abs(w) ** 2 - 1.0 / 6.0)) < 1e-14
    with pytest.raises(IndexError):
        ontological_to_energy(model, 6)


def test_model_validation():
    with pytest.raises(ValueError):
        ClockModel(0)
    with pytest.raises(ValueError):
        ClockModel(3, tau=0.0)
    with pytest.raises(ValueError):
        ClockModel(3, tau=-1.0)
