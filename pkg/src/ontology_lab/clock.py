"""Periodic deterministic automaton and its exact unitary lift.

A register cycling through N states once per period maps onto an N-level
quantum system: the one-step evolution is a cyclic permutation times a
half-step phase, and its eigenphases give an evenly spaced energy ladder
offset by half a quantum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import Spectrum, dft_matrix, fix_eigenvector_phases


@dataclass(frozen=True)
class ClockModel:
    """N-state cyclic automaton advancing one state per time step tau."""

    n_states: int
    tau: float = 1.0

    def __post_init__(self):
        if not isinstance(self.n_states, (int, np.integer)) or self.n_states < 1:
            raise ValueError(f"n_states must be a positive integer, got {self.n_states!r}")
        if not (float(self.tau) > 0.0):
            raise ValueError(f"tau must be positive, got {self.tau!r}")


def step_state(model: ClockModel, nu: int, steps: int = 1) -> int:
    """Advance ontological state nu by `steps` ticks (cyclic)."""
    if not isinstance(nu, (int, np.integer)) or not (0 <= nu < model.n_states):
        raise IndexError(f"state index {nu!r} outside 0..{model.n_states - 1}")
    if not isinstance(steps, (int, np.integer)) or steps < 0:
        raise ValueError(f"steps must be a nonnegative integer, got {steps!r}")
    return int((nu + steps) % model.n_states)


def evolution_matrix(model: ClockModel) -> np.ndarray:
    """One-step unitary: phase exp(-i pi / N) times the cyclic shift.

    Entry [mu, nu] is the phase iff mu = (nu + 1) mod N. The N-th power is
    exactly -identity, which is what forces the half-quantum offset in the
    spectrum.
    """
    n = model.n_states
    u = np.zeros((n, n), dtype=np.complex128)
    cols = np.arange(n)
    u[(cols + 1) % n, cols] = np.exp(-1j * np.pi / n)
    return u


def closed_form_energies(model: ClockModel) -> np.ndarray:
    """Energy ladder 2 pi (n + 1/2) / (N tau), n = 0..N-1."""
    n = np.arange(model.n_states)
    return 2.0 * np.pi * (n + 0.5) / (model.n_states * model.tau)


def energy_spectrum(model: ClockModel) -> Spectrum:
    """Numerically diagonalize the one-step unitary and extract energies.

    Eigenphases theta of U are read as exp(-i E tau) with the branch
    theta in (0, 2 pi], so every energy is strictly positive and below
    2 pi / tau. Eigenvalues come back ascending with phase-fixed,
    orthonormal eigenvectors.
    """
    u = evolution_matrix(model)
    lam, vectors = np.linalg.eig(u)
    theta = np.mod(-np.angle(lam), 2.0 * np.pi)
    theta[theta == 0.0] = 2.0 * np.pi
    energies = theta / model.tau
    order = np.argsort(energies, kind="stable")
    energies = energies[order]
    vectors = vectors[:, order]
    vectors /= np.linalg.norm(vectors, axis=0)
    vectors = fix_eigenvector_phases(vectors)
    return Spectrum(eigenvalues=energies, eigenvectors=vectors)


def ontological_to_energy(model: ClockModel, nu: int) -> np.ndarray:
    """Amplitudes of basis state nu over the energy eigenbasis.

    Column nu of the unitary DFT: exp(2 pi i n nu / N) / sqrt(N). The same
    vector is an eigenvector of the one-step unitary.
    """
    if not isinstance(nu, (int, np.integer)) or not (0 <= nu < model.n_states):
        raise IndexError(f"state index {nu!r} outside 0..{model.n_states - 1}")
    return dft_matrix(model.n_states)[:, nu].copy()
