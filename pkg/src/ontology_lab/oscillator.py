"""Spin-ladder construction mapping the periodic clock onto an oscillator.

An N = 2l+1 state clock embeds into a spin-l multiplet. Position and
momentum are scaled transverse spin components; their commutator closes on
1 - (tau/pi) H instead of 1, and the deformation vanishes as l grows. The
quadratic identity

    H = w^2 x^2 / 2 + p^2 / 2 + (tau / 2 pi)(w^2 / 4 + H^2)

holds exactly at every finite l, so the low-lying spectrum of the pure
oscillator part approaches w (n + 1/2) from below with an exactly known
1/(2l+1) deviation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import commutator, frobenius, hermitian_eigensystem
from .tableio import write_csv


@dataclass(frozen=True)
class SpinRep:
    """Spin-l matrices plus the scaled position/momentum pair."""

    ell: int
    tau: float
    omega: float
    lx: np.ndarray
    ly: np.ndarray
    lz: np.ndarray
    xhat: np.ndarray
    phat: np.ndarray
    alpha: float
    beta: float

    @property
    def dim(self) -> int:
        return 2 * self.ell + 1


def build_spin_rep(ell: int, tau: float = 1.0) -> SpinRep:
    """Construct the spin-l representation for an N = 2l+1 clock.

    Basis ordered by magnetic number m = -l..l. Ladder matrix elements are
    sqrt(l(l+1) - m(m+1)); scalings alpha = sqrt(tau/pi) and
    beta = -(2/(2l+1)) sqrt(pi/tau) make [xhat, phat] = i (1 - (tau/pi) H).
    """
    if not isinstance(ell, (int, np.integer)) or ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell!r}")
    if not (float(tau) > 0.0):
        raise ValueError(f"tau must be positive, got {tau!r}")
    ell = int(ell)
    tau = float(tau)
    dim = 2 * ell + 1
    m = np.arange(-ell, ell + 1, dtype=float)
    raising = np.sqrt(ell * (ell + 1) - m[:-1] * (m[:-1] + 1))
    lplus = np.zeros((dim, dim), dtype=np.complex128)
    lplus[np.arange(1, dim), np.arange(dim - 1)] = raising
    lminus = lplus.conj().T
    lx = 0.5 * (lplus + lminus)
    ly = (lplus - lminus) / 2j
    lz = np.diag(m).astype(np.complex128)
    omega = 2.0 * np.pi / ((2 * ell + 1) * tau)
    alpha = np.sqrt(tau / np.pi)
    beta = -(2.0 / (2 * ell + 1)) * np.sqrt(np.pi / tau)
    return SpinRep(
        ell=ell, tau=tau, omega=omega,
        lx=lx, ly=ly, lz=lz,
        xhat=alpha * lx, phat=beta * ly,
        alpha=alpha, beta=beta,
    )


def hamiltonian(rep: SpinRep) -> np.ndarray:
    """Clock Hamiltonian omega (Lz + (l + 1/2) I); spectrum w (n + 1/2)."""
    return rep.omega * (rep.lz + (rep.ell + 0.5) * np.eye(rep.dim))


def oscillator_hamiltonian(rep: SpinRep) -> np.ndarray:
    """Pure quadratic part w^2 x^2 / 2 + p^2 / 2."""
    return 0.5 * rep.omega**2 * rep.xhat @ rep.xhat + 0.5 * rep.phat @ rep.phat


def su2_residual(rep: SpinRep) -> float:
    """Worst Frobenius deviation of [L_i, L_j] = i eps_ijk L_k."""
    return max(
        frobenius(commutator(rep.lx, rep.ly) - 1j * rep.lz),
        frobenius(commutator(rep.ly, rep.lz) - 1j * rep.lx),
        frobenius(commutator(rep.lz, rep.lx) - 1j * rep.ly),
    )


def casimir_residual(rep: SpinRep) -> float:
    total = rep.lx @ rep.lx + rep.ly @ rep.ly + rep.lz @ rep.lz
    return frobenius(total - rep.ell * (rep.ell + 1) * np.eye(rep.dim))


def commutator_identity_residual(rep: SpinRep) -> float:
    """|| [xhat, phat] - i (I - (tau/pi) H) ||_F; exact at every finite l."""
    target = 1j * (np.eye(rep.dim) - (rep.tau / np.pi) * hamiltonian(rep))
    return frobenius(commutator(rep.xhat, rep.phat) - target)


def hamiltonian_identity_residual(rep: SpinRep) -> float:
    """Residual of the exact quadratic splitting of H at finite l."""
    h = hamiltonian(rep)
    rhs = (
        oscillator_hamiltonian(rep)
        + (rep.tau / (2.0 * np.pi)) * (0.25 * rep.omega**2 * np.eye(rep.dim) + h @ h)
    )
    return frobenius(h - rhs)


def oscillator_levels(rep: SpinRep, levels: int) -> np.ndarray:
    """Lowest `levels` distinct eigenvalues of the pure quadratic part.

    The quadratic part depends on Lz only through Lz^2, so eigenvalues come
    in +-m pairs; sorted ascending they sit in consecutive equal pairs and
    the distinct values (every second entry) are the oscillator levels.
    """
    if not isinstance(levels, (int, np.integer)) or levels < 1:
        raise ValueError(f"levels must be a positive integer, got {levels!r}")
    if rep.ell < levels:
        raise ValueError(f"need ell >= levels, got ell={rep.ell}, levels={levels}")
    spec = hermitian_eigensystem(oscillator_hamiltonian(rep))
    return spec.eigenvalues[0::2][:levels]


@dataclass(frozen=True)
class ContinuumScan:
    """Level-by-level approach of the spin oscillator to the continuum."""

    omega: float
    levels: int
    ells: tuple
    # rows of (ell, level, eigenvalue, deviation, predicted_deviation)
    rows: tuple
    fitted_coefficients: np.ndarray | None
    predicted_coefficients: np.ndarray
    observed_order: float | None

    CSV_HEADER = ("ell", "level", "eigenvalue", "deviation", "predicted_deviation")

    def to_csv(self, path) -> None:
        write_csv(path, self.CSV_HEADER, self.rows)


def predicted_deviation(omega: float, ell: int, level: int) -> float:
    """Exact finite-l offset: -w (1/4 + (n + 1/2)^2) / (2l + 1)."""
    return -omega * (0.25 + (level + 0.5) ** 2) / (2 * ell + 1)


def continuum_scan(ells, omega: float = 1.0, levels: int = 5) -> ContinuumScan:
    """Diagonalize the quadratic part across an ascending list of l values.

    For each l the period is fixed to tau = 2 pi / ((2l+1) w) so every row
    targets the same oscillator frequency. Deviations from w (n + 1/2) are
    fitted to c / (2l+1) per level (two or more l values required for the
    fit and the observed order; otherwise those fields are None).
    """
    ells = [int(e) for e in ells]
    if not ells:
        raise ValueError("ells must be nonempty")
    if any(b <= a for a, b in zip(ells, ells[1:])):
        raise ValueError("ells must be strictly ascending")
    if not (float(omega) > 0.0):
        raise ValueError(f"omega must be positive, got {omega!r}")
    omega = float(omega)

    rows = []
    deviations = np.empty((len(ells), levels))
    for i, ell in enumerate(ells):
        tau = 2.0 * np.pi / ((2 * ell + 1) * omega)
        rep = build_spin_rep(ell, tau)
        vals = oscillator_levels(rep, levels)
        for n in range(levels):
            dev = vals[n] - omega * (n + 0.5)
            deviations[i, n] = dev
            rows.append((ell, n, float(vals[n]), float(dev),
                         predicted_deviation(omega, ell, n)))

    predicted = np.array([-omega * (0.25 + (n + 0.5) ** 2) for n in range(levels)])
    if len(ells) >= 2:
        x = 1.0 / (2.0 * np.array(ells, dtype=float) + 1.0)
        fitted = deviations.T @ x / np.dot(x, x)
        # order: slope of log|deviation| against log(1/(2l+1)), per level
        logs = np.log(np.abs(deviations))
        lx = np.log(x)
        slopes = [
            np.polyfit(lx, logs[:, n], 1)[0] for n in range(levels)
        ]
        order = float(np.median(slopes))
    else:
        fitted = None
        order = None
    return ContinuumScan(
        omega=omega, levels=levels, ells=tuple(ells), rows=tuple(rows),
        fitted_coefficients=fitted, predicted_coefficients=predicted,
        observed_order=order,
    )


def richardson_limit(ells, values) -> float:
    """Eliminate the leading 1/(2l+1) error from the last two scan points."""
    if len(ells) < 2 or len(ells) != len(values):
        raise ValueError("need at least two (ell, value) pairs")
    h1 = 1.0 / (2 * ells[-2] + 1)
    h2 = 1.0 / (2 * ells[-1] + 1)
    v1, v2 = values[-2], values[-1]
    return float((h1 * v2 - h2 * v1) / (h1 - h2))
