"""Closed-form horizon thermodynamics in gravitational natural units.

Works in units where the quantum of action, Newton's constant, the speed
of light, and Boltzmann's constant are all 1, so a mass M fixes everything:
radiation temperature 1/(8 pi M), low-energy capture cross-section
8 pi M^2, and a state count whose logarithm is the quarter-area law up to
one undetermined additive constant. Emission/absorption detailed balance
then says the microstate count doubles once per 4 ln 2 of horizon area.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import constants as si

LN2 = float(np.log(2.0))
AREA_PER_BIT = 4.0 * LN2


def _check_mass(mass: float) -> float:
    m = float(mass)
    if not (m > 0.0) or not np.isfinite(m):
        raise ValueError(f"mass must be positive and finite, got {mass!r}")
    return m


def hawking_temperature(mass: float) -> float:
    """Radiation temperature 1 / (8 pi M)."""
    return 1.0 / (8.0 * np.pi * _check_mass(mass))


def absorption_cross_section(mass: float) -> float:
    """Low-energy capture cross-section 8 pi M^2 = 2 pi r_+^2."""
    return 8.0 * np.pi * _check_mass(mass) ** 2


@dataclass(frozen=True)
class DensityRatio:
    """Log of the state-count ratio after absorbing energy delta_e."""

    first_order: float  # delta_e / T_H, the detailed-balance exponent
    exact: float        # quarter-area difference, all orders in delta_e


def log_density_ratio(mass: float, delta_e: float) -> DensityRatio:
    m = _check_mass(mass)
    de = float(delta_e)
    if not np.isfinite(de) or m + de <= 0.0:
        raise ValueError(f"delta_e = {delta_e!r} would not leave a positive mass")
    # first order computed literally as delta_e / T_H so the
    # detailed-balance identity holds bit for bit
    first = de / hawking_temperature(m)
    exact = 4.0 * np.pi * (m + de) ** 2 - 4.0 * np.pi * m**2
    return DensityRatio(first_order=first, exact=exact)


@dataclass(frozen=True)
class HorizonCount:
    """Quarter-area state count of a horizon of mass M."""

    bits: float        # area / (4 ln 2): binary digits of distinguishable state
    ln_states: float   # 4 pi M^2 + C


def horizon_bits(mass: float, constant_c: float = 0.0) -> HorizonCount:
    m = _check_mass(mass)
    area = 16.0 * np.pi * m**2
    return HorizonCount(
        bits=area / AREA_PER_BIT,
        ln_states=4.0 * np.pi * m**2 + float(constant_c),
    )


def hawking_temperature_kelvin(mass_kg: float) -> float:
    """Display helper: radiation temperature in kelvin for a mass in kg."""
    m = float(mass_kg)
    if not (m > 0.0):
        raise ValueError(f"mass must be positive, got {mass_kg!r}")
    return si.hbar * si.c**3 / (8.0 * np.pi * si.G * m * si.k)


def table_rows(masses, constant_c: float = 0.0) -> list:
    """Rows (M, T_H, sigma, bits, ln_rho) for the summary table."""
    rows = []
    for m in masses:
        count = horizon_bits(m, constant_c)
        rows.append((
            float(m),
            hawking_temperature(m),
            absorption_cross_section(m),
            count.bits,
            count.ln_states,
        ))
    return rows
