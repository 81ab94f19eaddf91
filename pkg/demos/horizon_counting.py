"""Horizon thermodynamics as plain state counting, in natural units.

Mass fixes everything: radiation temperature 1/(8 pi M), capture
cross-section 8 pi M^2, and a microstate count whose log is the
quarter-area law up to one additive constant. Absorbing a small energy
multiplies the count by exp(dE / T) -- detailed balance -- and the count
doubles once per 4 ln 2 of horizon area: one bit per fixed patch.
"""

import numpy as np

from ontology_lab.blackhole import (
    AREA_PER_BIT,
    hawking_temperature,
    hawking_temperature_kelvin,
    horizon_bits,
    log_density_ratio,
    table_rows,
)


def main():
    print("  M      T(M)        sigma(M)     bits        ln(count) - C")
    for row in table_rows([0.5, 1.0, 2.0, 4.0, 8.0]):
        m, t, sigma, bits, ln_states = row
        print(f"  {m:<5}  {t:.6f}    {sigma:>9.4f}    {bits:>9.4f}   {ln_states:>9.4f}")

    print(f"\none bit of distinguishable state per {AREA_PER_BIT:.6f} of area")

    m, de = 1.0, 0.01
    ratio = log_density_ratio(m, de)
    print(f"\nabsorbing dE = {de} at M = {m}:")
    print(f"  dE / T            = {ratio.first_order:.12f}")
    print(f"  exact area change = {ratio.exact:.12f}")
    print("  the two agree to first order; the quadratic piece is the "
          "back-reaction of the added mass")

    h = 1e-4
    slope = (horizon_bits(m + h).ln_states - horizon_bits(m - h).ln_states) / (2 * h)
    print(f"\nd ln(count)/dM = {slope:.6f} vs 1/T = "
          f"{1.0 / hawking_temperature(m):.6f}")

    solar = 1.989e30
    print(f"\nfor scale: a solar-mass horizon radiates at "
          f"{hawking_temperature_kelvin(solar):.2e} K")


if __name__ == "__main__":
    main()
