"""Closed-form bound states of the six families and their spectra.

Walks through the oscillator ladder, the fixed-energy Morse/Coulomb
hierarchies, and the quadratic deformed oscillator spectrum, checking each
state against its Schrodinger equation pointwise.

Run: python demos/bound_states_and_spectra.py
"""

import math

import numpy as np

from su11pct import operators, systems


def main():
    print("== constant-mass radial oscillator (omega=1, L=0) ==")
    ho = systems.OscillatorSpec(omega=1.0, L=0.0)
    for n in range(4):
        st = systems.bound_state(ho, n)
        grid = operators.default_residual_grid(ho, n)
        resid = operators.eigen_residual(ho, n, grid)
        print(f"  n={n}: E = {st.energy:8.4f}   |H psi - E psi| / max|psi| = {resid:.2e}")

    print("\n== deformed oscillator (omega=sqrt(3), L=0, alpha=1) ==")
    pdm = systems.OscillatorSpec(omega=math.sqrt(3.0), L=0.0, alpha=1.0)
    print("  spectrum turns quadratic in n:")
    for n in range(4):
        print(f"  n={n}: E = {systems.energy(pdm, n):8.4f}")
    st = systems.bound_state(pdm, 2)
    grid = operators.default_residual_grid(pdm, 2)
    print(f"  n=2 eigen-residual: {operators.eigen_residual(pdm, 2, grid):.2e}")

    print("\n== one fixed Morse well (A=2.5, B=1): three levels ==")
    for k, e in systems.spectrum_fixed_potential("morse", (2.5, 1.0), 0.0, 10):
        print(f"  level {k}: {e:+.4f}")

    print("\n== the same well under deformation alpha=0.1 ==")
    for k, e in systems.spectrum_fixed_potential("morse", (2.5, 1.0), 0.1, 10):
        print(f"  level {k}: {e:+.6f}")

    print("\n== fixed Coulomb well: infinite tower vs finite deformed count ==")
    plain = systems.spectrum_fixed_potential("coulomb", (1.0, 0.0), 0.0, 8)
    print(f"  alpha=0  : {len(plain)} levels returned (truncated by request)")
    deformed = systems.spectrum_fixed_potential("coulomb", (1.0, 0.0), 0.1, 8)
    print(f"  alpha=0.1: {len(deformed)} levels total; the deformation removes the rest")
    for k, e in deformed:
        print(f"  level {k}: {e:+.6f}")

    print("\n== mass profiles M = 1/f^2 ==")
    r = np.array([0.5, 1.0, 2.0])
    m, v_eff, f, _, _ = systems.mass_and_potential(pdm, 0, r)
    for ri, mi, vi in zip(r, m, v_eff):
        print(f"  r={ri:.1f}: M = {mi:.4f}, V_eff = {vi:+.4f}")


if __name__ == "__main__":
    main()
