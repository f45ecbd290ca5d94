"""Finite-difference cross-validation of the closed-form spectra.

An independent flux-form discretization with Sturm bisection reproduces
the analytic levels of all six Hamiltonian types and converges at second
order (Richardson ratio near 4).

Run: python demos/oracle_crosscheck.py
"""

import math

from su11pct import oracle, systems


def compare(label, spec, closed, grid, k):
    dh = oracle.discretize(spec, 0, grid)
    numeric = oracle.lowest_eigenvalues(dh, k, 1e-9)
    print(f"== {label} ==")
    for n, (num, ref) in enumerate(zip(numeric, closed)):
        print(f"  level {n}: closed {ref:+.6f}, grid {num:+.6f}, diff {abs(num - ref):.1e}")


def main():
    compare(
        "constant-mass oscillator",
        systems.OscillatorSpec(1.0, 0.0),
        [1.5, 3.5, 5.5],
        oracle.GridSpec(1e-4, 20.0, 4000),
        3,
    )
    compare(
        "fixed Morse well (A=2.5, B=1)",
        systems.MorseSpec(2.5, 1.0),
        [e for _, e in systems.spectrum_fixed_potential("morse", (2.5, 1.0), 0.0, 3)],
        oracle.GridSpec(-6.0, 25.0, 4000),
        3,
    )
    compare(
        "deformed oscillator (alpha=1)",
        systems.OscillatorSpec(math.sqrt(3.0), 0.0, 1.0),
        [5.5, 19.5],
        oracle.GridSpec(1e-6, 250.0, 30000),
        2,
    )
    compare(
        "deformed Coulomb well (alpha=0.1)",
        systems.CoulombSpec(0.0, 1.0, 0.1),
        [e for _, e in systems.spectrum_fixed_potential("coulomb", (1.0, 0.0), 0.1, 3)],
        oracle.GridSpec(1e-6, 200.0, 48000),
        3,
    )

    print("== second-order convergence (Richardson) ==")
    spec = systems.OscillatorSpec(1.0, 0.0)
    base = oracle.GridSpec(1e-4, 20.0, 1000)
    levels = [
        oracle.lowest_eigenvalues(oracle.discretize(spec, 0, g), 1, 1e-11)[0]
        for g in (base, base.refined(2), base.refined(4))
    ]
    ratio = (levels[0] - levels[1]) / (levels[1] - levels[2])
    print(f"  error ratio under h -> h/2: {ratio:.3f} (expected about 4)")


if __name__ == "__main__":
    main()
