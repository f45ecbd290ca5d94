"""The six solvable families and their closed-form bound states.

Three potentials (radial harmonic oscillator on r > 0, Morse on the full
line, radial Coulomb on R > 0) in two settings each: constant mass
(``alpha == 0``) and a position-dependent mass M = 1/f^2 built from the
deforming profiles

    f_ho(r) = 1 + alpha r^2,  f_m(x) = 1 + alpha e^-x,  f_c(R) = 1 + alpha R.

Every bound state is a closed form "sign * exp(g) * polynomial" and its
derivatives up to fourth order are assembled analytically, which lets the
operator modules act on states without any finite differencing.

Units: hbar = 1 and particle mass 1/2, so kinetic terms carry no 1/2m.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, ParameterError

LN2 = math.log(2.0)


def _warn_if_not_half_integer(value, name):
    # physically L comes from l + (d-3)/2, hence integer or half-integer;
    # the formulas stay valid for any real value, so only warn
    if abs(2.0 * value - round(2.0 * value)) > 1e-12:
        # stacklevel 4 skips this helper, __post_init__ and the generated __init__
        warnings.warn(
            f"{name} = {value} is not integer or half-integer; formulas remain "
            "valid but the spectrum has no d-dimensional interpretation",
            UserWarning,
            stacklevel=4,
        )


@dataclass(frozen=True)
class OscillatorSpec:
    """Radial harmonic oscillator: frequency omega, grand angular momentum L."""

    omega: float
    L: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.omega > 0:
            raise ParameterError(f"omega must be positive, got {self.omega}")
        if self.L < -0.5:
            raise ParameterError(f"L must be >= -1/2, got {self.L}")
        if self.alpha < 0:
            raise ParameterError(f"alpha must be non-negative, got {self.alpha}")
        _warn_if_not_half_integer(self.L, "L")

    family = "ho"

    @property
    def deformed(self):
        return self.alpha > 0

    @property
    def delta(self):
        """sqrt(omega^2 + alpha^2)."""
        return math.hypot(self.omega, self.alpha)

    @property
    def lam(self):
        """(alpha + sqrt(omega^2 + alpha^2)) / 2; equals omega/2 at alpha = 0."""
        return 0.5 * (self.alpha + self.delta)


@dataclass(frozen=True)
class MorseSpec:
    """Morse family: base well depth parameter A0 and range parameter B."""

    A0: float
    B: float
    alpha: float = 0.0

    def __post_init__(self):
        if not self.A0 > 0:
            raise ParameterError(f"A0 must be positive, got {self.A0}")
        if not self.B > 0:
            raise ParameterError(f"B must be positive, got {self.B}")
        if self.alpha < 0:
            raise ParameterError(f"alpha must be non-negative, got {self.alpha}")
        if self.deformed and not self.sqrt_eps > 0:
            raise ParameterError(
                "no normalizable lowest state: (2*A0+1)*B must exceed "
                f"(alpha + sqrt(4B^2+alpha^2))/2, got A0={self.A0}, B={self.B}, "
                f"alpha={self.alpha}"
            )

    family = "morse"

    @property
    def deformed(self):
        return self.alpha > 0

    @property
    def delta(self):
        """sqrt(4 B^2 + alpha^2)."""
        return math.hypot(2.0 * self.B, self.alpha)

    @property
    def lam_abs(self):
        """(alpha + sqrt(4B^2 + alpha^2)) / 2; equals B at alpha = 0."""
        return 0.5 * (self.alpha + self.delta)

    @property
    def sqrt_eps(self):
        """sqrt(|epsilon|); equals A0 at alpha = 0."""
        if self.alpha == 0:
            return self.A0
        return 0.5 * ((2.0 * self.A0 + 1.0) * self.B / self.lam_abs - 1.0)

    @property
    def epsilon(self):
        """The fixed energy shared by all hierarchy members, -sqrt_eps^2."""
        if self.alpha == 0:
            return -self.A0 * self.A0
        return -self.sqrt_eps**2


@dataclass(frozen=True)
class CoulombSpec:
    """Radial Coulomb family: angular constant Lcal and base charge Z0."""

    Lcal: float
    Z0: float
    alpha: float = 0.0

    def __post_init__(self):
        if self.Lcal <= -0.5:
            raise ParameterError(f"Lcal must be > -1/2, got {self.Lcal}")
        if not self.Z0 > 0:
            raise ParameterError(f"Z0 must be positive, got {self.Z0}")
        if self.alpha < 0:
            raise ParameterError(f"alpha must be non-negative, got {self.alpha}")
        if self.deformed and self.lam_abs <= self.alpha:
            raise ParameterError(
                f"Z0 must exceed alpha*(Lcal+1) for a deformed Coulomb family, "
                f"got Z0={self.Z0}, Lcal={self.Lcal}, alpha={self.alpha}"
            )
        _warn_if_not_half_integer(self.Lcal, "Lcal")

    family = "coulomb"

    @property
    def deformed(self):
        return self.alpha > 0

    @property
    def lam_abs(self):
        """Z0 / (Lcal + 1), the Morse-side scale of the family."""
        return self.Z0 / (self.Lcal + 1.0)

    @property
    def B(self):
        """Range parameter of the Morse preimage, sqrt(lam*(lam - alpha))."""
        return math.sqrt(self.lam_abs * (self.lam_abs - self.alpha))

    @property
    def sqrt_energy(self):
        """sqrt(|E|) = lam - alpha/2; equals Z0/(Lcal+1) at alpha = 0."""
        return self.lam_abs - 0.5 * self.alpha

    @property
    def energy(self):
        """The fixed energy shared by all hierarchy members."""
        return -self.sqrt_energy**2


def domain(spec):
    """Coordinate interval of the family (open endpoints)."""
    if spec.family == "morse":
        return (-math.inf, math.inf)
    return (0.0, math.inf)


def check_point(spec, point):
    """Raise DomainError if any evaluation point leaves the open domain."""
    lo, hi = domain(spec)
    p = np.asarray(point, dtype=float)
    if np.any(p <= lo) or np.any(p >= hi):
        raise DomainError(f"point {point!r} outside open domain ({lo}, {hi})")


def member_coupling(spec, n):
    """The n-th hierarchy member's coupling: A_n for Morse, Z_n for Coulomb.

    Constant mass gives the linear laws A_n = A0 + n and
    Z_n = Z0 (n+Lcal+1)/(Lcal+1); the deformed families acquire a
    quadratic n-dependence.
    """
    if n < 0:
        raise ParameterError("member index must be non-negative")
    if spec.family == "morse":
        if spec.alpha == 0:
            return spec.A0 + float(n)
        lam = spec.lam_abs
        a = spec.alpha
        return (a * n + lam) / lam * spec.A0 + n * (
            2.0 * spec.B**2 + a * spec.B + a * lam * (n + 1.0)
        ) / (2.0 * spec.B * lam)
    if spec.family == "coulomb":
        base = spec.Z0 * (n + spec.Lcal + 1.0) / (spec.Lcal + 1.0)
        if spec.alpha == 0:
            return base
        return base + 0.5 * spec.alpha * n * (n + 2.0 * spec.Lcal + 1.0)
    raise ParameterError("oscillator family has a single Hamiltonian, no coupling")


def energy(spec, n):
    """Energy of the n-th bound state (oscillator) or the fixed family energy.

    The oscillator value alpha*(4n^2 + 4n(L+1) + L + 1) + (4n+2L+3)*lam
    reduces exactly to omega*(2n + L + 3/2) at alpha = 0.  Morse and
    Coulomb hierarchies share one energy independent of n.
    """
    if n < 0:
        raise ParameterError("quantum number must be non-negative")
    if spec.family == "ho":
        L, a = spec.L, spec.alpha
        return a * (4.0 * n * n + 4.0 * n * (L + 1.0) + L + 1.0) + (
            4.0 * n + 2.0 * L + 3.0
        ) * spec.lam
    if spec.family == "morse":
        return spec.epsilon
    return spec.energy


def deforming(spec, point):
    """Deforming profile f and derivatives (f, f', f'', f''', f'''')."""
    check_point(spec, point)
    p = np.asarray(point, dtype=float)
    a = spec.alpha
    if spec.family == "ho":
        return (1.0 + a * p * p, 2.0 * a * p, 2.0 * a + 0.0 * p, 0.0 * p, 0.0 * p)
    if spec.family == "morse":
        q = a * np.exp(-p)
        return (1.0 + q, -q, q, -q, q)
    return (1.0 + a * p, a + 0.0 * p, 0.0 * p, 0.0 * p, 0.0 * p)


def potential_raw(spec, n, point):
    """Potential of the n-th member Hamiltonian (no deformation correction)."""
    check_point(spec, point)
    p = np.asarray(point, dtype=float)
    if spec.family == "ho":
        return spec.L * (spec.L + 1.0) / (p * p) + 0.25 * spec.omega**2 * p * p
    if spec.family == "morse":
        q = np.exp(-p)
        A_n = member_coupling(spec, n)
        return spec.B**2 * q * q - spec.B * (2.0 * A_n + 1.0) * q
    Z_n = member_coupling(spec, n)
    return spec.Lcal * (spec.Lcal + 1.0) / (p * p) - 2.0 * Z_n / p


def mass_and_potential(spec, n, point):
    """Mass profile and effective potential at a point.

    Returns ``(mass, v_eff, f, f1, f2)`` where mass = 1/f^2 and v_eff is
    the potential of the flux form -d/dq (1/M) d/dq + v_eff, i.e. the raw
    member potential minus (f f''/2 + f'^2/4).
    """
    f, f1, f2, _, _ = deforming(spec, point)
    p = np.asarray(point, dtype=float)
    a = spec.alpha
    if spec.family == "ho":
        v_eff = (
            spec.L * (spec.L + 1.0) / (p * p)
            + 0.25 * (spec.omega**2 - 8.0 * a * a) * p * p
            - a
        )
    elif spec.family == "morse":
        q = np.exp(-p)
        A_n = member_coupling(spec, n)
        v_eff = (spec.B**2 - 0.75 * a * a) * q * q - (
            spec.B * (2.0 * A_n + 1.0) + 0.5 * a
        ) * q
    else:
        Z_n = member_coupling(spec, n)
        v_eff = (
            spec.Lcal * (spec.Lcal + 1.0) / (p * p) - 2.0 * Z_n / p - 0.25 * a * a
        )
    return (1.0 / (f * f), v_eff, f, f1, f2)


# ---------------------------------------------------------------------------
# closed-form states
# ---------------------------------------------------------------------------


def _log_derivs(f_stack):
    """Derivatives 1..4 of ln f from the stack (f, f', f'', f''', f'''')."""
    f0, f1, f2, f3, f4 = f_stack
    w1 = f1 / f0
    w2 = f2 / f0 - w1 * w1
    w3 = f3 / f0 - 3.0 * f1 * f2 / f0**2 + 2.0 * w1**3
    w4 = (
        f4 / f0
        - (4.0 * f1 * f3 + 3.0 * f2 * f2) / f0**2
        + 12.0 * f1 * f1 * f2 / f0**3
        - 6.0 * w1**4
    )
    return w1, w2, w3, w4


def _inv_derivs(f_stack):
    """Derivatives 1..4 of 1/f from the stack (f, f', f'', f''', f'''')."""
    f0, f1, f2, f3, f4 = f_stack
    v1 = -f1 / f0**2
    v2 = 2.0 * f1 * f1 / f0**3 - f2 / f0**2
    v3 = -6.0 * f1**3 / f0**4 + 6.0 * f1 * f2 / f0**3 - f3 / f0**2
    v4 = (
        24.0 * f1**4 / f0**5
        - 36.0 * f1 * f1 * f2 / f0**4
        + (6.0 * f2 * f2 + 8.0 * f1 * f3) / f0**3
        - f4 / f0**2
    )
    return v1, v2, v3, v4


class _StateParts:
    """Pieces of the closed form sign * p^power * exp(log_norm + h(p)) * P(y(p)).

    The coordinate power is kept out of the exponent: its derivatives are
    exact falling factorials, which avoids catastrophic cancellation of
    1/p^2-sized terms near the origin in high-order derivatives.
    """

    def __init__(
        self, log_norm, sign, power, h_derivs, y_derivs, poly_derivs, poly_log_bound
    ):
        self.log_norm = log_norm
        self.sign = sign
        self.power = power  # exponent of the leading coordinate power
        self.h_derivs = h_derivs  # point -> [h, h', h'', h''', h'''']
        self.y_derivs = y_derivs  # point -> [y, y', y'', y''', y'''']
        self.poly_derivs = poly_derivs  # (y, kmax) -> [P, P', ... P^(kmax)]
        self.poly_log_bound = poly_log_bound  # |y| -> log bound on |P^(k)|


def _ho_parts(spec, n):
    L, a = spec.L, spec.alpha
    if a == 0:
        w = spec.omega
        log_norm = 0.5 * (L + 1.5) * math.log(0.5 * w) + 0.5 * (
            LN2 + specfun.log_gamma(n + 1.0) - specfun.log_gamma(n + L + 1.5)
        )
        sign = -1.0 if n % 2 else 1.0

        def h_derivs(p):
            z = np.zeros_like(p)
            return [-0.25 * w * p * p, -0.5 * w * p, -0.5 * w + z, z, z]

        def y_derivs(p):
            z = np.zeros_like(p)
            return [0.5 * w * p * p, w * p, w + z, z, z]

        la = L + 0.5
        return _StateParts(
            log_norm,
            sign,
            L + 1.0,
            h_derivs,
            y_derivs,
            lambda y, k: specfun.laguerre_derivs(n, la, y, k),
            lambda ay: n * np.log1p(ay) + 150.0,
        )

    lam = spec.lam
    ra = lam / a
    log_norm = 0.5 * (
        LN2
        + (L + 1.5) * math.log(a)
        + specfun.log_gamma(n + 1.0)
        + math.log(ra + 2.0 * n + L + 1.0)
        + specfun.log_gamma(ra + n + L + 1.0)
        - specfun.log_gamma(ra + n + 0.5)
        - specfun.log_gamma(n + L + 1.5)
    )
    p_exp = 0.5 * (ra + L + 2.0)

    def h_derivs(p):
        f_stack = deforming(spec, p)
        w1, w2, w3, w4 = _log_derivs(f_stack)
        lf = np.log(f_stack[0])
        return [-p_exp * lf, -p_exp * w1, -p_exp * w2, -p_exp * w3, -p_exp * w4]

    def y_derivs(p):
        f_stack = deforming(spec, p)
        t = (a * p * p - 1.0) / f_stack[0]
        v1, v2, v3, v4 = _inv_derivs(f_stack)
        return [t, -2.0 * v1, -2.0 * v2, -2.0 * v3, -2.0 * v4]

    pa, pb = ra - 0.5, L + 0.5
    bound = (
        specfun.log_gamma(n + max(pa, pb) + 1.0)
        - specfun.log_gamma(n + 1.0)
        - specfun.log_gamma(max(pa, pb) + 1.0)
        + n * LN2
        + 150.0
    )
    return _StateParts(
        log_norm,
        1.0,
        L + 1.0,
        h_derivs,
        y_derivs,
        lambda t, k: specfun.jacobi_derivs(n, pa, pb, t, k),
        lambda ay: bound + 0.0 * ay,
    )


def _morse_parts(spec, n):
    a, B = spec.alpha, spec.B
    if a == 0:
        A0 = spec.A0
        log_norm = (A0 + 0.5) * math.log(2.0 * B) + 0.5 * (
            LN2 + specfun.log_gamma(n + 1.0) - specfun.log_gamma(n + 2.0 * A0 + 1.0)
        )
        sign = -1.0 if n % 2 else 1.0

        def h_derivs(p):
            q = np.exp(-p)
            return [-A0 * p - B * q, -A0 + B * q, -B * q, B * q, -B * q]

        def y_derivs(p):
            y = 2.0 * B * np.exp(-p)
            return [y, -y, y, -y, y]

        la = 2.0 * A0
        return _StateParts(
            log_norm,
            sign,
            0.0,
            h_derivs,
            y_derivs,
            lambda y, k: specfun.laguerre_derivs(n, la, y, k),
            lambda ay: n * np.log1p(ay) + 150.0,
        )

    lam = spec.lam_abs
    s = spec.sqrt_eps
    ra2 = 2.0 * lam / a
    log_norm = 0.5 * (
        LN2
        + (2.0 * s + 1.0) * math.log(a)
        + specfun.log_gamma(n + 1.0)
        + math.log(ra2 + 2.0 * n + 2.0 * s)
        + specfun.log_gamma(ra2 + n + 2.0 * s)
        - specfun.log_gamma(ra2 + n)
        - specfun.log_gamma(n + 2.0 * s + 1.0)
    )
    p_exp = lam / a + s + 0.5

    def h_derivs(p):
        f_stack = deforming(spec, p)
        w1, w2, w3, w4 = _log_derivs(f_stack)
        return [
            -s * p - p_exp * np.log(f_stack[0]),
            -s - p_exp * w1,
            -p_exp * w2,
            -p_exp * w3,
            -p_exp * w4,
        ]

    def y_derivs(p):
        f_stack = deforming(spec, p)
        t = (a * np.exp(-p) - 1.0) / f_stack[0]
        v1, v2, v3, v4 = _inv_derivs(f_stack)
        return [t, -2.0 * v1, -2.0 * v2, -2.0 * v3, -2.0 * v4]

    pa, pb = ra2 - 1.0, 2.0 * s
    bound = (
        specfun.log_gamma(n + max(pa, pb) + 1.0)
        - specfun.log_gamma(n + 1.0)
        - specfun.log_gamma(max(pa, pb) + 1.0)
        + n * LN2
        + 150.0
    )
    return _StateParts(
        log_norm,
        1.0,
        0.0,
        h_derivs,
        y_derivs,
        lambda t, k: specfun.jacobi_derivs(n, pa, pb, t, k),
        lambda ay: bound + 0.0 * ay,
    )


def _coulomb_parts(spec, n):
    a, Lc = spec.alpha, spec.Lcal
    if a == 0:
        beta = spec.Z0 / (Lc + 1.0)  # Z_n / (n+Lcal+1) is n-independent
        log_norm = (Lc + 1.0) * math.log(2.0 * beta) + 0.5 * (
            LN2 + specfun.log_gamma(n + 1.0) - specfun.log_gamma(n + 2.0 * Lc + 2.0)
        )
        sign = -1.0 if n % 2 else 1.0

        def h_derivs(p):
            z = np.zeros_like(p)
            return [-beta * p, -beta + z, z, z, z]

        def y_derivs(p):
            z = np.zeros_like(p)
            return [2.0 * beta * p, 2.0 * beta + z, z, z, z]

        la = 2.0 * Lc + 1.0
        return _StateParts(
            log_norm,
            sign,
            Lc + 1.0,
            h_derivs,
            y_derivs,
            lambda y, k: specfun.laguerre_derivs(n, la, y, k),
            lambda ay: n * np.log1p(ay) + 150.0,
        )

    s = spec.sqrt_energy
    ra2 = 2.0 * s / a
    log_norm = 0.5 * (
        LN2
        + (2.0 * Lc + 2.0) * math.log(a)
        + specfun.log_gamma(n + 1.0)
        + math.log(ra2 + 2.0 * n + 2.0 * Lc + 2.0)
        + specfun.log_gamma(ra2 + n + 2.0 * Lc + 2.0)
        - specfun.log_gamma(ra2 + n + 1.0)
        - specfun.log_gamma(n + 2.0 * Lc + 2.0)
    )
    p_exp = s / a + Lc + 1.5

    def h_derivs(p):
        f_stack = deforming(spec, p)
        w1, w2, w3, w4 = _log_derivs(f_stack)
        lf = np.log(f_stack[0])
        return [-p_exp * lf, -p_exp * w1, -p_exp * w2, -p_exp * w3, -p_exp * w4]

    def y_derivs(p):
        f_stack = deforming(spec, p)
        t = (a * p - 1.0) / f_stack[0]
        v1, v2, v3, v4 = _inv_derivs(f_stack)
        return [t, -2.0 * v1, -2.0 * v2, -2.0 * v3, -2.0 * v4]

    pa, pb = ra2, 2.0 * Lc + 1.0
    bound = (
        specfun.log_gamma(n + max(pa, pb) + 1.0)
        - specfun.log_gamma(n + 1.0)
        - specfun.log_gamma(max(pa, pb) + 1.0)
        + n * LN2
        + 150.0
    )
    return _StateParts(
        log_norm,
        1.0,
        Lc + 1.0,
        h_derivs,
        y_derivs,
        lambda t, k: specfun.jacobi_derivs(n, pa, pb, t, k),
        lambda ay: bound + 0.0 * ay,
    )


_PARTS = {"ho": _ho_parts, "morse": _morse_parts, "coulomb": _coulomb_parts}

_BINOM = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]]


class BoundState:
    """One closed-form eigenfunction of a family member.

    Attributes mirror the common data of all six families: the quantum
    number ``n``, the ``energy`` it solves the member equation with, the
    signed normalization constant ``norm_coeff`` and an ``evaluator``
    returning (value, d1, d2) at a point.  ``derivs`` extends the
    evaluation to fourth derivatives for operator composition.
    """

    max_order = 4

    def __init__(self, spec, n):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ParameterError(f"quantum number must be a non-negative int, got {n}")
        self.spec = spec
        self.family = spec.family
        self.mass_kind = "pdm" if spec.deformed else "constant"
        self.n = int(n)
        self.energy = energy(spec, n)
        self._parts = _PARTS[spec.family](spec, n)
        self.norm_coeff = self._parts.sign * math.exp(self._parts.log_norm)
        self.domain = domain(spec)

    def derivs(self, point, order=2):
        """Value and derivatives (value, d1, ..., d_order) at a point."""
        if order < 0 or order > self.max_order:
            raise ParameterError(f"order must be in [0, {self.max_order}]")
        check_point(self.spec, point)
        p = np.asarray(point, dtype=float)
        scalar = p.ndim == 0
        p = np.atleast_1d(p)
        parts = self._parts
        m = parts.power
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            h = parts.h_derivs(p)
            y = parts.y_derivs(p)
            log_amp = parts.log_norm + h[0]
            if m != 0.0:
                log_amp = log_amp + m * np.log(p)
            dead = log_amp + parts.poly_log_bound(np.abs(y[0])) < -745.0
            y0 = np.where(dead, 0.0 * y[0], y[0])
            poly = parts.poly_derivs(y0, order)
            u = [parts.sign * np.exp(parts.log_norm + h[0])]
            if order >= 1:
                u.append(h[1] * u[0])
            if order >= 2:
                u.append((h[2] + h[1] ** 2) * u[0])
            if order >= 3:
                u.append((h[3] + 3.0 * h[1] * h[2] + h[1] ** 3) * u[0])
            if order >= 4:
                u.append(
                    (
                        h[4]
                        + 4.0 * h[1] * h[3]
                        + 3.0 * h[2] ** 2
                        + 6.0 * h[1] ** 2 * h[2]
                        + h[1] ** 4
                    )
                    * u[0]
                )
            q = [poly[0]]
            if order >= 1:
                q.append(y[1] * poly[1])
            if order >= 2:
                q.append(y[2] * poly[1] + y[1] ** 2 * poly[2])
            if order >= 3:
                q.append(
                    y[3] * poly[1] + 3.0 * y[1] * y[2] * poly[2] + y[1] ** 3 * poly[3]
                )
            if order >= 4:
                q.append(
                    y[4] * poly[1]
                    + (4.0 * y[1] * y[3] + 3.0 * y[2] ** 2) * poly[2]
                    + 6.0 * y[1] ** 2 * y[2] * poly[3]
                    + y[1] ** 4 * poly[4]
                )
            # smooth part G = u * P(y) by Leibniz
            g_stack = []
            for k in range(order + 1):
                g_stack.append(sum(_BINOM[k][j] * u[j] * q[k - j] for j in range(k + 1)))
            # exact power factor: d^j/dp^j p^m = fall_j p^(m-j)
            fall = [1.0]
            for j in range(1, order + 1):
                fall.append(fall[-1] * (m - (j - 1)))
            out = []
            for k in range(order + 1):
                if m == 0.0:
                    fk = g_stack[k]
                else:
                    fk = sum(
                        _BINOM[k][j] * fall[j] * p ** (m - j) * g_stack[k - j]
                        for j in range(k + 1)
                        if fall[j] != 0.0
                    )
                out.append(np.where(dead, 0.0, fk))
        if scalar:
            return tuple(float(o[0]) for o in out)
        return tuple(out)

    def evaluator(self, point):
        """(value, d1, d2) at a point; vectorized over ndarray input."""
        return self.derivs(point, 2)

    def __call__(self, point):
        return self.derivs(point, 0)[0]


def bound_state(spec, n):
    """Closed-form bound state number n of the family defined by spec."""
    return BoundState(spec, n)


# ---------------------------------------------------------------------------
# fixed-potential spectra
# ---------------------------------------------------------------------------


def _positive_root_levels(roots_iter, max_count):
    # keep k while the signed square root of the level stays positive;
    # it decreases strictly, so the energies -s_k^2 increase while kept.
    # Squaring first would hide the sign and admit non-normalizable
    # candidates (confirmed against the finite-difference oracle).
    out = []
    for k, s in roots_iter:
        if len(out) >= max_count or s <= 0:
            break
        out.append((k, -s * s))
    return out


def spectrum_fixed_potential(family, params, alpha, max_count):
    """Bound spectrum of one fixed Morse or Coulomb potential.

    ``params`` is (A_bar, B) for Morse or (Z_bar, Lcal) for Coulomb.  At
    alpha = 0 the Morse well holds ceil(A_bar) levels -(A_bar - k)^2 and
    the Coulomb well infinitely many -(Z_bar/(k+Lcal+1))^2, truncated at
    ``max_count``.  For alpha > 0 a level -s_k^2 is kept while its signed
    root s_k is positive (the associated eigenfunction decays like s_k);
    the deformation can therefore suppress levels, down to a finite
    Coulomb count.
    """
    if max_count < 1:
        raise ParameterError("max_count must be at least 1")
    if alpha < 0:
        raise ParameterError("alpha must be non-negative")
    if family == "morse":
        A_bar, B = params
        if not A_bar > 0 or not B > 0:
            raise ParameterError("Morse parameters must be positive")
        if alpha == 0:
            n_top = min(math.ceil(A_bar) - 1, max_count - 1)
            return [(k, -((A_bar - k) ** 2)) for k in range(n_top + 1)]
        lam = 0.5 * (alpha + math.hypot(2.0 * B, alpha))

        def roots():
            for k in range(max_count):
                num = (2.0 * A_bar + 1.0) * B - alpha * k * k - (2.0 * k + 1.0) * lam
                yield k, num / (2.0 * (alpha * k + lam))

        out = _positive_root_levels(roots(), max_count)
        if len(out) < min(math.ceil(A_bar), max_count):
            warnings.warn(
                f"deformation alpha={alpha} suppresses Morse levels: kept "
                f"{len(out)} of the {math.ceil(A_bar)} constant-mass ones",
                UserWarning,
                stacklevel=2,
            )
        return out
    if family == "coulomb":
        Z_bar, Lcal = params
        if not Z_bar > 0:
            raise ParameterError("Z_bar must be positive")
        if Lcal <= -0.5:
            raise ParameterError("Lcal must be > -1/2")
        if alpha == 0:
            return [
                (k, -((Z_bar / (k + Lcal + 1.0)) ** 2)) for k in range(max_count)
            ]

        def roots():
            for k in range(max_count):
                num = 2.0 * Z_bar - alpha * (k * k + (Lcal + 1.0) * (2.0 * k + 1.0))
                yield k, num / (2.0 * (k + Lcal + 1.0))

        return _positive_root_levels(roots(), max_count)
    raise ParameterError(f"fixed-potential spectra exist for morse/coulomb, not {family}")
