"""Generalized Laguerre and Jacobi polynomials and log-gamma.

Both polynomial families are evaluated with the standard upward three-term
recurrence in the degree, which is stable for the moderate degrees
(n <= 200) and argument ranges the bound-state formulas require.  First
derivatives come from the parameter-shift identities

    d/dy L_n^(a)(y)   = -L_{n-1}^(a+1)(y)
    d/dt P_n^(a,b)(t) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1)(t)

so they inherit the accuracy of the recurrence itself.
"""

import math
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ParameterError

MAX_DEGREE = 200


class PolyEval(NamedTuple):
    """Polynomial value and derivative with respect to its argument."""

    value: object
    d1: object


def _check_degree(n):
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ParameterError(f"degree must be a non-negative integer, got {n!r}")
    if n > MAX_DEGREE:
        raise ParameterError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")


def _laguerre_value(n, a, y):
    """L_n^(a)(y) by upward recurrence; y may be an ndarray."""
    if n == 0:
        return np.ones_like(y)
    prev = np.ones_like(y)
    cur = 1.0 + a - y
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + 1.0 + a - y) * cur - (k + a) * prev) / (k + 1.0)
    return cur


def laguerre(n, a, y):
    """Evaluate the generalized Laguerre polynomial L_n^(a) at y.

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 200.
    a : float
        Parameter, a > -1.
    y : float or ndarray
        Argument, y >= 0.

    Returns
    -------
    PolyEval
        Value and d/dy, with the same shape as ``y``.
    """
    _check_degree(n)
    if a <= -1.0:
        raise ParameterError(f"Laguerre parameter must exceed -1, got {a}")
    y = np.asarray(y, dtype=float)
    if np.any(y < 0):
        raise DomainError("Laguerre argument must be non-negative")
    value = _laguerre_value(n, a, y)
    d1 = -_laguerre_value(n - 1, a + 1.0, y) if n > 0 else np.zeros_like(y)
    if value.ndim == 0:
        return PolyEval(float(value), float(d1))
    return PolyEval(value, d1)


def _jacobi_value(n, a, b, t):
    """P_n^(a,b)(t) by upward recurrence; t may be an ndarray."""
    if n == 0:
        return np.ones_like(t)
    prev = np.ones_like(t)
    cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * t
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        denom = 2.0 * k * (k + a + b) * (c - 2.0)
        p = (c - 1.0) * (c * (c - 2.0) * t + a * a - b * b)
        q = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        prev, cur = cur, (p * cur - q * prev) / denom
    return cur


def jacobi(n, a, b, t):
    """Evaluate the Jacobi polynomial P_n^(a,b) at t in [-1, 1].

    Parameters
    ----------
    n : int
        Degree, 0 <= n <= 200.
    a, b : float
        Parameters, both > -1.
    t : float or ndarray
        Argument in [-1, 1].

    Returns
    -------
    PolyEval
        Value and d/dt, with the same shape as ``t``.
    """
    _check_degree(n)
    if a <= -1.0 or b <= -1.0:
        raise ParameterError(f"Jacobi parameters must exceed -1, got a={a}, b={b}")
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0):
        raise DomainError("Jacobi argument must lie in [-1, 1]")
    value = _jacobi_value(n, a, b, t)
    if n > 0:
        d1 = 0.5 * (n + a + b + 1.0) * _jacobi_value(n - 1, a + 1.0, b + 1.0, t)
    else:
        d1 = np.zeros_like(t)
    if value.ndim == 0:
        return PolyEval(float(value), float(d1))
    return PolyEval(value, d1)


def log_gamma(x):
    """Natural logarithm of the gamma function for x > 0.

    The result is accurate to a few ulp; in absolute terms that is below
    1e-13 roughly up to x ~ 150, beyond which the size of ln(Gamma(x))
    itself makes the ulp larger than 1e-13.
    """
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def laguerre_derivs(n, a, y, kmax):
    """Stack [L, L', ..., L^(kmax)] of d^k/dy^k L_n^(a)(y).

    Repeated parameter shifts give d^k/dy^k L_n^(a) = (-1)^k L_{n-k}^(a+k).
    """
    y = np.asarray(y, dtype=float)
    out = [_laguerre_value(n, a, y)]
    for k in range(1, kmax + 1):
        if k > n:
            out.append(np.zeros_like(y))
        else:
            out.append((-1.0) ** k * _laguerre_value(n - k, a + k, y))
    return out


def jacobi_derivs(n, a, b, t, kmax):
    """Stack [P, P', ..., P^(kmax)] of d^k/dt^k P_n^(a,b)(t).

    Repeated parameter shifts give
    d^k/dt^k P_n^(a,b) = 2^-k (n+a+b+1)_k P_{n-k}^(a+k,b+k).
    """
    t = np.asarray(t, dtype=float)
    out = [_jacobi_value(n, a, b, t)]
    coeff = 1.0
    for k in range(1, kmax + 1):
        coeff *= 0.5 * (n + a + b + k)
        if k > n:
            out.append(np.zeros_like(t))
        else:
            out.append(coeff * _jacobi_value(n - k, a + k, b + k, t))
    return out
