"""Modified Bessel functions of order zero for complex arguments.

scipy's ``i0``/``k0`` are real-only, while the mass-regularized Feynman
kernel needs K0 and I0 along the rays arg z in {0, pi/2} (spacelike and
timelike separations).  We therefore evaluate both functions directly:

* power series for |z| <= 10 (DLMF 10.25.2, 10.31.2),
* large-argument asymptotic expansions beyond (DLMF 10.40.2, 10.40.5).

The series uses the principal branch of the logarithm; worst-case relative
error inside |z| <= 10 is set by cancellation of the oscillatory series on
the imaginary axis and stays a few 1e-13.  Physical arguments here are
m * (point separation), which is small for every mass scan in this package.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_EULER_GAMMA = 0.5772156649015328606065120900824024310422

_SERIES_RADIUS = 10.0
_SERIES_TERMS = 48
_ASYMPTOTIC_TERMS = 18

# |a_k(0)| of DLMF 10.17: a_k = prod_{j<=k} (2j-1)^2 / (k! 8^k), sign (-1)^k
_ASY_COEFF = np.ones(_ASYMPTOTIC_TERMS)
for _k in range(1, _ASYMPTOTIC_TERMS):
    _ASY_COEFF[_k] = _ASY_COEFF[_k - 1] * (2 * _k - 1) ** 2 / (8.0 * _k)


def _series_i0(z: np.ndarray) -> np.ndarray:
    q = 0.25 * z * z
    term = np.ones_like(z)
    total = np.ones_like(z)
    for k in range(1, _SERIES_TERMS):
        term = term * q / (k * k)
        total = total + term
    return total


def _series_k0(z: np.ndarray) -> np.ndarray:
    q = 0.25 * z * z
    term = np.ones_like(z)
    correction = np.zeros_like(z)
    harmonic = 0.0
    for k in range(1, _SERIES_TERMS):
        term = term * q / (k * k)
        harmonic += 1.0 / k
        correction = correction + term * harmonic
    return -(np.log(0.5 * z) + _EULER_GAMMA) * _series_i0(z) + correction


def _asymptotic_sums(z: np.ndarray):
    """Sum_k (-1)^k c_k / z^k and Sum_k c_k / z^k, c_k = |a_k(0)|."""
    inv = 1.0 / z
    p = np.ones_like(z)
    alt = np.ones_like(z)
    plain = np.ones_like(z)
    for k in range(1, _ASYMPTOTIC_TERMS):
        p = p * inv
        c = _ASY_COEFF[k] * p
        alt = alt + (-1) ** k * c
        plain = plain + c
    return alt, plain


def _asymptotic_k0(z: np.ndarray) -> np.ndarray:
    alt, _ = _asymptotic_sums(z)
    return np.sqrt(np.pi / (2.0 * z)) * np.exp(-z) * alt


def _asymptotic_i0(z: np.ndarray) -> np.ndarray:
    # DLMF 10.40.5 with nu = 0; the recessive e^{-z} term matters near the
    # imaginary axis.  Upper sign branch, valid for -pi/2 <= arg z <= pi.
    alt, plain = _asymptotic_sums(z)
    front = 1.0 / np.sqrt(2.0 * np.pi * z)
    second = np.where(np.imag(z) >= 0.0, 1j, -1j)
    return front * (np.exp(z) * plain + second * np.exp(-z) * alt)


def _evaluate(z, series_fn, asymptotic_fn, name: str, forbid_zero: bool):
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    flat = arr.reshape(-1).copy()
    if forbid_zero and np.any(flat == 0):
        raise DomainError(f"{name} is singular at z = 0")
    out = np.empty_like(flat)
    small = np.abs(flat) <= _SERIES_RADIUS
    if np.any(small):
        out[small] = series_fn(flat[small])
    if np.any(~small):
        out[~small] = asymptotic_fn(flat[~small])
    return complex(out[0]) if scalar else out.reshape(arr.shape)


def bessel_i0(z):
    """Modified Bessel function I0 for complex argument (scalar or array)."""
    return _evaluate(z, _series_i0, _asymptotic_i0, "I0", forbid_zero=False)


def bessel_k0(z):
    """Modified Bessel function K0, principal branch, complex argument."""
    return _evaluate(z, _series_k0, _asymptotic_k0, "K0", forbid_zero=True)


def k0_small_argument_residual(z):
    """K0(z) + (ln(z/2) + gamma) I0(z), the exact correction series.

    Equals sum_{k>=1} (z^2/4)^k H_k / (k!)^2 with H_k the harmonic numbers;
    of order z^2/4 as z -> 0, which is what makes the mass-regularized
    kernel's m -> 0 limit log-free after the ln(m) counterterm.
    """
    return bessel_k0(z) + (np.log(np.asarray(z, dtype=complex) / 2.0) + _EULER_GAMMA) * bessel_i0(z)
