"""Gamma function for complex arguments (Lanczos approximation).

All functions broadcast over numpy arrays.  The Lanczos sum uses the
classical g=7, n=9 coefficient set; arguments with ``Re z < 1/2`` go
through the reflection formula.
"""

import numpy as np

__all__ = ["PoleError", "gamma_complex", "loggamma_complex", "rgamma", "gamma_modulus_sq"]

_G = 7.0
_COEF = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)


class PoleError(ValueError):
    """Raised when a Gamma function is evaluated at a pole."""


def _is_pole(z):
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def _lanczos_log(z):
    # log Gamma(z) for Re z >= 1/2
    z = z - 1.0
    x = np.full_like(z, _COEF[0])
    for k in range(1, len(_COEF)):
        x = x + _COEF[k] / (z + k)
    t = z + _G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def loggamma_complex(z):
    """Principal-ish log Gamma(z) (imaginary part not branch-normalised).

    Only ``exp`` of the result is meaningful; use it for products and
    ratios of Gamma values that would overflow.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(_is_pole(z)):
        raise PoleError("Gamma has a pole at a non-positive integer")
    left = z.real < 0.5
    zz = np.where(left, 1.0 - z, z)
    lg = _lanczos_log(zz)
    # log(pi / sin(pi z)) - log Gamma(1 - z)
    refl = np.log(np.pi) - np.log(np.sin(np.pi * np.where(left, z, 0.5))) - lg
    out = np.where(left, refl, lg)
    return out[()] if out.ndim == 0 else out


def gamma_complex(z):
    """Gamma(z) for complex ``z``.

    Raises
    ------
    PoleError
        If any element of ``z`` is a non-positive integer.

    Examples
    --------
    >>> abs(gamma_complex(0.5) - np.sqrt(np.pi)) < 1e-14
    True
    """
    z = np.asarray(z, dtype=complex)
    if np.any(_is_pole(z)):
        raise PoleError("Gamma has a pole at a non-positive integer")
    left = z.real < 0.5
    zz = np.where(left, 1.0 - z, z)
    g = np.exp(_lanczos_log(zz))
    with np.errstate(all="ignore"):
        refl = np.pi / (np.sin(np.pi * z) * g)
    out = np.where(left, refl, g)
    return out[()] if out.ndim == 0 else out


def rgamma(z):
    """1/Gamma(z); zero at the poles of Gamma instead of raising."""
    z = np.asarray(z, dtype=complex)
    pole = _is_pole(z)
    safe = np.where(pole, 0.5, z)
    left = safe.real < 0.5
    zz = np.where(left, 1.0 - safe, safe)
    g = np.exp(_lanczos_log(zz))
    out = np.where(left, np.sin(np.pi * safe) * g / np.pi, 1.0 / g)
    out = np.where(pole, 0.0, out)
    return out[()] if out.ndim == 0 else out


def gamma_modulus_sq(x, y):
    """|Gamma(x + iy)|^2 for real x, y, computed through logs."""
    lg = loggamma_complex(np.asarray(x) + 1j * np.asarray(y))
    return np.exp(2.0 * np.real(lg))
