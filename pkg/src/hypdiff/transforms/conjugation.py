"""Conjugating the Legendre operator by the bridge premultipliers.

H[f] = (z^2 - 1) f'' + 2 z f' + ((nu^2 + 1)/4 - k^2/(z^2 - 1)) f.

Premultiplying by ((z+1)/(z-1))^{k/2} (the Whittaker bridge) or by
(z^2 - 1)^{k/2} (the Macdonald bridge) and dividing back out removes the
k^2/(z^2 - 1) term:

    whittaker:  c f + 2 (z - k) f' + (z^2 - 1) f''
    macdonald:  (c + k(k+1)) f + 2 (k + 1) z f' + (z^2 - 1) f''

with c = (nu^2 + 1)/4.  ``legendre_operator_conjugation`` evaluates the
literal conjugation by finite differences and compares it with these
coefficients.
"""

from typing import NamedTuple

import numpy as np

__all__ = ["ConjugationResult", "ConjugationMismatch", "legendre_operator",
           "conjugated_coefficients", "legendre_operator_conjugation"]

MODES = ("whittaker_premultiplier", "macdonald_premultiplier")


class ConjugationMismatch(ArithmeticError):
    """The two evaluation paths disagree beyond tolerance."""


class ConjugationResult(NamedTuple):
    value: float
    displayed: float
    rel_err: float
    coeffs: tuple  # (a2, a1, a0) of the conjugated operator at z


def _derivs(f, z, h):
    pts = z + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    v = np.array([f(p) for p in pts], dtype=float)
    d1 = (v[0] - 8 * v[1] + 8 * v[3] - v[4]) / (12 * h)
    d2 = (-v[0] + 16 * v[1] - 30 * v[2] + 16 * v[3] - v[4]) / (12 * h * h)
    return v[2], d1, d2


def legendre_operator(f, z, k, nu=0.0, h=1e-3):
    """Apply H to ``f`` at ``z`` with 5-point finite differences."""
    f0, d1, d2 = _derivs(f, z, h)
    c = 0.25 * (nu * nu + 1.0)
    return (z * z - 1.0) * d2 + 2.0 * z * d1 + (c - k * k / (z * z - 1.0)) * f0


def _premultiplier(mode, k):
    if mode == "whittaker_premultiplier":
        return lambda z: ((z + 1.0) / (z - 1.0)) ** (0.5 * k)
    if mode == "macdonald_premultiplier":
        return lambda z: (z * z - 1.0) ** (0.5 * k)
    raise ValueError(f"mode must be one of {MODES}")


def conjugated_coefficients(k, mode, z, nu=0.0):
    """(a2, a1, a0) of the conjugated operator at ``z``."""
    c = 0.25 * (nu * nu + 1.0)
    if mode == "whittaker_premultiplier":
        return (z * z - 1.0, 2.0 * (z - k), c)
    if mode == "macdonald_premultiplier":
        return (z * z - 1.0, 2.0 * (k + 1.0) * z, c + k * (k + 1.0))
    raise ValueError(f"mode must be one of {MODES}")


def legendre_operator_conjugation(k, mode, f, z, nu=0.0, h=1e-3, tol=1e-6):
    """Compare m^{-1} H[m f] with the conjugated coefficients at ``z > 1``.

    Parameters
    ----------
    k : float
        Order.
    mode : {"whittaker_premultiplier", "macdonald_premultiplier"}
    f : callable
        Smooth scalar function near ``z``.
    z : float
    nu : float
        Degree parameter entering (nu^2 + 1)/4.
    tol : float
        Relative agreement required between the two paths.

    Returns
    -------
    ConjugationResult

    Raises
    ------
    ConjugationMismatch
        If the literal and coefficient paths differ by more than ``tol``.
    """
    if z <= 1:
        raise ValueError("z must exceed 1")
    m = _premultiplier(mode, k)
    literal = legendre_operator(lambda s: m(s) * f(s), z, k, nu, h) / m(z)
    a2, a1, a0 = conjugated_coefficients(k, mode, z, nu)
    f0, d1, d2 = _derivs(f, z, h)
    displayed = a2 * d2 + a1 * d1 + a0 * f0
    scale = max(abs(a2 * d2), abs(a1 * d1), abs(a0 * f0), 1e-300)
    rel = abs(literal - displayed) / scale
    if rel > tol:
        raise ConjugationMismatch(f"conjugation paths differ: rel {rel:.3e}")
    return ConjugationResult(float(literal), float(displayed), float(rel), (a2, a1, a0))
