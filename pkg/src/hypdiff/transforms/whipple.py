"""Constancy checks for the Whipple relations between conical and coth-argument functions.

Whipple's formula swaps degree and order while mapping cosh(tau) to
coth(tau); up to a tau-independent constant,

    Q^k_{i rho - 1/2}(cosh tau) sqrt(sinh tau)  ~  P^{-i rho}_{k - 1/2}(coth tau)
    P^k_{i rho - 1/2}(cosh tau) sqrt(sinh tau)  ~  Q^{i rho}_{k - 1/2}(coth tau)

The checker forms the ratio on a tau grid and measures how far it strays
from its median.
"""

from typing import NamedTuple

import numpy as np

from ..specfun import DomainError, conical_p, gamma_complex, legendre_p, legendre_q

__all__ = ["WhippleResult", "whipple_check", "whipple_constant", "RELATIONS"]

RELATIONS = ("first", "first_plus_order", "second", "second_reflected")


class WhippleResult(NamedTuple):
    fitted_constant: complex
    max_deviation: float
    ratios: np.ndarray


def _ratio(k, rho, tau, relation):
    sh = np.sinh(tau)
    ch = np.cosh(tau)
    cth = 1.0 / np.tanh(tau)
    # coth(tau) - 1 = 2 / (e^{2 tau} - 1), cosh(tau) - 1 = 2 sinh^2(tau/2)
    cth_m1 = 2.0 / np.expm1(2.0 * tau)
    ch_m1 = 2.0 * np.sinh(0.5 * tau) ** 2
    if relation == "first":
        num = legendre_q(k, 1j * rho - 0.5, ch, zm1=ch_m1).value * np.sqrt(sh)
        den = legendre_p(-1j * rho, k - 0.5, cth, zm1=cth_m1).value
    elif relation == "first_plus_order":
        num = legendre_q(k, 1j * rho - 0.5, ch, zm1=ch_m1).value * np.sqrt(sh)
        den = legendre_p(1j * rho, k - 0.5, cth, zm1=cth_m1).value
    elif relation == "second":
        num = conical_p((k, rho), ch, zm1=ch_m1).value * np.sqrt(sh)
        den = legendre_q(1j * rho, k - 0.5, cth, zm1=cth_m1).value
    elif relation == "second_reflected":
        num = conical_p((k, rho), ch, zm1=ch_m1).value * np.sqrt(sh)
        den = legendre_q(1j * rho, -k - 0.5, cth, zm1=cth_m1).value
    else:
        raise ValueError(f"relation must be one of {RELATIONS}")
    return np.asarray(num / den, dtype=complex)


def whipple_check(k, rho, tau_grid, relation="first"):
    """Fit the Whipple constant and report the ratio's spread.

    Parameters
    ----------
    k, rho : float
    tau_grid : array_like
        At least 8 points in (0.1, 3).
    relation : {"first", "first_plus_order", "second", "second_reflected"}
        ``"first"``: Q^k_{i rho-1/2}(cosh) sqrt(sinh) / P^{-i rho}_{k-1/2}(coth).
        ``"first_plus_order"``: the same with order +i rho in the denominator;
        this variant is *not* constant and is kept for comparison.
        ``"second"``: P^k_{i rho-1/2}(cosh) sqrt(sinh) / Q^{i rho}_{k-1/2}(coth);
        constant only for integer k.
        ``"second_reflected"``: the same with degree -k-1/2, constant for
        every real k.

    Returns
    -------
    WhippleResult
        ``fitted_constant`` is the componentwise median of the ratios,
        ``max_deviation`` the largest |r / median - 1|.
    """
    tau = np.asarray(tau_grid, dtype=float)
    if tau.size < 8 or np.any(tau <= 0.1) or np.any(tau >= 3.0):
        raise DomainError("tau grid needs >= 8 points inside (0.1, 3)")
    r = _ratio(k, rho, tau, relation)
    const = np.median(r.real) + 1j * np.median(r.imag)
    if not np.isfinite(const) or const == 0:
        raise DomainError("degenerate Whipple ratio")
    dev = float(np.max(np.abs(r / const - 1.0)))
    return WhippleResult(complex(const), dev, r)


def whipple_constant(k, rho):
    """Closed form of the first-relation constant, sqrt(pi/2) e^{i pi k} Gamma(k + 1/2 + i rho)."""
    return complex(np.sqrt(0.5 * np.pi) * np.exp(1j * np.pi * k) * gamma_complex(k + 0.5 + 1j * rho))
