"""Laplace transforms that carry Legendre functions to Whittaker and Macdonald functions.

Each bridge evaluates the left side by quadrature over (1, inf) and the
right side from the closed form, and reports the relative discrepancy.
The singular factor at x = 1 is handled by exp-sinh quadrature with the
exact offset x - 1 passed through to the Legendre evaluator.
"""

from typing import NamedTuple

import numpy as np
from scipy.special import kv

from ..specfun import DomainError, bessel_k_imag, conical_p, legendre_p, whittaker_w
from .quadrature import QuadratureSpec, quad

__all__ = ["BridgeResult", "bridge_whittaker", "bridge_macdonald", "bridge_conical_macdonald"]

_CUT = 60.0  # integrand treated as zero once a (x - 1) exceeds this


class BridgeResult(NamedTuple):
    lhs: float
    rhs: float
    rel_err: float


def _spec(spec):
    spec = spec or QuadratureSpec(abs_tol=1e-14, rel_tol=1e-10)
    if spec.endpoint_singularity == "none":
        spec = QuadratureSpec(spec.abs_tol, spec.rel_tol, spec.max_subdivisions,
                              spec.truncation, "inverse_sqrt")
    return spec


def _rel(lhs, rhs):
    return float(abs(lhs - rhs) / max(abs(rhs), 1e-300))


def _laplace(kernel, a, spec):
    def f(x, dx, _):
        out = np.zeros(x.shape, dtype=complex)
        live = a * dx < _CUT
        if np.any(live):
            out[live] = np.exp(-a * x[live]) * kernel(x[live], dx[live])
        return out

    res = quad(f, 1.0, np.inf, spec, offsets=True)
    return complex(res.value)


def bridge_whittaker(k, nu, a, spec=None):
    """Legendre-to-Whittaker Laplace transform.

    lhs = int_1^inf e^{-a x} ((x+1)/(x-1))^{k/2} P^k_{i nu - 1/2}(x) dx,
    rhs = W_{k, i nu}(2a) / a.

    The integrand behaves like (x - 1)^{-k} at the lower limit, so k < 1 is
    required.  (At k = 1 the integral converges again, but the identity
    fails: as k -> 1 the endpoint piece tends to a finite point mass that
    the integral of the limit no longer sees.)  ``nu`` may be complex:
    ``nu = -0.5j`` gives degree 0.

    Returns
    -------
    BridgeResult
    """
    if a <= 0:
        raise DomainError("bridge needs a > 0")
    if k >= 1:
        raise DomainError("bridge needs k < 1 (lower-limit factor (x-1)^(-k))")

    def kernel(x, dx):
        p = conical_p((k, nu), x, zm1=dx).value
        return np.exp(0.5 * k * np.log((dx + 2.0) / dx)) * p

    lhs = _laplace(kernel, a, _spec(spec))
    w = whittaker_w(k, 1j * nu, 2.0 * a).value
    rhs = complex(w) / a
    if np.isreal(nu):
        lhs, rhs = lhs.real, rhs.real
    return BridgeResult(lhs, rhs, _rel(lhs, rhs))


def bridge_macdonald(mu, nu_degree, a, spec=None):
    """Legendre-to-Macdonald Laplace transform (real degree).

    lhs = int_1^inf e^{-a x} (x^2 - 1)^{-mu/2} P^mu_nu(x) dx,
    rhs = sqrt(2/pi) a^{mu - 1/2} K_{nu + 1/2}(a),   mu < 1.
    """
    if a <= 0:
        raise DomainError("bridge needs a > 0")
    if mu >= 1:
        raise DomainError("lower-limit singularity needs mu < 1")

    def kernel(x, dx):
        p = legendre_p(mu, nu_degree, x, zm1=dx).value
        return np.exp(-0.5 * mu * np.log(dx * (dx + 2.0))) * p

    lhs = _laplace(kernel, a, _spec(spec)).real
    rhs = np.sqrt(2.0 / np.pi) * a ** (mu - 0.5) * kv(nu_degree + 0.5, a)
    return BridgeResult(lhs, float(rhs), _rel(lhs, rhs))


def bridge_conical_macdonald(lam, nu, a, spec=None):
    """Conical function to Macdonald function of imaginary order.

    lhs = a^lam sqrt(pi/2) int_1^inf (x^2 - 1)^{lam/2 - 1/4}
          P^{1/2 - lam}_{i nu - 1/2}(x) e^{-a x} dx,
    rhs = K_{i nu}(a),   lam > -1/2.
    """
    if a <= 0:
        raise DomainError("bridge needs a > 0")
    if lam <= -0.5:
        raise DomainError("lower-limit singularity needs lam > -1/2")

    def kernel(x, dx):
        p = conical_p((0.5 - lam, nu), x, zm1=dx).value
        return np.exp((0.5 * lam - 0.25) * np.log(dx * (dx + 2.0))) * p

    lhs = float(a**lam * np.sqrt(0.5 * np.pi) * _laplace(kernel, a, _spec(spec)).real)
    rhs = float(bessel_k_imag(nu, a).value)
    return BridgeResult(lhs, rhs, _rel(lhs, rhs))
