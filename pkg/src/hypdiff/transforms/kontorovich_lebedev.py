"""Kontorovich-Lebedev transform with kernel K_{i nu}(a).

Convention (the normalization is fixed here, with the nu sinh(pi nu) weight):

    G(nu) = int_0^inf g(a) K_{i nu}(a) da / a,
    g(a)  = (2/pi^2) int_0^inf nu sinh(pi nu) K_{i nu}(a) G(nu) d nu.

The forward integral is done in s = ln a on Gauss-Legendre panels, which
turns the oscillation cos(nu ln a) near a = 0 into a plain cosine in s.
"""

import numpy as np

from ..specfun import DomainError, bessel_k_imag
from .quadrature import QuadratureError, QuadratureSpec, gauss_legendre
from .result import TransformResult

__all__ = ["kontorovich_lebedev", "kontorovich_lebedev_roundtrip", "kl_exponential_reference", "kl_weight"]

_S_PANEL = 0.5
_NU_PANEL = 2.0
_NU_MAX = 30.0
_S_RULES = (14, 20)
_NU_RULES = (16, 24)


def _panels(lo, hi, width, n):
    m = max(1, int(np.ceil((hi - lo) / width)))
    edges = np.linspace(lo, hi, m + 1)
    xs, ws = zip(*(gauss_legendre(n, a, b) for a, b in zip(edges[:-1], edges[1:])))
    return np.concatenate(xs), np.concatenate(ws)


def _range(g, spec, support):
    """Range in s = ln a outside which |g| is below abs_tol e^-5."""
    if support is not None:
        lo, hi = float(support[0]), float(support[1])
        if not 0.0 < lo < hi < np.inf:
            raise DomainError("support must satisfy 0 < lo < hi < inf")
        return np.log(lo), np.log(hi), 0.0
    thr = spec.abs_tol * np.exp(-5.0)
    ends = []
    for sign in (-1.0, 1.0):
        s = 1.0
        for _ in range(8):
            a = np.exp(sign * np.array([s, 1.5 * s]))
            if np.all(np.abs(g(a)) < thr):
                break
            s *= 2.0
        else:
            raise QuadratureError("g does not decay; cannot truncate", np.nan, np.inf)
        ends.append(sign * s)
    if spec.truncation is not None:
        ends[1] = np.log(spec.truncation)
    # |K_{i nu}| <= K_0 so the tail is bounded by |g| at the cut times K_0 there
    a_end = np.exp(np.array(ends))
    tail = float(np.sum(np.abs(g(a_end)) * bessel_k_imag(0.0, a_end).value))
    return ends[0], ends[1], tail


def _kernel(nu, a):
    r = bessel_k_imag(nu[:, None], a[None, :])
    return np.asarray(r.value, dtype=float), np.asarray(r.est_error, dtype=float)


def _forward(g, nu, spec, support):
    lo, hi, tail = _range(g, spec, support)
    est = []
    for n in _S_RULES:
        s, w = _panels(lo, hi, _S_PANEL, n)
        a = np.exp(s)
        ga = np.asarray(g(a), dtype=float)
        k, kerr = _kernel(nu, a)
        est.append((k @ (w * ga), kerr @ np.abs(w * ga)))
    (v0, _), (v1, e1) = est
    return v1, np.abs(v1 - v0) + e1 + tail, tail


def kl_weight(nu):
    """Inverse weight (2/pi^2) nu sinh(pi nu)."""
    nu = np.asarray(nu, dtype=float)
    return 2.0 / np.pi**2 * nu * np.sinh(np.pi * nu)


def _inverse(G_vals, a, nun, nuw):
    k, kerr = _kernel(nun, a)
    wg = nuw * kl_weight(nun) * G_vals
    return wg @ k, np.abs(wg) @ kerr


def kontorovich_lebedev(g, grid, direction="forward", spec=None, support=None, nu_max=None):
    """Forward or inverse Kontorovich-Lebedev transform.

    Parameters
    ----------
    g : callable
        ``direction="forward"``: g(a) on (0, inf), vectorized.
        ``direction="inverse"``: G(nu), vectorized over nu >= 0.
    grid : array_like
        nu >= 0 values (forward) or a > 0 values (inverse).
    spec : QuadratureSpec, optional
        ``truncation`` caps the a range (forward) or sets ``nu_max``
        (inverse) when the keyword is not given.
    support : (lo, hi), optional
        Forward only: interval in a outside which g vanishes.
    nu_max : float, optional
        Inverse only: cutoff of the nu integral (default 30).

    Returns
    -------
    TransformResult

    Examples
    --------
    >>> kontorovich_lebedev(lambda a: 0 * a, [1.0]).values.tolist()
    [0.0]
    """
    spec = spec or QuadratureSpec()
    grid = np.atleast_1d(np.asarray(grid, dtype=float))
    if direction == "forward":
        if np.any(grid < 0):
            raise DomainError("nu grid must be nonnegative")
        val, err, tail = _forward(g, grid, spec, support)
        return TransformResult(grid, val, err, tail)
    if direction != "inverse":
        raise ValueError("direction must be 'forward' or 'inverse'")
    if np.any(grid <= 0):
        raise DomainError("a grid must be positive")
    nu_max = nu_max if nu_max is not None else (spec.truncation or _NU_MAX)
    vals = []
    for n in _NU_RULES:
        nun, nuw = _panels(0.0, nu_max, _NU_PANEL, n)
        vals.append(_inverse(np.asarray(g(nun), dtype=float), grid, nun, nuw))
    (v0, _), (v1, e1) = vals
    end = np.array([nu_max])
    k_end = np.max(np.abs(_kernel(end, grid)[0]))
    tail = float(np.abs(kl_weight(end) * np.asarray(g(end), dtype=float))[0] * k_end * nu_max)
    return TransformResult(grid, v1, np.abs(v1 - v0) + e1 + tail, tail)


def kontorovich_lebedev_roundtrip(g, a_range=(1e-3, 6.0), nu_max=_NU_MAX, n_check=120, spec=None):
    """Forward then inverse transform; relative L^2(da) error over ``a_range``.

    Returns
    -------
    rel_l2 : float
    a, g_rec : ndarray
    """
    spec = spec or QuadratureSpec()
    nun, nuw = _panels(0.0, nu_max, _NU_PANEL, _NU_RULES[1])
    G, _, _ = _forward(g, nun, spec, None)
    a, wa = _panels(a_range[0], a_range[1], (a_range[1] - a_range[0]) * 12 / n_check, 12)
    rec, _ = _inverse(G, a, nun, nuw)
    ga = np.asarray(g(a), dtype=float)
    rel = np.sqrt(np.sum(wa * (rec - ga) ** 2) / np.sum(wa * ga**2))
    return float(rel), a, rec


def kl_exponential_reference(nu, beta):
    """Closed form of int_0^inf e^{-a cosh(beta)} K_{i nu}(a) da.

    Equals pi sin(nu beta) / (sinh(beta) sinh(pi nu)), i.e. the forward
    transform of g(a) = a e^{-a cosh beta}; it follows from swapping the
    order in K_{i nu}(a) = int_0^inf e^{-a cosh t} cos(nu t) dt.
    """
    nu = np.asarray(nu, dtype=float)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.pi * np.sin(nu * beta) / (np.sinh(beta) * np.sinh(np.pi * nu))
    return np.where(nu == 0, beta / np.sinh(beta), out)
