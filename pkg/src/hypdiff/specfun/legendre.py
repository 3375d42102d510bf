"""Associated Legendre functions of the first and second kind for z > 1.

The conical functions P^mu_{i nu - 1/2}(z) and Q^mu_{i nu - 1/2}(z) are the
main customers, but the evaluators accept any complex order and degree so
that the companion families P^{i rho}_{k - 1/2}(coth tau) can be formed too.
Conventions follow the usual "type 3" definitions for z > 1 (the ones used
by mpmath's ``legenp``/``legenq`` with ``type=3``).
"""

import numpy as np
from scipy.special import roots_jacobi

from ._result import DomainError, EvalResult, _methods
from .gamma import PoleError, gamma_complex, rgamma
from .hypergeometric import hyp2f1_regularized

__all__ = ["legendre_p", "legendre_q", "conical_p", "conical_q", "ConicalIndex"]

_EPS = np.finfo(float).eps
_MAX_LOSS = 1e6
_Z_SERIES_MAX = 20.0
_NU_XI_SERIES_MAX = 12.0


class ConicalIndex:
    """Order ``mu`` and degree parameter ``nu`` of P^mu_{i nu - 1/2}."""

    __slots__ = ("mu", "nu")

    def __init__(self, mu, nu):
        self.mu = mu
        self.nu = nu

    @property
    def degree(self):
        return 1j * self.nu - 0.5

    def __repr__(self):
        return f"ConicalIndex(mu={self.mu!r}, nu={self.nu!r})"


def _offset(z, zm1):
    z = np.asarray(z, dtype=float)
    if zm1 is None:
        zm1 = z - 1.0
    else:
        zm1 = np.asarray(zm1, dtype=float)
        z = 1.0 + zm1
    if np.any(zm1 <= 0):
        raise DomainError("Legendre functions here require z > 1")
    return z, zm1


def _p_series(mu, deg, z, zm1):
    # Pfaff-transformed hypergeometric form in w = (z-1)/(z+1); deg may be
    # an array broadcasting against z
    w = zm1 / (zm1 + 2.0)
    f, loss = hyp2f1_regularized(-deg, -deg - mu, 1.0 - mu, w)
    pref = np.exp(0.5 * mu * np.log((zm1 + 2.0) / zm1) + deg * np.log((z + 1.0) / 2.0))
    val = pref * f
    return val, loss * _EPS * 8 * np.abs(val)


def legendre_p(mu, deg, z, zm1=None):
    """P^mu_deg(z) for z > 1 from the hypergeometric series.

    Parameters
    ----------
    mu, deg : complex
        Order and degree.
    z : array_like
        Arguments, all > 1.
    zm1 : array_like, optional
        ``z - 1`` supplied directly; use this near the branch point so the
        offset is not lost to rounding.

    Returns
    -------
    EvalResult
    """
    z, zm1 = _offset(z, zm1)
    val, err = _p_series(complex(mu), complex(deg), z, zm1)
    return EvalResult(val[()], err[()], "series")


def legendre_q(mu, deg, z, zm1=None):
    """Q^mu_deg(z) for z > 1, type-3 normalization.

    Uses the series in exp(-2 xi) with z = cosh xi,

        Q = e^{i mu pi} sqrt(pi) Gamma(deg+mu+1) (1 - x)^mu e^{-(deg+1) xi}
            * 2F1~(mu + 1/2, deg + mu + 1; deg + 3/2; x),   x = e^{-2 xi},

    which converges quickly once z is away from 1.
    """
    mu, deg = complex(mu), complex(deg)
    z, zm1 = _offset(z, zm1)
    try:
        g = gamma_complex(deg + mu + 1.0)
    except PoleError:
        raise DomainError("Q^mu_deg undefined: deg + mu is a negative integer") from None
    root = np.sqrt(zm1 * (zm1 + 2.0))
    xi = np.log(z + root)
    x = np.exp(-2.0 * xi)
    f, loss = hyp2f1_regularized(mu + 0.5, deg + mu + 1.0, deg + 1.5, x, max_terms=50000)
    val = (np.exp(1j * mu * np.pi) * np.sqrt(np.pi) * g
           * np.exp(mu * np.log1p(-x) - (deg + 1.0) * xi) * f)
    err = loss * _EPS * 8 * np.abs(val)
    return EvalResult(val[()], err[()], "series")


def _sinhc(d):
    small = d < 1e-4
    safe = np.where(small, 1.0, d)
    return np.where(small, 1.0 + d * d / 6.0, np.sinh(safe) / safe)


_JACOBI_CACHE = {}


def _jacobi(n, alpha):
    key = (n, round(alpha, 15))
    if key not in _JACOBI_CACHE:
        _JACOBI_CACHE[key] = roots_jacobi(n, alpha, 0.0)
    return _JACOBI_CACHE[key]


def _gl(n):
    key = ("gl", n)
    if key not in _JACOBI_CACHE:
        _JACOBI_CACHE[key] = np.polynomial.legendre.leggauss(n)
    return _JACOBI_CACHE[key]


def _laplace_integral(alpha, nu, xi, scale):
    """int_0^xi (cosh xi - cosh t)^alpha cos(nu t) dt, vectorized.

    The last stretch [xi - d, xi] carries the (xi - t)^alpha endpoint factor
    as a Gauss-Jacobi weight (kept short so a fixed low-order rule
    suffices); the rest is smooth and goes to Gauss-Legendre with a node
    count that follows the number of oscillations.
    """
    d = np.minimum(xi, 8.0 / np.maximum(np.abs(nu), 1.0))
    u, wts = _jacobi(int(24 * scale), alpha)
    t = xi[:, None] - 0.5 * d[:, None] * (1.0 - u[None, :])
    g = np.sinh(0.5 * (xi[:, None] + t)) * _sinhc(0.5 * (xi[:, None] - t))
    f = wts * g**alpha * np.cos(nu[:, None] * t)
    total = (0.5 * d) ** (alpha + 1.0) * np.sum(f, axis=1)
    mag = (0.5 * d) ** (alpha + 1.0) * np.sum(np.abs(f), axis=1)

    b = xi - d
    rest = b > 0
    if np.any(rest):
        need = scale * (20.0 + 0.6 * np.abs(nu) * b + 4.0 * b / d)
        need = (8 * np.ceil(need / 8.0)).astype(int)
        for n in np.unique(need[rest]):
            sel = rest & (need == n)
            x, w = _gl(int(n))
            bb = b[sel, None]
            tt = 0.5 * bb * (x[None, :] + 1.0)
            f = (np.cosh(xi[sel, None]) - np.cosh(tt)) ** alpha * np.cos(nu[sel, None] * tt)
            total[sel] += 0.5 * b[sel] * np.sum(w * f, axis=1)
            mag[sel] += 0.5 * b[sel] * np.sum(w * np.abs(f), axis=1)
    return total, mag


def _laplace_p(lam, nu, xi):
    """P^{-lam}_{i nu - 1/2}(cosh xi) for lam > -1/2 from the Laplace-type integral.

    P = sqrt(2/pi) sinh(xi)^{-lam} / Gamma(lam + 1/2)
        * int_0^xi (cosh xi - cosh t)^{lam - 1/2} cos(nu t) dt.
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    nu = np.broadcast_to(np.asarray(nu, dtype=float), xi.shape)
    alpha = lam - 0.5
    pref = (np.sqrt(2.0 / np.pi) * float(np.real(rgamma(lam + 0.5)))
            * np.exp(-lam * np.log(np.sinh(xi))))
    lo, _ = _laplace_integral(alpha, nu, xi, 1.0)
    hi, mag = _laplace_integral(alpha, nu, xi, 1.5)
    out = pref * hi
    err = np.abs(pref * (hi - lo)) + 16 * _EPS * np.abs(pref) * mag
    return out, err


def _conical_fallback(mu, nu, z):
    xi = np.arccosh(z)
    if mu < 0.5:
        return _laplace_p(-mu, nu, xi)
    # climb from base orders in [-3/2, 1/2)
    m0 = mu - np.floor(mu + 0.5)
    pm1, em1 = _laplace_p(-(m0 - 1.0), nu, xi)
    p0, e0 = _laplace_p(-m0, nu, xi)
    coth = 1.0 / np.tanh(xi)
    nu = np.asarray(nu, dtype=float)
    m = m0
    while m < mu - 0.25:
        pm1, p0 = p0, -2.0 * m * coth * p0 - (nu * nu + (m - 0.5) ** 2) * pm1
        em1, e0 = e0, 2.0 * abs(m) * coth * e0 + (nu * nu + (m - 0.5) ** 2) * em1
        m += 1.0
    return p0, e0 + 16 * _EPS * np.abs(p0)


def conical_p(idx, z, zm1=None):
    """Conical function P^mu_{i nu - 1/2}(z), z > 1.

    The hypergeometric series is used where it is well conditioned; past
    z = 20, for |nu| arccosh(z) > 12 (where cancellation sets in), or when
    it loses more than six digits anyway, real orders switch to a
    Gauss-Jacobi evaluation of the Laplace-type integral (plus upward
    recurrence in the order for mu >= 1/2).

    Parameters
    ----------
    idx : ConicalIndex or tuple (mu, nu)
        ``nu`` may be an array; it is broadcast against ``z``.
    z : array_like
        Arguments > 1.
    zm1 : array_like, optional
        ``z - 1`` given directly (preserves precision near z = 1).

    Returns
    -------
    EvalResult
        Real-valued when ``mu`` and ``nu`` are real.
    """
    mu, nu = (idx.mu, idx.nu) if isinstance(idx, ConicalIndex) else idx
    z, zm1 = _offset(z, zm1)
    nu = np.asarray(nu)
    z, zm1, nu = np.broadcast_arrays(np.atleast_1d(z), np.atleast_1d(zm1), nu)
    deg = 1j * nu.astype(complex) - 0.5
    real_case = np.isreal(mu) and np.all(np.isreal(nu))

    method = np.full(z.shape, "series", dtype=object)
    if not real_case:
        val, err = _p_series(complex(mu), deg, z, zm1)
    else:
        nu = nu.real.astype(float)
        xi = np.log(z + np.sqrt(zm1 * (zm1 + 2.0)))
        # the series loses roughly exp(|nu| xi) to cancellation
        use = (z <= _Z_SERIES_MAX) & (np.abs(nu) * xi < _NU_XI_SERIES_MAX)
        val = np.zeros(z.shape)
        err = np.full(z.shape, np.inf)
        if np.any(use):
            v, e = _p_series(complex(mu), deg[use], z[use], zm1[use])
            val[use], err[use] = v.real, e + np.abs(v.imag)
        bad = ~use | (err > _MAX_LOSS * _EPS * np.abs(val)) | ~np.isfinite(val)
        if np.any(bad):
            mu_r = float(np.real(mu))
            method[bad] = "quadrature+recurrence" if mu_r >= 0.5 else "quadrature"
            fv, fe = _conical_fallback(mu_r, nu[bad], z[bad])
            val[bad], err[bad] = fv, fe
    if val.shape == (1,):
        return EvalResult(val[0], err[0], method[0])
    return EvalResult(val, err, _methods(method))


def conical_q(idx, z, zm1=None):
    """Conical function of the second kind Q^mu_{i nu - 1/2}(z), z > 1.

    Complex in general.  ``nu`` may be complex, e.g. ``nu = -0.5j`` gives
    degree 0 and Q_0(z) = atanh(1/z).
    """
    mu, nu = (idx.mu, idx.nu) if isinstance(idx, ConicalIndex) else idx
    return legendre_q(mu, 1j * complex(nu) - 0.5, z, zm1)
