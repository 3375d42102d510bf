"""Whittaker functions W_{kappa,m}(z) and M_{kappa,m}(z) for z > 0."""

import numpy as np

from ._result import DomainError, EvalResult
from .gamma import rgamma

__all__ = ["whittaker_w", "whittaker_m"]

_EPS = np.finfo(float).eps


def _w_integral(kappa, m, z):
    """Integral branch, needs Re(m - kappa + 1/2) >= 1 for a fast left tail.

    W = e^{-z/2} z^kappa / Gamma(b) int_0^inf e^{-t} t^{b-1} (1 + t/z)^c dt
    with b = m - kappa + 1/2, c = m + kappa - 1/2.  After t = e^s the
    integrand decays like e^{b s} on the left and double-exponentially on
    the right, so the trapezoidal rule converges geometrically.
    """
    b = m - kappa + 0.5
    c = m + kappa - 0.5
    s_lo = min(-2.0, -45.0 / b.real)
    s_hi = np.log(60.0 + 4.0 * abs(b) + 2.0 * abs(c))
    h = 2.0 * np.pi / (40.0 + abs(b.imag) + abs(c.imag))
    s = np.arange(s_lo, s_hi + h, h)
    zz = z[:, None]
    et = np.exp(s)[None, :]
    logf = -et + b * s[None, :] + c * np.log1p(et / zz)
    f = np.exp(logf)
    integral = h * f.sum(axis=1)
    mag = h * np.abs(f).sum(axis=1)
    pref = np.exp(-0.5 * z + kappa * np.log(z)) * complex(rgamma(b))
    val = pref * integral
    err = 16 * _EPS * np.abs(pref) * mag
    return val, err


def whittaker_w(kappa, m, z):
    """Whittaker function W_{kappa,m}(z), z > 0.

    Parameters
    ----------
    kappa : float or complex
    m : complex
        Second index (W is even in m).
    z : array_like
        Positive arguments.

    Returns
    -------
    EvalResult
        ``method`` is ``"quadrature"`` when the integral is used directly and
        ``"recurrence"`` when Re(m - kappa + 1/2) < 1 forces a climb in kappa
        from two lower values (W_{k+1} = (z - 2k) W_k - ((k - 1/2)^2 - m^2) W_{k-1}).
        Real for real kappa and real or purely imaginary m.

    Examples
    --------
    >>> abs(whittaker_w(0.0, 0.5, 2.0).value - np.exp(-1.0)) < 1e-13
    True
    """
    kappa, m = complex(kappa), complex(m)
    if m.real < 0:
        m = -m
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(~(z > 0)):
        raise DomainError("W_{kappa,m}(z) requires z > 0")
    b = m - kappa + 0.5
    if b.real >= 1.0:
        val, err = _w_integral(kappa, m, z)
        method = "quadrature"
    else:
        j = int(np.ceil(1.0 - b.real))
        k0 = kappa - j
        wm1, em1 = _w_integral(k0 - 1.0, m, z)
        w0, e0 = _w_integral(k0, m, z)
        k = k0
        for _ in range(j):
            a1 = z - 2.0 * k
            a2 = (k - 0.5) ** 2 - m * m
            wm1, w0 = w0, a1 * w0 - a2 * wm1
            em1, e0 = e0, np.abs(a1) * e0 + abs(a2) * em1
            k += 1.0
        val, err = w0, e0 + 8 * _EPS * np.abs(w0)
        method = "recurrence"
    if kappa.imag == 0 and (m.imag == 0 or m.real == 0):
        err = err + np.abs(val.imag)
        val = val.real
    if val.shape == (1,):
        return EvalResult(val[0], err[0], method)
    return EvalResult(val, err, method)


def whittaker_m(kappa, m, z):
    """Whittaker function M_{kappa,m}(z) = e^{-z/2} z^{m+1/2} 1F1(m-kappa+1/2; 1+2m; z).

    Kummer series; fine for moderate z (the series grows like e^z).
    """
    kappa, m = complex(kappa), complex(m)
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(~(z > 0)):
        raise DomainError("M_{kappa,m}(z) requires z > 0")
    a, c = m - kappa + 0.5, 1.0 + 2.0 * m
    term = np.ones_like(z, dtype=complex)
    total = term.copy()
    peak = np.abs(term)
    n = 0
    while n < 20000:
        term = term * (a + n) / ((c + n) * (n + 1.0)) * z
        n += 1
        total = total + term
        peak = np.maximum(peak, np.abs(term))
        if n > 2 and np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    pref = np.exp(-0.5 * z + (m + 0.5) * np.log(z))
    val = pref * total
    err = 8 * _EPS * np.abs(pref) * peak * np.sqrt(n)
    if val.shape == (1,):
        return EvalResult(val[0], err[0], "series")
    return EvalResult(val, err, "series")
