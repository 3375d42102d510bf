"""Modified Bessel functions of purely imaginary order.

``bessel_k_imag`` evaluates the Macdonald function K_{i nu}(x) from its
integral representation.  Taken literally, K_{i nu}(x) = int_0^inf
exp(-x cosh t) cos(nu t) dt cancels catastrophically once nu exceeds x
(the answer is ~exp(-pi nu / 2) while the integrand is O(1)), so the
default path deforms the contour onto steepest-descent arcs of
phi(t) = -x cosh t + i nu t:

* nu <= x: the arc Im phi = 0 through t = 0, giving a positive integrand
  exp(-x cosh u cos v - nu v) with sin v = nu u / (x sinh u);
* nu > x: the horizontal segment Im t = pi/2 between the two saddles
  t = +-a0 + i pi/2 (cosh a0 = nu/x), plus the outgoing arcs
  Im phi = c0 from the saddles to infinity.

Both pieces are integrated with Gauss-Legendre rules; the error estimate
compares two rule sizes.  For x <= 1 and nu >= 1/2 the ascending series
K_{i nu} = -pi Im I_{i nu}(x) / sinh(pi nu) is cheaper and just as accurate.
"""

import numpy as np

from ._result import DomainError, EvalResult
from .gamma import rgamma

__all__ = ["bessel_k_imag", "bessel_i_imag"]

_EPS = np.finfo(float).eps
_DROP = 45.0  # integrand truncated once it falls below exp(-_DROP) of its peak


def _gl(n):
    return np.polynomial.legendre.leggauss(n)


_GL_CACHE = {}


def _gl01(n):
    # Gauss-Legendre nodes/weights on [0, 1]
    if n not in _GL_CACHE:
        x, w = _gl(n)
        _GL_CACHE[n] = (0.5 * (x + 1.0), 0.5 * w)
    return _GL_CACHE[n]


def _sinh_minus_id(u):
    # sinh(u) - u without cancellation
    small = np.abs(u) < 0.5
    u2 = u * u
    ser = u * u2 / 6.0 * (1.0 + u2 / 20.0 * (1.0 + u2 / 42.0 * (1.0 + u2 / 72.0 * (1.0 + u2 / 110.0))))
    return np.where(small, ser, np.sinh(u) - u)


def _k_below(nu, x, n):
    """nu <= x: integral along Im phi = 0 from the origin."""
    peak = x + nu * np.pi / 2.0
    umax = np.arccosh((peak + _DROP) / x) + 0.5
    t, w = _gl01(n)
    u = umax[:, None] * t[None, :]
    xs = x[:, None]
    nus = nu[:, None]
    sh = np.sinh(u)
    s = nus * u / (xs * sh)
    one_minus_s = (xs * _sinh_minus_id(u) + (xs - nus) * u) / (xs * sh)
    c = np.sqrt(np.clip(one_minus_s * (1.0 + s), 0.0, None))
    v = np.arctan2(s, c)
    f = np.exp(-xs * np.cosh(u) * c - nus * v)
    return umax * np.sum(w * f, axis=1), umax * np.sum(w * np.abs(f), axis=1)


def _arc_tail(nu, x, a0, c0, n):
    """nu > x: outgoing steepest-descent arc from the saddle, both sides."""
    # find a truncation length D for delta = u - a0
    deltas = np.geomspace(1e-3, 40.0, 80)
    d = deltas[None, :]
    re_phi = _arc_re_phi(nu[:, None], x[:, None], a0[:, None], c0[:, None], d)
    below = re_phi + nu[:, None] * np.pi / 2.0 < -_DROP
    idx = np.where(below.any(axis=1), below.argmax(axis=1), len(deltas) - 1)
    dmax = deltas[idx]

    t, w = _gl01(n)
    dl = dmax[:, None] * t[None, :]
    xs, nus, a0s, c0s = x[:, None], nu[:, None], a0[:, None], c0[:, None]
    u = a0s + dl
    sh = np.sinh(u)
    h = xs * (np.cosh(a0s) * _sinh_minus_id(dl) + 2.0 * np.sinh(a0s) * np.sinh(0.5 * dl) ** 2)
    one_minus_s = h / (xs * sh)
    s = 1.0 - one_minus_s
    c = np.sqrt(np.clip(one_minus_s * (1.0 + s), 0.0, None))
    v = np.arctan2(s, c)
    re_phi = -xs * np.cosh(u) * c - nus * v
    num = -2.0 * xs * sh * np.sinh(0.5 * (u + a0s)) * np.sinh(0.5 * dl) + h * np.cosh(u)
    vp = num / (xs * sh * sh * c)
    f = np.exp(re_phi) * (np.cos(c0s) - vp * np.sin(c0s))
    return dmax * np.sum(w * f, axis=1), dmax * np.sum(w * np.abs(f), axis=1)


def _arc_re_phi(nu, x, a0, c0, dl):
    u = a0 + dl
    sh = np.sinh(u)
    h = x * (np.cosh(a0) * _sinh_minus_id(dl) + 2.0 * np.sinh(a0) * np.sinh(0.5 * dl) ** 2)
    one_minus_s = h / (x * sh)
    s = 1.0 - one_minus_s
    c = np.sqrt(np.clip(one_minus_s * (1.0 + s), 0.0, None))
    return -x * np.cosh(u) * c - nu * np.arctan2(s, c)


def _segment(nu, x, a0, scale):
    """e^{-nu pi/2} int_0^{a0} cos(nu u - x sinh u) du, bucketed by rule size."""
    c0 = nu * a0 - x * np.sinh(a0)
    need = 32 + np.ceil(1.2 * np.abs(c0) + 4.0 * a0).astype(int)
    need = (np.ceil(need / 32.0) * 32 * scale).astype(int)
    out = np.empty_like(nu)
    mag = np.empty_like(nu)
    for n in np.unique(need):
        sel = need == n
        t, w = _gl01(int(n))
        u = a0[sel, None] * t[None, :]
        f = np.cos(nu[sel, None] * u - x[sel, None] * np.sinh(u))
        out[sel] = a0[sel] * np.sum(w * f, axis=1)
        mag[sel] = a0[sel] * np.sum(w * np.abs(f), axis=1)
    damp = np.exp(-nu * np.pi / 2.0)
    return damp * out, damp * mag


def _k_series(nu, x):
    """K_{i nu}(x) = -pi Im I_{i nu}(x) / sinh(pi nu), for small x."""
    q = 0.25 * x * x
    term = np.exp(1j * nu * np.log(0.5 * x)) * rgamma(1.0 + 1j * nu)
    total = term.copy()
    peak = np.abs(term)
    k = 0
    while k < 200:
        term = term * q / ((k + 1.0) * (k + 1.0 + 1j * nu))
        k += 1
        total = total + term
        peak = np.maximum(peak, np.abs(term))
        if np.all(np.abs(term) <= 1e-17 * peak):
            break
    fac = -np.pi / np.sinh(np.pi * nu)
    return fac * total.imag, np.abs(fac) * peak * 4.0


def _k_contour(nu, x, scale):
    val = np.empty_like(nu)
    mag = np.empty_like(nu)
    n = int(80 * scale)
    ser = (x <= 1.0) & (nu >= 0.5)
    if np.any(ser):
        val[ser], mag[ser] = _k_series(nu[ser], x[ser])
    lo = (nu <= x) & ~ser
    if np.any(lo):
        val[lo], mag[lo] = _k_below(nu[lo], x[lo], n)
    hi = ~lo & ~ser
    if np.any(hi):
        nh, xh = nu[hi], x[hi]
        a0 = np.arccosh(nh / xh)
        c0 = nh * a0 - xh * np.sinh(a0)
        s1, m1 = _segment(nh, xh, a0, scale)
        s2, m2 = _arc_tail(nh, xh, a0, c0, n)
        val[hi] = s1 + s2
        mag[hi] = m1 + m2
    return val, mag


def _k_direct(nu, x, scale):
    # plain real integral; the integrand decays double-exponentially, so
    # the truncated Gauss-Legendre rule is spectrally accurate for nu <~ x
    tmax = np.arccosh((x + _DROP) / x)
    n = int(scale * 64) + int(np.max(np.abs(nu) * tmax))
    t, w = _gl01(n)
    tt = tmax[:, None] * t[None, :]
    f = np.exp(-x[:, None] * np.cosh(tt)) * np.cos(nu[:, None] * tt)
    return tmax * np.sum(w * f, axis=1), tmax * np.sum(w * np.abs(f), axis=1)


def bessel_k_imag(nu, x, method="contour"):
    """Macdonald function K_{i nu}(x) for real nu and x > 0.

    Parameters
    ----------
    nu : array_like
        Real order parameter (K_{i nu} is even in nu).
    x : array_like
        Positive arguments; broadcast against ``nu``.
    method : {"contour", "direct"}
        ``"contour"`` (default) integrates along steepest-descent arcs and
        keeps full relative accuracy for large nu / x.  ``"direct"`` is the
        literal real integral of exp(-x cosh t) cos(nu t); it is only
        reliable when nu is not much larger than x.

    Returns
    -------
    EvalResult
        Real value and error estimate.

    Examples
    --------
    >>> round(float(bessel_k_imag(0.0, 1.0).value), 10)
    0.4210244382
    """
    nu_b, x_b = np.broadcast_arrays(np.abs(np.asarray(nu, dtype=float)),
                                    np.asarray(x, dtype=float))
    shape = nu_b.shape
    nu_f, x_f = nu_b.ravel().copy(), x_b.ravel().copy()
    if np.any(~(x_f > 0)):
        raise DomainError("K_{i nu}(x) requires x > 0")
    if method == "contour":
        fn = _k_contour
    elif method == "direct":
        fn = _k_direct
    else:
        raise ValueError(f"unknown method {method!r}")
    lo, _ = fn(nu_f, x_f, 1.0)
    hi, mag = fn(nu_f, x_f, 1.5)
    err = np.abs(hi - lo) + 32 * _EPS * mag
    label = "quadrature"
    if method == "contour":
        ser = (x_f <= 1.0) & (nu_f >= 0.5)
        label = "series" if ser.all() else ("quadrature+series" if ser.any() else label)
    return EvalResult(hi.reshape(shape)[()], err.reshape(shape)[()], label)


def bessel_i_imag(nu, x, real_part=False):
    """Modified Bessel function I_{i nu}(x) from the ascending series.

    Parameters
    ----------
    nu : float
        Real order parameter.
    x : array_like
        Positive arguments.
    real_part : bool
        Return (I_{i nu} + I_{-i nu}) / 2 = Re I_{i nu} instead.

    Returns
    -------
    EvalResult
    """
    nu = float(nu)
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("I_{i nu}(x) requires x > 0")
    q = 0.25 * x * x
    term = np.exp(1j * nu * np.log(0.5 * x)) * complex(rgamma(1.0 + 1j * nu)) * np.ones_like(q)
    total = term.copy()
    peak = np.abs(term)
    k = 0
    while True:
        term = term * q / ((k + 1.0) * (k + 1.0 + 1j * nu))
        k += 1
        total = total + term
        peak = np.maximum(peak, np.abs(term))
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)) and k > 2:
            break
        if k > 5000:
            break
    val = total.real if real_part else total
    err = 8 * _EPS * peak * (k + 1) ** 0.5
    return EvalResult(val[()], err[()], "series")
