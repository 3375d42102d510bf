"""Finite-difference residual of a linear second-order ODE."""

import numpy as np

__all__ = ["ode_residual"]


def ode_residual(coeffs, f, x, h=5e-3):
    """Relative residual of a2(x) f'' + a1(x) f' + a0(x) f at ``x``.

    Parameters
    ----------
    coeffs : tuple of callables
        ``(a2, a1, a0)``; each takes ``x`` and returns a (complex) number.
    f : callable
        Candidate solution; called once with the array of five stencil
        points ``x + h * [-2, -1, 0, 1, 2]``.
    x : float
    h : float
        Step, within [1e-5, 1e-2].

    Returns
    -------
    float
        ``|a2 f'' + a1 f' + a0 f| / max(|a2 f''|, |a1 f'|, |a0 f|)``.

    Raises
    ------
    ValueError
        If ``h`` is out of range or ``f`` returns non-finite values.
    """
    if not 1e-5 <= h <= 1e-2:
        raise ValueError("h must lie in [1e-5, 1e-2]")
    a2, a1, a0 = coeffs
    pts = x + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    fv = np.asarray(f(pts), dtype=complex)
    if fv.shape != (5,) or not np.all(np.isfinite(fv)):
        raise ValueError("f must return five finite values on the stencil")
    d1 = (fv[0] - 8.0 * fv[1] + 8.0 * fv[3] - fv[4]) / (12.0 * h)
    d2 = (-fv[0] + 16.0 * fv[1] - 30.0 * fv[2] + 16.0 * fv[3] - fv[4]) / (12.0 * h * h)
    terms = np.array([a2(x) * d2, a1(x) * d1, a0(x) * fv[2]])
    scale = np.max(np.abs(terms))
    if scale == 0:
        return 0.0
    return float(abs(terms.sum()) / scale)
