"""Regularized Gauss hypergeometric series with complex parameters."""

import numpy as np

from .gamma import rgamma

__all__ = ["hyp2f1_regularized"]


def _npint(c):
    return c.imag == 0 and c.real <= 0 and c.real == round(c.real)


def hyp2f1_regularized(a, b, c, x, max_terms=10000):
    """Series for 2F1(a, b; c; x) / Gamma(c) with ``|x| < 1``.

    ``a`` and ``b`` may be arrays broadcasting against ``x``; ``c`` is a
    complex scalar.  The series is
    stopped once three consecutive terms fall below ``1e-17`` of the running
    sum.  A nonpositive integer ``c`` is fine: the leading terms vanish and
    the sum starts at ``n = 1 - c``.

    Returns
    -------
    value : complex ndarray
    loss : float ndarray
        Ratio of the largest partial term to the final value, an estimate
        of the cancellation (``est_error ~ loss * eps``).
    """
    c = complex(c)
    a, b, x = np.broadcast_arrays(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex),
                                  np.asarray(x, dtype=complex))
    if np.any(np.abs(x) >= 1):
        raise ValueError("hypergeometric series needs |x| < 1")

    n0 = int(round(1 - c.real)) if _npint(c) else 0
    # leading term t_{n0} = (a)_n0 (b)_n0 x^n0 / (n0! Gamma(c + n0))
    lead = complex(rgamma(c + n0)) * np.ones(x.shape, dtype=complex)
    for j in range(n0):
        lead *= (a + j) * (b + j) / (j + 1)
    term = lead * x**n0
    total = term.copy()
    peak = np.abs(term)
    quiet = np.zeros(x.shape, dtype=int)
    n = n0
    while n < max_terms:
        term = term * ((a + n) * (b + n) / ((n + 1) * (c + n))) * x
        n += 1
        total = total + term
        at = np.abs(term)
        peak = np.maximum(peak, at)
        small = at <= 1e-17 * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        if np.all(quiet >= 3) or np.all(term == 0):
            break
    with np.errstate(divide="ignore", invalid="ignore"):
        loss = np.where(total != 0, peak / np.abs(total), np.inf)
    loss = np.where(peak == 0, 1.0, loss)
    return total, loss
