"""2x2 complex matrices: commutators, closed-form exponentials, SU(1,1) generators.

Matrices are plain ``(2, 2)`` complex numpy arrays.
"""

from typing import NamedTuple

import numpy as np
from scipy.linalg import expm as _expm_pade

__all__ = ["mat2", "identity", "commutator", "expm2", "expm2_reference", "max_error",
           "GeneratorSet", "su11_generators", "check_algebra", "SIGMA_X", "SIGMA_Y", "SIGMA_Z"]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_SERIES_CUT = 1e-4


def mat2(a11, a12, a21, a22):
    """Build a 2x2 complex matrix from its entries."""
    m = np.array([[a11, a12], [a21, a22]], dtype=complex)
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity():
    return np.eye(2, dtype=complex)


def commutator(A, B):
    """AB - BA."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    return A @ B - B @ A


def expm2(A):
    """Closed-form exponential of a 2x2 matrix.

    With A = alpha I + N, alpha = tr(A)/2 and N traceless, N^2 = s^2 I where
    s^2 = -det(N), so exp(A) = e^alpha (cosh(s) I + sinh(s)/s N).  Both
    cosh(s) and sinh(s)/s are even in s, so the branch of the square root
    is irrelevant; below |s| = 1e-4 they are summed as 6-term series.

    Examples
    --------
    >>> np.allclose(expm2(np.zeros((2, 2))), np.eye(2))
    True
    """
    A = np.asarray(A, dtype=complex)
    alpha = 0.5 * (A[0, 0] + A[1, 1])
    N = A - alpha * np.eye(2)
    s2 = -(N[0, 0] * N[1, 1] - N[0, 1] * N[1, 0])
    if abs(s2) < _SERIES_CUT**2:
        # cosh s = sum s^2j/(2j)!, sinh s / s = sum s^2j/(2j+1)!
        ch, sc, t = 0.0, 0.0, 1.0
        for j in range(6):
            ch += t / _fact(2 * j)
            sc += t / _fact(2 * j + 1)
            t *= s2
    else:
        s = np.sqrt(s2)
        ch, sc = np.cosh(s), np.sinh(s) / s
    return np.exp(alpha) * (ch * np.eye(2) + sc * N)


def _fact(n):
    out = 1.0
    for j in range(2, n + 1):
        out *= j
    return out


def expm2_reference(A):
    """Scaling-and-squaring Pade exponential (scipy), used as a cross-check."""
    return _expm_pade(np.asarray(A, dtype=complex))


def max_error(A, B):
    """Max entrywise |A - B|, divided by max|B| when that exceeds 1."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    return float(np.max(np.abs(A - B)) / max(1.0, float(np.max(np.abs(B)))))


class GeneratorSet(NamedTuple):
    a_plus: np.ndarray
    a_minus: np.ndarray
    a_3: np.ndarray


def su11_generators(as_printed=False):
    """Generators a+ = sigma_x/2, a- = -sigma_y/2 and a3.

    With ``as_printed=False`` (default) a3 = (i/2) diag(-1, 1), for which
    [a+, a-] = a3 and [a+-, a3] = +-a-+ hold exactly.  ``as_printed=True``
    returns a3 = (i/2) diag(1, -1), the opposite sign, for which every
    bracket comes out with the wrong sign.
    """
    ap = 0.5 * np.array([[0, 1], [1, 0]], dtype=complex)
    am = 0.5 * np.array([[0, 1j], [-1j, 0]], dtype=complex)
    sgn = 1.0 if as_printed else -1.0
    a3 = 0.5j * sgn * np.array([[1, 0], [0, -1]], dtype=complex)
    return GeneratorSet(ap, am, a3)


def check_algebra(gens=None):
    """Entrywise errors of the three bracket relations.

    Returns
    -------
    dict
        ``{"[a+,a-]=a3": err, "[a+,a3]=a-": err, "[a-,a3]=-a+": err}``
    """
    g = gens or su11_generators()
    return {
        "[a+,a-]=a3": float(np.max(np.abs(commutator(g.a_plus, g.a_minus) - g.a_3))),
        "[a+,a3]=a-": float(np.max(np.abs(commutator(g.a_plus, g.a_3) - g.a_minus))),
        "[a-,a3]=-a+": float(np.max(np.abs(commutator(g.a_minus, g.a_3) + g.a_plus))),
    }
