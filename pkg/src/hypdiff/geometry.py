"""Hyperbolic states, the Fubini-Study metric and Laplace-Beltrami coefficients.

States are built from the Euler decomposition
U(tau, phi, psi) = w3(phi) w2(tau) w3(-psi) applied to an initial vector.
Bras use transposition only: <bar Psi(tau, phi, psi)| = Psi(tau, -phi, -psi)^T.
"""

from typing import Callable, NamedTuple, Sequence

import numpy as np

__all__ = ["HypState", "MetricTensor", "DiagonalMetric", "LaplaceBeltramiCoeffs",
           "euler_factors", "euler_matrix", "state_from_euler", "bra", "projection",
           "fubini_study_metric", "hyperbolic_plane_metric", "pseudosphere_metric",
           "euclidean_metric", "laplace_beltrami_coeffs", "liouville_potential",
           "liouville_normal_form"]

_TAU_MIN = 1e-6


class HypState(NamedTuple):
    c1: complex
    c2: complex
    tau: float
    phi: float
    psi: float

    @property
    def vector(self):
        return np.array([self.c1, self.c2], dtype=complex)


def euler_factors(tau, phi, psi):
    """The three factors w3(phi), w2(tau), w3(-psi)."""
    def w3(a):
        return np.diag([np.exp(0.5j * a), np.exp(-0.5j * a)]).astype(complex)

    c, s = np.cosh(0.5 * tau), np.sinh(0.5 * tau)
    w2 = np.array([[c, 1j * s], [-1j * s, c]], dtype=complex)
    return w3(phi), w2, w3(-psi)


def euler_matrix(tau, phi, psi):
    """Closed form of w3(phi) w2(tau) w3(-psi)."""
    c, s = np.cosh(0.5 * tau), np.sinh(0.5 * tau)
    ep, em = np.exp(0.5j * (phi - psi)), np.exp(0.5j * (phi + psi))
    return np.array([[c * ep, 1j * s * em], [-1j * s / em, c / ep]], dtype=complex)


def state_from_euler(tau, phi, psi, initial=(1.0, 0.0), convention="product"):
    """State U(tau, phi, psi) @ initial.

    Parameters
    ----------
    convention : {"product", "printed"}
        ``"product"`` multiplies the three factors, giving
        (cosh(tau/2) e^{i(phi-psi)/2}, -i sinh(tau/2) e^{-i(phi+psi)/2}) for
        initial (1, 0).  ``"printed"`` uses the same formula with psi -> -psi,
        i.e. (cosh(tau/2) e^{i(phi+psi)/2}, -i sinh(tau/2) e^{-i(phi-psi)/2}).
    """
    if tau < 0:
        raise ValueError("tau must be >= 0")
    if convention not in ("product", "printed"):
        raise ValueError("convention must be 'product' or 'printed'")
    p = psi if convention == "product" else -psi
    a, b, c = euler_factors(tau, phi, p)
    v = a @ b @ c @ np.asarray(initial, dtype=complex)
    return HypState(v[0], v[1], tau, phi, psi)


def bra(tau, phi, psi, initial=(1.0, 0.0), convention="product"):
    """Transposition-only bra Psi(tau, -phi, -psi)^T as a row vector."""
    return state_from_euler(tau, -phi, -psi, initial, convention).vector


def projection(tau, phi, psi, initial=(1.0, 0.0), convention="product"):
    """P = |Psi><bar Psi|; its trace is cosh^2(tau/2) - sinh^2(tau/2) = 1."""
    ket = state_from_euler(tau, phi, psi, initial, convention).vector
    return np.outer(ket, bra(tau, phi, psi, initial, convention))


class MetricTensor(NamedTuple):
    """Metric at a point.

    ``g`` is the real part of the complex tensor ``F``; ``coords`` names
    the coordinates.  The psi row and column of the Fubini-Study metric
    vanish identically and are kept.
    """

    g: np.ndarray
    F: np.ndarray
    coords: tuple


def fubini_study_metric(tau, phi, psi, h=1e-5, initial=(1.0, 0.0), convention="product"):
    """Fubini-Study tensor by central differences with transposition-only bras.

    F_ab = <bar Psi_a|Psi_b> - <bar Psi_a|Psi><bar Psi|Psi_b>, where the
    bra of a derivative state is formed by the same rule as for the state,
    <bar Psi_a| = Psi_a(tau, -phi, -psi)^T, and g = Re F.  The result tends to
    (1/4) diag(-1, sinh^2 tau, 0), with F_{tau phi} = (i/4) sinh tau.

    Parameters
    ----------
    h : float
        Step, within [1e-6, 1e-3].
    """
    if tau < _TAU_MIN:
        raise ValueError("metric is singular at tau = 0 (needs tau >= 1e-6)")
    if not 1e-6 <= h <= 1e-3:
        raise ValueError("h must lie in [1e-6, 1e-3]")
    x0 = np.array([tau, phi, psi], dtype=float)

    def ket(x):
        return state_from_euler(x[0], x[1], x[2], initial, convention).vector

    refl = np.array([1.0, -1.0, -1.0])
    kd, bd = [], []
    for a in range(3):
        e = np.zeros(3)
        e[a] = h
        kd.append((ket(x0 + e) - ket(x0 - e)) / (2 * h))
        bd.append((ket(refl * x0 + e) - ket(refl * x0 - e)) / (2 * h))
    k0, b0 = ket(x0), ket(refl * x0)
    F = np.empty((3, 3), dtype=complex)
    for a in range(3):
        for b in range(3):
            F[a, b] = bd[a] @ kd[b] - (bd[a] @ k0) * (b0 @ kd[b])
    return MetricTensor(F.real.copy(), F, ("tau", "phi", "psi"))


class DiagonalMetric(NamedTuple):
    """Diagonal metric g = diag(entries(x)) on a chart with named coordinates."""

    entries: Callable
    coords: tuple


def hyperbolic_plane_metric():
    """diag(-1, sinh^2 tau) in (tau, phi): four times the Fubini-Study metric."""
    return DiagonalMetric(lambda x: np.array([-1.0, np.sinh(x[0]) ** 2]), ("tau", "phi"))


def pseudosphere_metric():
    """diag(1, -r^2, -r^2 sinh^2 tau) in (r, tau, phi)."""
    return DiagonalMetric(
        lambda x: np.array([1.0, -x[0] ** 2, -x[0] ** 2 * np.sinh(x[1]) ** 2]), ("r", "tau", "phi"))


def euclidean_metric(dim=2):
    return DiagonalMetric(lambda x: np.ones(dim), tuple(f"x{j}" for j in range(dim)))


class LaplaceBeltramiCoeffs(NamedTuple):
    """Laplace-Beltrami operator sum_a A_a d_a^2 f + B_a d_a f + C f.

    ``A(x)``, ``B(x)`` return arrays with one entry per coordinate and
    ``C(x)`` a scalar (zero for a pure Laplacian).
    """

    A: Callable
    B: Callable
    C: Callable
    coords: tuple

    def apply(self, grad, hess_diag, x, f_value=0.0):
        """Evaluate the operator given the gradient and Hessian diagonal of f at x."""
        x = np.asarray(x, dtype=float)
        return float(np.dot(self.A(x), hess_diag) + np.dot(self.B(x), grad) + self.C(x) * f_value)


def laplace_beltrami_coeffs(metric, h=1e-3):
    """Coefficients of (1/sqrt|g|) d_a (sqrt|g| g^{aa} d_a f) for a diagonal metric.

    A_a = g^{aa}; B_a = (1/sqrt|g|) d_a (sqrt|g| g^{aa}), the derivative
    taken by a fourth-order central difference with step ``h``.  The
    volume factor uses |det g|, so Lorentzian signatures are handled
    without an imaginary sqrt(g).

    Raises
    ------
    TypeError
        If ``metric`` is not a :class:`DiagonalMetric`.
    """
    if not isinstance(metric, DiagonalMetric):
        raise TypeError("only diagonal metrics are supported")
    ent = metric.entries

    def A(x):
        return 1.0 / ent(np.asarray(x, dtype=float))

    def flux(x):
        e = ent(x)
        return np.sqrt(abs(np.prod(e))) / e

    def B(x):
        x = np.asarray(x, dtype=float)
        n = x.size
        out = np.empty(n)
        vol = np.sqrt(abs(np.prod(ent(x))))
        for a in range(n):
            d = np.zeros(n)
            d[a] = h
            fp2, fp1, fm1, fm2 = flux(x + 2 * d)[a], flux(x + d)[a], flux(x - d)[a], flux(x - 2 * d)[a]
            out[a] = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h) / vol
        return out

    return LaplaceBeltramiCoeffs(A, B, lambda x: 0.0, metric.coords)


def liouville_potential(a1, a2, h=1e-4):
    """Normal-form potential for u'' + a1 u' + a2 u = 0.

    With u = exp(-1/2 int a1) U the equation becomes U'' + q U = 0 with
    q = a2 - a1^2/4 - a1'/2 (a1' by central difference).
    """
    def q(x):
        d1 = (a1(x + h) - a1(x - h)) / (2 * h)
        return a2(x) - 0.25 * a1(x) ** 2 - 0.5 * d1

    return q


def liouville_normal_form(k, xi):
    """q(tau) = (1/4 - k^2)/sinh^2 tau + xi^2 for the conical equation.

    The conical equation f'' + coth(tau) f' + (-k^2/sinh^2 tau + 1/4 + xi^2) f = 0
    becomes F'' + q F = 0 with F = sqrt(sinh tau) f.
    """
    def q(tau):
        return (0.25 - k * k) / np.sinh(tau) ** 2 + xi * xi

    return q
