"""Spherical and hyperbolic evolution operators and the brachistochrone ODE.

The hyperbolic operators come from the spherical ones by the substitution
t -> i t.  The brachistochrone system for a constant constraint F0 is

    -dH/dt = [H, F0],

integrated here with classical fixed-step RK4.
"""

from typing import NamedTuple

import numpy as np

from .mat2 import SIGMA_Y, commutator, expm2

__all__ = ["EvolutionParams", "BrachistochroneState", "Trajectory", "DispersionResult",
           "evolution_spherical", "continue_to_hyperbolic", "hamiltonian_spherical",
           "hamiltonian_hyperbolic", "constraint", "w_matrix", "w_factorization",
           "hyperbolic_generator", "integrate_brachistochrone", "isotropy_trace",
           "energy_dispersion", "continuation_mismatch"]


class EvolutionParams(NamedTuple):
    omega: float
    R: float
    Omega: float


class BrachistochroneState(NamedTuple):
    H: np.ndarray
    F: np.ndarray
    t: float


class Trajectory(NamedTuple):
    """RK4 trajectory of H(t) with conserved-quantity drift.

    ``trace_h2`` and ``trace_hf`` hold tr(H^2/2) and tr(HF) at every step.
    """

    t: np.ndarray
    H: np.ndarray  # shape (steps + 1, 2, 2)
    F: np.ndarray
    trace_h2: np.ndarray
    trace_hf: np.ndarray
    drift_h2: float
    drift_hf: float

    @property
    def final(self):
        return BrachistochroneState(self.H[-1], self.F, float(self.t[-1]))


def evolution_spherical(t, s, omega, global_phase=True):
    """e^{i phi} [[cos phi, sin phi], [-sin phi, cos phi]] with phi = omega (t - s).

    ``t`` and ``s`` may be complex, which is how the hyperbolic operator is
    reached by continuation.
    """
    phi = omega * (t - s)
    c, sn = np.cos(phi), np.sin(phi)
    m = np.array([[c, sn], [-sn, c]], dtype=complex)
    return np.exp(1j * phi) * m if global_phase else m


def continue_to_hyperbolic(t, s, omega):
    """e^{-phi} [[cosh phi, i sinh phi], [-i sinh phi, cosh phi]], phi = omega (t - s).

    Equals ``evolution_spherical(1j * t, 1j * s, omega)``.
    """
    phi = omega * (t - s)
    c, sn = np.cosh(phi), np.sinh(phi)
    return np.exp(-phi) * np.array([[c, 1j * sn], [-1j * sn, c]], dtype=complex)


def hamiltonian_spherical(t, omega, R):
    """R [[-cos 2wt, sin 2wt], [sin 2wt, cos 2wt]]; ``t`` may be complex."""
    c, s = np.cos(2 * omega * t), np.sin(2 * omega * t)
    return R * np.array([[-c, s], [s, c]], dtype=complex)


def hamiltonian_hyperbolic(t, omega, R):
    """R [[-cosh 2wt, i sinh 2wt], [i sinh 2wt, cosh 2wt]] (traceless)."""
    if R <= 0:
        raise ValueError("R must be positive")
    c, s = np.cosh(2 * omega * t), np.sinh(2 * omega * t)
    H = R * np.array([[-c, 1j * s], [1j * s, c]], dtype=complex)
    assert abs(np.trace(H)) <= 1e-14 * abs(R * c)
    return H


def constraint(Omega):
    """Constant constraint F0 = Omega sigma_y."""
    return Omega * SIGMA_Y


def w_matrix(t, omega):
    """Fundamental matrix W(t) = (1/sqrt 2) [[e^{2iwt}, i], [i e^{2iwt}, 1]]; complex t allowed."""
    e = np.exp(2j * omega * t)
    return np.array([[e, 1j], [1j * e, 1.0]], dtype=complex) / np.sqrt(2.0)


def w_factorization(t, s, omega):
    """W(i t) W(-i s)^dagger, which reproduces ``continue_to_hyperbolic(t, s, omega)``."""
    return w_matrix(1j * t, omega) @ w_matrix(-1j * s, omega).conj().T


def hyperbolic_generator(omega):
    """Constant generator G with continue_to_hyperbolic(t, 0, w) = exp(t G).

    G = -omega (I + sigma_y).
    """
    return -omega * (np.eye(2) + SIGMA_Y)


def continuation_mismatch(t, omega, R, n=2001):
    """Compare exp(-int_0^t H(i tau) d(i tau)) with the continued propagator.

    The integral of the continued Hamiltonian is taken by Simpson's rule on
    ``n`` points.  Because H at different times does not commute, the plain
    exponential of the integral is not the propagator; the returned
    max-entry error is therefore O(1) rather than small, while
    exp(t G) with :func:`hyperbolic_generator` reproduces it exactly.

    Returns
    -------
    (err_integral_exponent, err_generator) : tuple of float
    """
    from scipy.integrate import simpson

    tau = np.linspace(0.0, t, n)
    Hs = np.array([hamiltonian_spherical(1j * x, omega, R) for x in tau])
    integral = 1j * simpson(Hs, x=tau, axis=0)
    target = continue_to_hyperbolic(t, 0.0, omega)
    e1 = float(np.max(np.abs(expm2(-integral) - target)))
    e2 = float(np.max(np.abs(expm2(t * hyperbolic_generator(omega)) - target)))
    return e1, e2


def isotropy_trace(H):
    """tr(H^2 / 2)."""
    return complex(0.5 * np.trace(H @ H))


def integrate_brachistochrone(state0, t_end, steps):
    """RK4 for -dH/dt = [H, F0] with F0 held constant.

    Parameters
    ----------
    state0 : BrachistochroneState
    t_end : float
    steps : int
        At least 16.

    Returns
    -------
    Trajectory
        ``drift_h2`` and ``drift_hf`` are the largest deviations of
        tr(H^2/2) (relative to its start value) and tr(HF) (relative to
        |tr(H^2/2)|) along the path.
    """
    if steps < 16:
        raise ValueError("steps must be >= 16")
    F = np.asarray(state0.F, dtype=complex)
    H = np.asarray(state0.H, dtype=complex)
    h = (t_end - state0.t) / steps

    def rhs(X):
        return commutator(F, X)

    out = np.empty((steps + 1, 2, 2), dtype=complex)
    out[0] = H
    for j in range(steps):
        k1 = rhs(H)
        k2 = rhs(H + 0.5 * h * k1)
        k3 = rhs(H + 0.5 * h * k2)
        k4 = rhs(H + h * k3)
        H = H + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        out[j + 1] = H
    t = state0.t + h * np.arange(steps + 1)
    th2 = 0.5 * np.einsum("nij,nji->n", out, out)
    thf = np.einsum("nij,ji->n", out, F)
    scale = max(abs(th2[0]), 1e-300)
    return Trajectory(t, out, F, th2, thf,
                      float(np.max(np.abs(th2 - th2[0])) / scale),
                      float(np.max(np.abs(thf)) / scale))


class DispersionResult(NamedTuple):
    """Energy spread; ``negative`` flags a radicand with negative real part."""

    value: float
    radicand: complex
    negative: bool


def energy_dispersion(H, psi, pairing="indefinite"):
    """sqrt(<H^2> - <H>^2) for a two-component state.

    Parameters
    ----------
    H : (2, 2) array
    psi : array_like of 2 complex
    pairing : {"indefinite", "hermitian"}
        ``"indefinite"`` uses the bra (conj c1, -conj c2), i.e. the form
        preserved by SU(1,1); ``"hermitian"`` the usual (conj c1, conj c2).
        Expectations are divided by <psi|psi> in the chosen pairing.

    Returns
    -------
    DispersionResult
        ``value`` is sqrt(|Re radicand|); the sign is reported separately.
    """
    psi = np.asarray(psi, dtype=complex).reshape(2)
    eta = np.array([1.0, -1.0]) if pairing == "indefinite" else np.ones(2)
    if pairing not in ("indefinite", "hermitian"):
        raise ValueError("pairing must be 'indefinite' or 'hermitian'")
    bra = eta * psi.conj()
    norm = bra @ psi
    if abs(norm) < 1e-300:
        raise ValueError("state has zero norm in the chosen pairing")
    H = np.asarray(H, dtype=complex)
    e1 = bra @ H @ psi / norm
    e2 = bra @ H @ H @ psi / norm
    rad = complex(e2 - e1 * e1)
    return DispersionResult(float(np.sqrt(abs(rad.real))), rad, rad.real < 0)
