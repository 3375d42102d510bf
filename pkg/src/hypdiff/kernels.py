"""Heat kernel and Green's function of the hyperbolic plane, the index-integral
composition formula, and a Monte-Carlo Brownian-motion oracle.

Conventions: the Laplacian has spectrum [1/4, inf) and the heat semigroup
is e^{t Delta}, so the radial kernel is

    K_t(rho) = (1/2pi) int_0^inf e^{-(1/4 + xi^2) t} P_{i xi - 1/2}(cosh rho) xi tanh(pi xi) d xi,

normalized so that int K_t(rho) 2 pi sinh(rho) d rho = 1.
"""

from typing import NamedTuple

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import gamma as _gamma_real
from scipy.special import kv

from .specfun import DomainError, bessel_k_imag, conical_p, legendre_q, loggamma_complex
from .transforms.quadrature import QuadratureSpec, gauss_legendre, quad

__all__ = ["HeatKernelQuery", "PathSample", "CompositionResult", "heat_kernel_radial",
           "heat_kernel_mckean", "heat_kernel_mass", "greens_function", "composition_formula",
           "composition_weight", "brownian_sampler", "endpoint_cdf", "ks_distance",
           "semigroup_check"]

_EXP_CUT = 37.0  # e^-37 ~ 1e-16
_XI_PANEL = 1.0
_CHUNK = 10_000


class HeatKernelQuery(NamedTuple):
    x: float
    y: float
    t: float
    k_modes: np.ndarray
    spec: QuadratureSpec = QuadratureSpec()


class PathSample(NamedTuple):
    """Endpoints of simulated paths in geodesic polar coordinates about i."""

    points: np.ndarray  # shape (n, 2): (tau, phi)
    dt: float
    seed: int

    @property
    def tau(self):
        return self.points[:, 0]


def _xi_rule(t, n):
    xi_max = np.sqrt(_EXP_CUT / t) + 2.0
    m = max(1, int(np.ceil(xi_max / _XI_PANEL)))
    edges = np.linspace(0.0, xi_max, m + 1)
    xs, ws = zip(*(gauss_legendre(n, a, b) for a, b in zip(edges[:-1], edges[1:])))
    return np.concatenate(xs), np.concatenate(ws)


def heat_kernel_radial(rho, t, spec=None, return_error=False):
    """Radial heat kernel from its spectral (Mehler-Fock) representation.

    Parameters
    ----------
    rho : float or array_like
        Geodesic distance(s), >= 0.
    t : float
        Time, > 0.
    return_error : bool
        Also return an error estimate (difference of 16- and 24-point
        panel rules plus the propagated conical-function error).

    Examples
    --------
    >>> round(float(heat_kernel_radial(1.0, 0.5)), 10)
    0.0757267526
    """
    if t <= 0:
        raise DomainError("t must be positive")
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0):
        raise DomainError("rho must be >= 0")
    r = rho.ravel()
    z = np.cosh(r)
    zm1 = 2.0 * np.sinh(0.5 * r) ** 2
    est = []
    for n in (16, 24):
        xi, w = _xi_rule(t, n)
        weight = w * np.exp(-(0.25 + xi * xi) * t) * xi * np.tanh(np.pi * xi) / (2.0 * np.pi)
        if r.size and np.all(zm1 == 0):
            vals, errs = np.ones((xi.size, r.size)), np.zeros((xi.size, r.size))
        else:
            zz = np.where(zm1 > 0, z, 1.0 + 1e-300)
            p = conical_p((0.0, xi[:, None]), zz[None, :], zm1=np.maximum(zm1, 1e-300)[None, :])
            vals, errs = np.asarray(p.value, dtype=float), np.asarray(p.est_error, dtype=float)
            vals = np.where(zm1[None, :] > 0, vals, 1.0)
        est.append((weight @ vals, np.abs(weight) @ errs))
    (v0, _), (v1, e1) = est
    val = v1.reshape(rho.shape)
    if return_error:
        return val, (np.abs(v1 - v0) + e1).reshape(rho.shape)
    return val[()] if val.ndim == 0 else val


def heat_kernel_mckean(rho, t, spec=None):
    """Independent closed-form quadrature for the radial heat kernel.

    K_t(rho) = sqrt(2) e^{-t/4} / (4 pi t)^{3/2} int_rho^inf s e^{-s^2/4t} / sqrt(cosh s - cosh rho) ds,

    evaluated by exp-sinh quadrature with the exact offset s - rho, so the
    inverse square root at s = rho is resolved without cancellation.
    """
    if t <= 0 or rho < 0:
        raise DomainError("need t > 0 and rho >= 0")
    spec = spec or QuadratureSpec(abs_tol=1e-15, rel_tol=1e-11, endpoint_singularity="inverse_sqrt")
    if spec.endpoint_singularity == "none":
        spec = QuadratureSpec(spec.abs_tol, spec.rel_tol, spec.max_subdivisions, None, "inverse_sqrt")

    @np.errstate(over="ignore", invalid="ignore")
    def f(s, ds, _):
        # cosh s - cosh rho = 2 sinh((s + rho)/2) sinh((s - rho)/2)
        gap = 2.0 * np.sinh(0.5 * (s + rho)) * np.sinh(0.5 * ds)
        out = np.zeros_like(s)
        ok = (gap > 0) & (s * s / (4 * t) < 700)
        out[ok] = s[ok] * np.exp(-s[ok] ** 2 / (4 * t)) / np.sqrt(gap[ok])
        return out

    res = quad(f, float(rho), np.inf, spec, offsets=True)
    return float(np.sqrt(2.0) * np.exp(-0.25 * t) / (4 * np.pi * t) ** 1.5 * res.value)


def heat_kernel_mass(t, rho_max=None, n_panels=None):
    """int_0^rho_max K_t(rho) 2 pi sinh(rho) d rho by Gauss-Legendre panels.

    ``rho_max`` defaults to the distance where the Gaussian factor
    e^{-rho^2/4t} e^{rho} drops below 1e-17.
    """
    if rho_max is None:
        # rho^2/(4t) - rho/2 >= 39 (the kernel decays like e^{-rho/2 - rho^2/4t})
        rho_max = t + np.sqrt(t * t + 156.0 * t) + 1.0
    n_panels = n_panels or int(np.ceil(rho_max / 0.5))
    edges = np.linspace(0.0, rho_max, n_panels + 1)
    xs, ws = zip(*(gauss_legendre(16, a, b) for a, b in zip(edges[:-1], edges[1:])))
    r, w = np.concatenate(xs), np.concatenate(ws)
    return float(np.sum(w * 2 * np.pi * np.sinh(r) * heat_kernel_radial(r, t)))


def greens_function(rho, E, method="spectral", spec=None):
    """Resolvent kernel G(rho; E) = int_0^inf e^{-E t} K_t(rho) dt, E > 0.

    Parameters
    ----------
    method : {"spectral", "laplace"}
        ``"spectral"`` evaluates the spectral integral
        (1/2pi) int P_{i xi-1/2}(cosh rho) xi tanh(pi xi) / (E + 1/4 + xi^2) d xi
        through its closed form Q_{s-1}(cosh rho) / (2 pi), s = 1/2 + sqrt(1/4 + E).
        ``"laplace"`` integrates e^{-Et} heat_kernel_radial(rho, t) over t.

    Raises
    ------
    DomainError
        For E <= 0 (outside the resolvent set used here) or rho <= 0.
    """
    if E <= 0:
        raise DomainError("Green's function needs E > 0")
    if rho <= 0:
        raise DomainError("Green's function needs rho > 0")
    if method == "spectral":
        deg = -0.5 + np.sqrt(0.25 + E)
        q = legendre_q(0.0, deg, np.cosh(rho), zm1=2.0 * np.sinh(0.5 * rho) ** 2)
        return float(np.real(q.value)) / (2.0 * np.pi)
    if method != "laplace":
        raise ValueError("method must be 'spectral' or 'laplace'")
    spec = spec or QuadratureSpec(abs_tol=1e-12, rel_tol=1e-8)
    # K_t(rho) < e^{-rho^2/4t} makes t < rho^2 / 150 negligible
    t0 = rho * rho / 150.0
    # substitute t = e^u: the integrand spans many decades in t
    u_hi = np.log((_EXP_CUT + 5.0) / (E + 0.25))
    edges = np.linspace(np.log(t0), u_hi, int(np.ceil((u_hi - np.log(t0)) / 0.25)) + 1)
    total = 0.0
    for n in (20,):
        for a, b in zip(edges[:-1], edges[1:]):
            u, w = gauss_legendre(n, a, b)
            tt = np.exp(u)
            vals = np.array([heat_kernel_radial(rho, x) for x in tt])
            total += float(np.sum(w * tt * np.exp(-E * tt) * vals))
    return total


def composition_weight(lam, nu):
    """nu sinh(pi nu) Gamma(lam + i nu) Gamma(lam - i nu), in log form."""
    nu = np.asarray(nu, dtype=float)
    lg = 2.0 * np.real(loggamma_complex(lam + 1j * nu))
    with np.errstate(divide="ignore"):
        ls = np.pi * nu + np.log1p(-np.exp(-2.0 * np.pi * nu)) - np.log(2.0) + np.log(nu)
    return np.where(nu > 0, np.exp(lg + ls), 0.0)


class CompositionResult(NamedTuple):
    lhs: float
    rhs: float
    rel_err: float
    est_error: float


def composition_formula(lam, a, b, spec=None):
    """Check the index-integral composition formula.

    lhs = int_0^N nu sinh(pi nu) Gamma(lam+i nu) Gamma(lam-i nu) K_{i nu}(a) K_{i nu}(b) d nu,
    rhs = (pi^{3/2} Gamma(lam+1/2) / 2) ((a+b)/(2ab))^{-lam} K_lam(a+b),

    with N = max(20, lam + 15) (the integrand decays like e^{-pi nu}).
    """
    if not 0 < lam <= 5:
        raise DomainError("need 0 < lambda <= 5")
    if a <= 0 or b <= 0 or a + b > 50:
        raise DomainError("need a, b > 0 and a + b <= 50")
    spec = spec or QuadratureSpec(abs_tol=1e-14, rel_tol=1e-10)
    N = max(20.0, lam + 15.0)

    def f(nu):
        nu = np.atleast_1d(nu)
        w = composition_weight(lam, nu)
        ka = bessel_k_imag(nu, a).value
        kb = ka if b == a else bessel_k_imag(nu, b).value
        return float((w * ka * kb)[0])

    res = quad(f, 0.0, N, spec)
    rhs = np.pi**1.5 * _gamma_real(lam + 0.5) / 2.0 * ((a + b) / (2 * a * b)) ** (-lam) * kv(lam, a + b)
    lhs = float(res.value)
    return CompositionResult(lhs, float(rhs), abs(lhs - rhs) / abs(rhs), float(res.est_error))


def brownian_sampler(tau0, t, n_paths, dt, seed):
    """Hyperbolic Brownian motion with generator the Laplacian y^2 (dx^2 + dy^2).

    Paths run in the upper half-plane from the point at distance ``tau0``
    above i (that is, i e^{tau0}).  log Y is advanced with exact Gaussian
    increments, d log Y = sqrt(2) dW2 - dt; conditionally on the Y path,
    X_t is Gaussian with variance 2 int Y^2 dt (trapezoid rule on the
    step grid), so X needs one draw at the end.  Endpoints are returned as
    geodesic polar coordinates (tau, phi) about i.

    The generator is the full Laplacian (not one half of it), matching the
    e^{-(1/4 + xi^2) t} convention of :func:`heat_kernel_radial`.

    Paths are simulated in chunks of 10^4; chunk j uses the j-th child of
    ``SeedSequence(seed)`` with a Philox generator, so results do not
    depend on how chunks are distributed.

    Raises
    ------
    DomainError
        If dt > 1e-3 max(1, t), n_paths < 1000 or tau0 < 0.
    """
    if dt > 1e-3 * max(1.0, t) or dt <= 0:
        raise DomainError("need 0 < dt <= 1e-3 max(1, t)")
    if n_paths < 1000:
        raise DomainError("need n_paths >= 1000")
    if tau0 < 0 or t <= 0:
        raise DomainError("need tau0 >= 0 and t > 0")
    steps = int(np.ceil(t / dt))
    h = t / steps
    children = np.random.SeedSequence(seed).spawn(int(np.ceil(n_paths / _CHUNK)))
    out = np.empty((n_paths, 2))
    for j, child in enumerate(children):
        m = min(_CHUNK, n_paths - j * _CHUNK)
        rng = np.random.Generator(np.random.Philox(child))
        logy = np.full(m, float(tau0))
        y2 = np.exp(2 * logy)
        acc = np.zeros(m)
        for _ in range(steps):
            logy += np.sqrt(2 * h) * rng.standard_normal(m) - h
            y2_new = np.exp(2 * logy)
            acc += 0.5 * h * (y2 + y2_new)
            y2 = y2_new
        x = np.sqrt(2 * acc) * rng.standard_normal(m)
        y = np.exp(logy)
        cosh_d = 1.0 + (x * x + (y - 1.0) ** 2) / (2.0 * y)
        w = (x + 1j * (y - 1.0)) / (x + 1j * (y + 1.0))  # disk image, 0 at i
        out[j * _CHUNK:j * _CHUNK + m, 0] = np.arccosh(cosh_d)
        out[j * _CHUNK:j * _CHUNK + m, 1] = np.angle(w)
    return PathSample(out, h, seed)


def endpoint_cdf(t, rho_max=None, n=600):
    """CDF of the distance from the start point, int_0^rho K_t 2 pi sinh, as a spline."""
    rho_max = rho_max or (t + np.sqrt(t * t + 156.0 * t) + 1.0)
    edges = np.linspace(0.0, rho_max, n // 12 + 1)
    xs, ws = zip(*(gauss_legendre(12, a, b) for a, b in zip(edges[:-1], edges[1:])))
    r = np.concatenate(xs)
    dens = 2 * np.pi * np.sinh(r) * heat_kernel_radial(r, t)
    cum = [0.0]
    for k, (a, b) in enumerate(zip(edges[:-1], edges[1:])):
        cum.append(cum[-1] + float(np.sum(ws[k] * dens[12 * k:12 * k + 12])))
    return CubicSpline(edges, np.array(cum))


def ks_distance(samples, cdf):
    """Kolmogorov-Smirnov distance between samples and a CDF callable."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    F = np.clip(cdf(x), 0.0, 1.0)
    hi = np.arange(1, n + 1) / n - F
    lo = F - np.arange(0, n) / n
    return float(max(hi.max(), lo.max()))


def semigroup_check(t, s, rho_xy, n_r=160, n_theta=64):
    """int K_t(d(x,z)) K_s(d(z,y)) dmu(z) against K_{t+s}(d(x,y)).

    x is the origin and y sits at distance ``rho_xy``; z runs over geodesic
    polar coordinates (r, theta) about x with dmu = sinh r dr dtheta.  K_s
    at arbitrary distances comes from a spline of log K_s on a fine grid.

    Returns
    -------
    (lhs, rhs, rel_err)
    """
    r_max_t = t + np.sqrt(t * t + 156.0 * t) + 1.0
    r_max_s = s + np.sqrt(s * s + 156.0 * s) + 1.0
    grid = np.linspace(0.0, r_max_s + rho_xy + r_max_t, 1200)
    ks = heat_kernel_radial(grid, s)
    floor = 1e-300
    spline = CubicSpline(grid, np.log(np.maximum(ks, floor)))
    edges = np.linspace(0.0, r_max_t, n_r // 16 + 1)
    rs, wr = zip(*(gauss_legendre(16, a, b) for a, b in zip(edges[:-1], edges[1:])))
    r, wr = np.concatenate(rs), np.concatenate(wr)
    # theta in (0, pi), doubled by symmetry
    th, wt = gauss_legendre(n_theta, 0.0, np.pi)
    kt = heat_kernel_radial(r, t)
    cosh_d = np.cosh(r)[:, None] * np.cosh(rho_xy) - np.sinh(r)[:, None] * np.sinh(rho_xy) * np.cos(th)[None, :]
    d = np.arccosh(np.maximum(cosh_d, 1.0))
    inner = 2.0 * np.exp(spline(d)) @ wt
    lhs = float(np.sum(wr * np.sinh(r) * kt * inner))
    rhs = float(heat_kernel_radial(rho_xy, t + s))
    return lhs, rhs, abs(lhs - rhs) / abs(rhs)
