"""Verification suites: each identity becomes a record (lhs, rhs, rel_err, tol, pass).

Suites: algebra, brachistochrone, metric, eigen, bridges, whipple,
completeness, composition, kernel.  Tolerances default to the values in
``DEFAULT_TOLERANCES`` and can be overridden per key.
"""

import time
from dataclasses import asdict, dataclass, field
from typing import List

import numpy as np

from . import brachistochrone as br
from . import geometry as geo
from . import kernels as ker
from .mat2 import check_algebra, max_error, su11_generators
from .specfun import bessel_k_imag, conical_p, conical_q, ode_residual, whittaker_w
from .transforms import (bridge_conical_macdonald, bridge_macdonald, bridge_whittaker,
                         kontorovich_lebedev_roundtrip, mehler_fock_roundtrip, whipple_check,
                         whipple_constant)

__all__ = ["Record", "VerificationReport", "SUITES", "DEFAULT_TOLERANCES", "run_suite",
           "mf_test_functions"]

DEFAULT_TOLERANCES = {
    "algebra": 1e-15,
    "evolution": 1e-12,
    "trajectory": 1e-8,
    "invariant": 1e-8,
    "metric": 1e-6,
    "eigen": 1e-7,
    "bridge": 1e-5,
    "bridge_exact": 1e-10,
    "whipple": 1e-6,
    "completeness": 1e-3,
    "composition": 1e-3,
    "composition_exact": 1e-6,
    "symmetry": 1e-10,
    "kernel_oracle": 1e-4,
    "mass": 1e-4,
    "semigroup": 1e-3,
}


@dataclass
class Record:
    anchor: str
    param: str
    lhs: float
    rhs: float
    rel_err: float
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.lhs, self.rhs, self.rel_err = float(self.lhs), float(self.rhs), float(self.rel_err)
        self.passed = bool(np.isfinite(self.rel_err) and self.rel_err < self.tol)

    def as_dict(self):
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerificationReport:
    suite: str
    records: List[Record]
    wall_ms: float

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _algebra(tol, cfg):
    errs = check_algebra(su11_generators())
    return [Record("SU(1,1) algebra", k, v, 0.0, v, tol["algebra"]) for k, v in errs.items()]


_TS_GRID = [(0.4, -0.3), (1.0, 0.0), (0.0, 0.7), (-0.5, 0.25), (1.5, 1.2)]


def _brachistochrone(tol, cfg):
    omega, R = cfg.get("omega", 0.5), cfg.get("R", 1.0)
    recs = []
    for t, s in _TS_GRID:
        U = br.continue_to_hyperbolic(t, s, 1.1)
        prod = br.continue_to_hyperbolic(t, 0, 1.1) @ br.continue_to_hyperbolic(0, s, 1.1)
        e = max_error(prod, U)
        recs.append(Record("U(t,s)=U(t,0)U(0,s)", f"t={t},s={s}", e, 0.0, e, tol["evolution"]))
    for t, s in _TS_GRID:
        e = max_error(br.w_factorization(t, s, 1.1), br.continue_to_hyperbolic(t, s, 1.1))
        recs.append(Record("W(it)W^dagger(-is)=e^-phi w2(phi)", f"t={t},s={s}", e, 0.0, e, tol["evolution"]))
    st = br.BrachistochroneState(br.hamiltonian_hyperbolic(0, omega, R), br.constraint(-omega), 0.0)
    traj = br.integrate_brachistochrone(st, 1.0, 1024)
    e = max_error(traj.H[-1], br.hamiltonian_hyperbolic(1.0, omega, R))
    recs.append(Record("RK4 vs closed form, Omega=-omega", "t=1,steps=1024", e, 0.0, e, tol["trajectory"]))
    recs.append(Record("tr(H^2/2) conserved", "t in [0,1]", traj.drift_h2, 0.0, traj.drift_h2, tol["invariant"]))
    recs.append(Record("tr(HF)=0", "t in [0,1]", traj.drift_hf, 0.0, traj.drift_hf, tol["invariant"]))
    iso = br.isotropy_trace(traj.H[-1]).real
    recs.append(Record("isotropy tr(H^2/2)=-R^2", f"R={R}", iso, -R * R, _rel(iso, -R * R), tol["invariant"]))
    return recs


def _metric(tol, cfg):
    recs = []
    for tau in (0.5, 1.0, 2.0):
        m = geo.fubini_study_metric(tau, 0.3, -0.2, h=1e-5)
        target = 0.25 * np.diag([-1.0, np.sinh(tau) ** 2])
        for (i, j), name in [((0, 0), "g_tautau"), ((1, 1), "g_phiphi"), ((0, 1), "g_tauphi")]:
            v, w = m.g[i, j], target[i, j]
            recs.append(Record("Fubini-Study = Poincare metric", f"{name},tau={tau}", v, w,
                               abs(v - w) / max(abs(w), 1.0), tol["metric"]))
        v, w = m.F[0, 1].imag, 0.25 * np.sinh(tau)
        recs.append(Record("Im F_tauphi = sinh(tau)/4", f"tau={tau}", v, w, _rel(v, w), tol["metric"]))
    return recs


def _eigen(tol, cfg):
    k, nu = cfg.get("k", 1.0), cfg.get("nu", 1.3)
    recs = []

    def add(name, coeffs, f, pts):
        for x in pts:
            r = ode_residual(coeffs, f, x)
            recs.append(Record(name, f"x={x}", r, 0.0, r, tol["eigen"]))

    c0 = 0.25 + nu * nu
    tau_coeffs = (lambda x: 1.0, lambda x: 1 / np.tanh(x), lambda x: -k * k / np.sinh(x) ** 2 + c0)
    taus = (0.5, 1.0, 1.5, 2.0, 3.0)
    add("conical P, tau form", tau_coeffs, lambda x: conical_p((k, nu), np.cosh(x)).value, taus)
    add("conical Q, tau form", tau_coeffs,
        lambda x: conical_q((k, nu), np.cosh(x), 2 * np.sinh(x / 2) ** 2).value, taus)
    # z form: (nu^2+1)/4 = -(d)(d+1) for degree d = i nu/2 - 1/2
    c = (nu * nu + 1) / 4
    z_coeffs = (lambda z: z * z - 1, lambda z: 2 * z, lambda z: c - k * k / (z * z - 1))
    zs = (1.5, 2.0, 3.0, 5.0, 8.0)
    add("conical P, z form", z_coeffs, lambda z: conical_p((k, nu / 2), z).value, zs)
    add("conical Q, z form", z_coeffs, lambda z: conical_q((k, nu / 2), z, z - 1).value, zs)
    ps = (0.5, 1.0, 2.0, 3.0, 5.0)
    add("Whittaker W_{-k,i nu/2}(2p)/p", (lambda p: p * p, lambda p: 2 * p, lambda p: c - 2 * p * k - p * p),
        lambda p: whittaker_w(-k, 0.5j * nu, 2 * p).value / p, ps)
    add("Macdonald p^{k-1/2} K_{i nu/2}(p)",
        (lambda p: p * p, lambda p: (2 - 2 * k) * p, lambda p: k * (k - 1) + c - p * p),
        lambda p: p ** (k - 0.5) * bessel_k_imag(nu / 2, p).value, ps)
    q = geo.liouville_normal_form(k, nu)
    add("Liouville normal form", (lambda x: 1.0, lambda x: 0.0, q),
        lambda x: np.sqrt(np.sinh(x)) * conical_p((k, nu), np.cosh(x)).value, taus)
    return recs


def _bridges(tol, cfg):
    recs = []
    for kk in (0.0, 0.25, 0.5):
        for a in (0.5, 1.0, 2.0):
            r = bridge_whittaker(kk, 1.0, a)
            recs.append(Record("GR 7.141.5 (Whittaker)", f"k={kk},nu=1,a={a}", r.lhs, r.rhs, r.rel_err, tol["bridge"]))
    for mu, deg in ((0.0, 0.5), (0.5, 1.0), (-0.5, 1.5)):
        for a in (0.5, 1.0, 2.0):
            r = bridge_macdonald(mu, deg, a)
            recs.append(Record("GR 7.142.1 (Macdonald)", f"mu={mu},nu={deg},a={a}", r.lhs, r.rhs, r.rel_err,
                               tol["bridge"]))
    for lam in (0.25, 0.5, 1.0):
        for a in (0.5, 1.0, 2.0):
            r = bridge_conical_macdonald(lam, 1.0, a)
            recs.append(Record("conical-to-Macdonald", f"lam={lam},nu=1,a={a}", r.lhs, r.rhs, r.rel_err,
                               tol["bridge"]))
    r = bridge_macdonald(0.0, 0.0, 1.0)
    recs.append(Record("GR 7.142.1 trivial anchor", "mu=0,nu=0,a=1", r.lhs, np.exp(-1.0),
                       _rel(r.lhs, np.exp(-1.0)), tol["bridge_exact"]))
    r = bridge_whittaker(0.0, -0.5j, 1.0)
    recs.append(Record("GR 7.141.5 trivial anchor", "k=0,degree=0,a=1", r.lhs.real, np.exp(-1.0),
                       _rel(r.lhs.real, np.exp(-1.0)), tol["bridge_exact"]))
    return recs


def _whipple(tol, cfg):
    tau = np.linspace(0.15, 2.9, 16)
    recs = []
    for k, rho in ((1.0, 1.0), (0.0, 2.0)):
        w = whipple_check(k, rho, tau)
        recs.append(Record("Whipple ratio constancy", f"k={k},rho={rho}", w.max_deviation, 0.0,
                           w.max_deviation, tol["whipple"]))
        ref = whipple_constant(k, rho)
        recs.append(Record("Whipple constant closed form", f"k={k},rho={rho}", abs(w.fitted_constant), abs(ref),
                           abs(w.fitted_constant - ref) / abs(ref), tol["whipple"]))
    return recs


def mf_test_functions():
    """Test functions for the Mehler-Fock round trip: name -> (f, support)."""
    def gauss(x):
        return np.exp(-4.0 * (np.arccosh(x) - 2.0) ** 2)

    def bump(x):
        t = (2.0 * np.arccosh(x) - 3.5) / 2.5
        out = np.zeros_like(x)
        m = np.abs(t) < 1
        out[m] = np.exp(-1.0 / (1.0 - t[m] ** 2))
        return out

    return {"gauss": (gauss, (1.0, float(np.cosh(4.5)))),
            "bump": (bump, (float(np.cosh(0.5)), float(np.cosh(3.0)))),
            "exp": (lambda x: np.exp(-2.0 * x), (1.0, 6.0))}


def _completeness(tol, cfg):
    fns = mf_test_functions()
    recs = []
    for mu in (0.0, 0.5):
        for name in ("gauss", "bump"):
            f, sup = fns[name]
            e, _, _ = mehler_fock_roundtrip(f, mu, sup)
            recs.append(Record("Mehler-Fock completeness", f"f={name},mu={mu}", e, 0.0, e, tol["completeness"]))
    f, sup = fns["exp"]
    e, _, _ = mehler_fock_roundtrip(f, 0.5, sup)
    recs.append(Record("Mehler-Fock completeness", "f=exp(-2x)1[1,6],mu=0.5", e, 0.0, e, tol["completeness"]))
    e, _, _ = kontorovich_lebedev_roundtrip(lambda a: a * np.exp(-a * a))
    recs.append(Record("Kontorovich-Lebedev inversion", "g=a exp(-a^2)", e, 0.0, e, tol["completeness"]))
    return recs


def _composition(tol, cfg):
    recs = []
    for lam in (0.5, 1.0, 1.5):
        for a, b in ((1.0, 1.0), (1.0, 2.0), (2.0, 3.0)):
            r = ker.composition_formula(lam, a, b)
            recs.append(Record("composition formula", f"lam={lam},a={a},b={b}", r.lhs, r.rhs, r.rel_err,
                               tol["composition"]))
    r = ker.composition_formula(0.5, 1.0, 1.0)
    exact = np.pi**2 / 4 * np.exp(-2.0)
    recs.append(Record("composition rhs closed form", "lam=0.5,a=b=1", r.rhs, exact, _rel(r.rhs, exact),
                       tol["composition_exact"]))
    r1, r2 = ker.composition_formula(1.0, 1.0, 2.0), ker.composition_formula(1.0, 2.0, 1.0)
    recs.append(Record("composition symmetry", "lam=1,(a,b)=(1,2)", r1.lhs, r2.lhs, _rel(r1.lhs, r2.lhs),
                       tol["symmetry"]))
    return recs


def _kernel(tol, cfg):
    recs = []
    for rho, t in ((0.5, 0.25), (1.0, 0.5), (2.0, 1.0), (3.0, 2.0)):
        a, b = ker.heat_kernel_radial(rho, t), ker.heat_kernel_mckean(rho, t)
        recs.append(Record("heat kernel spectral vs McKean", f"rho={rho},t={t}", a, b, _rel(a, b),
                           tol["kernel_oracle"]))
    m = ker.heat_kernel_mass(0.5)
    recs.append(Record("heat kernel mass", "t=0.5", m, 1.0, abs(m - 1.0), tol["mass"]))
    lhs, rhs, e = ker.semigroup_check(0.3, 0.5, 1.0)
    recs.append(Record("heat semigroup", "t=0.3,s=0.5,rho=1", lhs, rhs, e, tol["semigroup"]))
    n = int(cfg.get("n_paths", 100_000))
    seed = int(cfg.get("seed", 0))
    ps = ker.brownian_sampler(0.0, 0.5, n, 5e-4, seed)
    d = ker.ks_distance(ps.tau, ker.endpoint_cdf(0.5))
    recs.append(Record("Brownian endpoints KS", f"t=0.5,n={n},seed={seed}", d, 0.0, d, 3.0 / np.sqrt(n)))
    return recs


SUITES = {
    "algebra": _algebra,
    "brachistochrone": _brachistochrone,
    "metric": _metric,
    "eigen": _eigen,
    "bridges": _bridges,
    "whipple": _whipple,
    "completeness": _completeness,
    "composition": _composition,
    "kernel": _kernel,
}


def run_suite(name, tolerance_overrides=None, **cfg):
    """Run one suite.

    Parameters
    ----------
    name : str
        One of ``SUITES``.
    tolerance_overrides : dict, optional
        Keys of ``DEFAULT_TOLERANCES`` mapped to new values.
    **cfg
        Suite parameters (e.g. ``seed``, ``n_paths`` for ``kernel``).

    Returns
    -------
    VerificationReport
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    tol = dict(DEFAULT_TOLERANCES)
    for key, val in (tolerance_overrides or {}).items():
        if key not in tol:
            raise KeyError(f"unknown tolerance key {key!r}")
        tol[key] = float(val)
    start = time.perf_counter()
    recs = SUITES[name](tol, cfg)
    return VerificationReport(name, recs, 1e3 * (time.perf_counter() - start))
