import mpmath as mp
import numpy as np
import pytest

from hypdiff import kernels as ker
from hypdiff.specfun import DomainError
from oracles.values import GREENS, HEAT_KERNEL


@pytest.mark.parametrize("rho,t,ref", HEAT_KERNEL)
def test_heat_kernel_spectral_oracle(rho, t, ref):
    assert ker.heat_kernel_radial(rho, t) == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("rho,t,ref", HEAT_KERNEL)
def test_heat_kernel_mckean_oracle(rho, t, ref):
    assert ker.heat_kernel_mckean(rho, t) == pytest.approx(ref, rel=1e-10)


def test_heat_kernel_vectorized_with_error():
    rho = np.array([0.0, 0.5, 2.0])
    val, err = ker.heat_kernel_radial(rho, 0.7, return_error=True)
    assert val.shape == (3,) and np.all(np.asarray(err) < 1e-10)
    assert np.all(np.diff(val) < 0)


@pytest.mark.parametrize("t", [0.1, 0.5, 2.0])
def test_heat_kernel_mass(t):
    assert ker.heat_kernel_mass(t) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("rho,E,ref", GREENS)
@pytest.mark.parametrize("method", ["spectral", "laplace"])
def test_greens_function_oracle(rho, E, ref, method):
    assert ker.greens_function(rho, E, method) == pytest.approx(ref, rel=1e-10)


def test_composition_exact_case():
    r = ker.composition_formula(0.5, 1.0, 1.0)
    assert r.rhs == pytest.approx(np.pi ** 2 / 4 * np.exp(-2), rel=1e-12)
    assert r.rel_err < 1e-8


def test_composition_against_mpmath():
    lam, a, b = 1.5, 1.0, 2.0
    w = lambda nu: ker.composition_weight(lam, float(nu))  # noqa: E731
    lhs = mp.quad(lambda nu: w(nu) * mp.re(mp.besselk(1j * nu, a)) * mp.re(mp.besselk(1j * nu, b)), [0, 5, 10, 25])
    r = ker.composition_formula(lam, a, b)
    assert r.lhs == pytest.approx(float(lhs), rel=1e-8)
    assert r.rel_err < 1e-8


def test_composition_symmetric_in_a_b():
    assert ker.composition_formula(1.0, 1.0, 2.5).lhs == pytest.approx(ker.composition_formula(1.0, 2.5, 1.0).lhs,
                                                                       rel=1e-12)


def test_brownian_short_time_distance():
    # for small t, rho^2 / (4 t) is close to Exp(1): P(rho < 3 sqrt t) ~ 1 - e^{-9/4}
    t = 0.01
    s = ker.brownian_sampler(0.0, t, 20_000, 1e-4, seed=7)
    frac = np.mean(s.tau < 3 * np.sqrt(t))
    assert frac == pytest.approx(1 - np.exp(-9 / 4), abs=0.015)


def test_brownian_deterministic_and_chunked():
    a = ker.brownian_sampler(0.0, 0.1, 12_000, 1e-3, seed=3)
    b = ker.brownian_sampler(0.0, 0.1, 12_000, 1e-3, seed=3)
    c = ker.brownian_sampler(0.0, 0.1, 10_000, 1e-3, seed=3)
    assert np.array_equal(a.points, b.points)
    assert np.array_equal(a.points[:10_000], c.points)
    assert a.points.shape == (12_000, 2) and a.dt == pytest.approx(1e-3)


def test_brownian_endpoint_ks_small():
    s = ker.brownian_sampler(0.0, 0.5, 20_000, 1e-3, seed=11)
    d = ker.ks_distance(s.tau, ker.endpoint_cdf(0.5))
    assert d < 3 / np.sqrt(20_000)
    # angle is uniform about the start point
    assert ker.ks_distance(s.points[:, 1], lambda x: (x + np.pi) / (2 * np.pi)) < 3 / np.sqrt(20_000)


def test_brownian_domain_errors():
    with pytest.raises(DomainError):
        ker.brownian_sampler(0.0, 0.5, 100, 1e-3, 0)
    with pytest.raises(DomainError):
        ker.brownian_sampler(0.0, 0.5, 2000, 0.1, 0)


def test_endpoint_cdf_limits():
    F = ker.endpoint_cdf(1.0)
    assert F(0.0) == 0.0
    assert F(F.x[-1]) == pytest.approx(1.0, abs=1e-8)
