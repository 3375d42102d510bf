import mpmath as mp
import numpy as np
import pytest

from hypdiff.specfun import DomainError
from hypdiff.transforms import (ConjugationMismatch, QuadratureSpec, TransformResult, bridge_conical_macdonald,
                                bridge_macdonald, bridge_whittaker, gauss_legendre, kl_exponential_reference,
                                kl_weight, kontorovich_lebedev, kontorovich_lebedev_roundtrip,
                                legendre_operator_conjugation, mehler_fock, mehler_fock_roundtrip,
                                mehler_fock_weight, quad, tanh_sinh, whipple_check, whipple_constant)


# ---------------------------------------------------------------- quadrature

def test_gauss_legendre_exact_for_polynomials():
    x, w = gauss_legendre(8, -1.0, 2.0)
    assert np.sum(w * x ** 15) == pytest.approx((2.0 ** 16 - 1) / 16, rel=1e-13)


def test_quad_semi_infinite_and_vector_valued():
    assert quad(lambda x: np.exp(-x * x), 0, np.inf).value == pytest.approx(np.sqrt(np.pi) / 2, rel=1e-12)
    v = quad(lambda x: np.array([np.sin(x), np.cos(x)]), 0, np.pi).value
    assert np.allclose(v, [2.0, 0.0], atol=1e-12)


def test_tanh_sinh_endpoint_singularities():
    spec = QuadratureSpec(endpoint_singularity="inverse_sqrt")
    assert tanh_sinh(lambda x: 1 / np.sqrt(x), 0, 1, spec).value == pytest.approx(2.0, rel=1e-12)
    r = quad(lambda x: np.log(x) * np.exp(-x), 0, np.inf, QuadratureSpec(endpoint_singularity="log"))
    assert r.value == pytest.approx(-np.euler_gamma, rel=1e-10)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=0)
    with pytest.raises(ValueError):
        QuadratureSpec(endpoint_singularity="bogus")


# ---------------------------------------------------------------- Mehler-Fock

def test_mehler_fock_weight_matches_mpmath():
    p, mu = 2.3, 0.4
    ref = float(p * mp.sinh(mp.pi * p) * abs(mp.gamma(mu + 1j * p)) ** 2 / mp.pi)
    assert mehler_fock_weight(p, mu) == pytest.approx(ref, rel=1e-12)
    # mu = 1/2: p tanh(pi p)
    assert mehler_fock_weight(p, 0.5) == pytest.approx(p * np.tanh(np.pi * p), rel=1e-12)


def test_mehler_fock_forward_closed_form():
    # mu = 1/2: kernel P_{ip-1/2}(x), measure dx
    f = lambda x: np.exp(-2 * x)  # noqa: E731
    p = np.array([0.5, 1.5])
    r = mehler_fock(f, 0.5, p, support=(1.0, 30.0))
    assert isinstance(r, TransformResult) and r.values.shape == (2,)
    for pi, vi in zip(p, r.values):
        ref = mp.quad(lambda x: mp.exp(-2 * x) * mp.re(mp.legenp(-0.5 + 1j * pi, 0, x, type=3)), [1, 2, 6, 30])
        assert vi == pytest.approx(float(ref), rel=1e-8)
    assert r.table.shape == (2, 3)


def test_mehler_fock_roundtrip_gaussian():
    f = lambda x: np.exp(-4 * (np.arccosh(x) - 2) ** 2)  # noqa: E731
    err, x, rec = mehler_fock_roundtrip(f, 0.0, (1.0, np.cosh(4.5)))
    assert err < 1e-3
    assert x.shape == rec.shape


# ---------------------------------------------------------------- Kontorovich-Lebedev

def test_kl_forward_exponential_closed_form():
    beta = 0.7
    nu = np.array([0.3, 1.0, 2.5])
    r = kontorovich_lebedev(lambda a: a * np.exp(-a * np.cosh(beta)), nu)
    assert np.allclose(r.values, kl_exponential_reference(nu, beta), rtol=1e-10, atol=0)


def test_kl_weight_and_roundtrip():
    assert kl_weight(1.0) == pytest.approx(2 / np.pi ** 2 * np.sinh(np.pi), rel=1e-14)
    err, _, _ = kontorovich_lebedev_roundtrip(lambda a: a * np.exp(-a * a))
    assert err < 1e-6


# ---------------------------------------------------------------- bridges

@pytest.mark.parametrize("k,nu,a", [(0.0, 1.0, 1.0), (0.5, 2.0, 2.0), (-0.5, 0.5, 0.7)])
def test_bridge_whittaker(k, nu, a):
    assert bridge_whittaker(k, nu, a).rel_err < 1e-5


@pytest.mark.parametrize("mu,deg,a", [(0.0, 1.0, 1.0), (0.5, 0.3, 2.0), (-0.5, 2.0, 3.0)])
def test_bridge_macdonald(mu, deg, a):
    assert bridge_macdonald(mu, deg, a).rel_err < 1e-5


def test_bridge_trivial_anchor_exact():
    r = bridge_macdonald(0.0, 0.0, 1.0)
    assert r.lhs == pytest.approx(np.exp(-1.0), rel=1e-10)


@pytest.mark.parametrize("lam,nu,a", [(0.5, 1.0, 1.0), (1.0, 2.0, 2.0)])
def test_bridge_conical_macdonald(lam, nu, a):
    assert bridge_conical_macdonald(lam, nu, a).rel_err < 1e-5


def test_bridge_domain_checks():
    with pytest.raises(DomainError):
        bridge_whittaker(1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        bridge_macdonald(0.0, 1.0, -1.0)


# ---------------------------------------------------------------- Whipple, conjugation

@pytest.mark.parametrize("k,rho", [(0.0, 2.0), (0.5, 1.0), (0.3, 0.7)])
def test_whipple_first_relation_constant(k, rho):
    tau = np.linspace(0.2, 2.8, 12)
    w = whipple_check(k, rho, tau)
    assert w.max_deviation < 1e-6
    assert abs(w.fitted_constant - whipple_constant(k, rho)) < 1e-8 * abs(whipple_constant(k, rho))


def test_whipple_variants():
    tau = np.linspace(0.2, 2.8, 12)
    assert whipple_check(0.3, 0.7, tau, "first_plus_order").max_deviation > 1e-3
    assert whipple_check(0.3, 0.7, tau, "second_reflected").max_deviation < 1e-6
    assert whipple_check(1.0, 0.7, tau, "second").max_deviation < 1e-6
    with pytest.raises(DomainError):
        whipple_check(0.0, 1.0, [0.5, 1.0])


@pytest.mark.parametrize("mode", ["whittaker_premultiplier", "macdonald_premultiplier"])
def test_legendre_operator_conjugation(mode):
    r = legendre_operator_conjugation(0.4, mode, lambda z: np.exp(-z) * z, 1.8, nu=1.0)
    assert r.rel_err < 1e-6


def test_conjugation_mismatch_raises():
    with pytest.raises(ConjugationMismatch):
        legendre_operator_conjugation(0.4, "whittaker_premultiplier", np.exp, 1.8, tol=1e-30)
