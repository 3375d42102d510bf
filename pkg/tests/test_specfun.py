import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypdiff.specfun import (ConicalIndex, DomainError, EvalResult, PoleError, SpectralPoint, bessel_i_imag,
                             bessel_k_imag, conical_p, conical_q, gamma_complex, gamma_modulus_sq,
                             hyp2f1_regularized, legendre_p, legendre_q, loggamma_complex, ode_residual, rgamma,
                             whittaker_m, whittaker_w)
from oracles.values import BESSEL_K_IMAG, CONICAL_P, CONICAL_Q, GAMMA, WHITTAKER_W


def rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------- frozen oracle values

@pytest.mark.parametrize("z,ref", GAMMA)
def test_gamma_complex_oracle(z, ref):
    assert rel(gamma_complex(z), ref) < 1e-12


@pytest.mark.parametrize("nu,x,ref", BESSEL_K_IMAG)
def test_bessel_k_imag_oracle(nu, x, ref):
    r = bessel_k_imag(nu, x)
    assert abs(r.value - ref) <= 1e-12 * max(abs(ref), np.exp(-np.pi * nu / 2) * 1e-3)


@pytest.mark.parametrize("mu,nu,z,ref", CONICAL_P)
def test_conical_p_oracle(mu, nu, z, ref):
    assert rel(conical_p((mu, nu), z).value, ref) < 1e-11


@pytest.mark.parametrize("mu,nu,z,ref", CONICAL_Q)
def test_conical_q_oracle(mu, nu, z, ref):
    assert rel(conical_q((mu, nu), z).value, ref) < 1e-11


@pytest.mark.parametrize("kappa,m,z,ref", WHITTAKER_W)
def test_whittaker_w_oracle(kappa, m, z, ref):
    assert rel(complex(whittaker_w(kappa, m, z).value).real, ref) < 1e-11


# ---------------------------------------------------------------- anchors

def test_cli_anchor_values():
    assert bessel_k_imag(0, 1).value == pytest.approx(0.4210244382, abs=1e-10)
    assert conical_p((0, 0), 1.000001).value == pytest.approx(1.0, abs=1e-6)
    assert whittaker_w(0, 0.5, 2).value == pytest.approx(np.exp(-1), rel=1e-13)


def test_conical_p_half_order_closed_form():
    # P^{1/2}_{i nu - 1/2}(cosh xi) = sqrt(2 / (pi sinh xi)) cos(nu xi)
    xi, nu = np.linspace(0.1, 4.0, 25), 1.7
    v = conical_p((0.5, nu), np.cosh(xi)).value
    assert np.max(np.abs(v - np.sqrt(2 / (np.pi * np.sinh(xi))) * np.cos(nu * xi))) < 1e-12


def test_conical_p_uses_offset_near_one():
    zm1 = 1e-12
    a = conical_p((0.3, 2.0), 1 + zm1, zm1=zm1).value
    with mp.workdps(40):
        ref = float(mp.re(mp.legenp(-0.5 + 2j, 0.3, mp.mpf(1) + mp.mpf(zm1), type=3)))
    assert rel(a, ref) < 1e-9


def test_conical_p_grid_matches_pointwise():
    z = np.array([1.1, 2.0, 7.0, 40.0])
    grid = conical_p((0.25, 3.0), z)
    assert grid.value.shape == (4,)
    for zi, vi in zip(z, grid.value):
        assert vi == pytest.approx(conical_p((0.25, 3.0), zi).value, rel=1e-12)


@settings(max_examples=25, deadline=None)
@given(mu=st.floats(-1.0, 1.5), nu=st.floats(0.0, 10.0), xi=st.floats(0.05, 4.0))
def test_conical_p_matches_mpmath(mu, nu, xi):
    z = float(np.cosh(xi))
    ref = complex(mp.legenp(-0.5 + 1j * nu, mu, z, type=3))
    r = conical_p((mu, nu), z)
    assert abs(r.value - ref.real) <= 1e-9 * max(abs(ref), 1e-3 * abs(mp.gamma(1 - mu)) ** -1 if mu < 1 else 1)


def test_conical_p_is_real_and_reports_error():
    r = conical_p(ConicalIndex(0.5, 4.0), 3.0)
    assert isinstance(r, EvalResult)
    assert np.isrealobj(r.value) and 0 <= r.est_error < 1e-10
    assert r.method


@settings(max_examples=25, deadline=None)
@given(mu=st.floats(-0.9, 1.4), deg=st.floats(-2.0, 2.0), z=st.floats(1.05, 20.0))
def test_legendre_real_degree_matches_mpmath(mu, deg, z):
    p = legendre_p(mu, deg, z).value
    ref = complex(mp.legenp(deg, mu, z, type=3))
    assert abs(p - ref) <= 1e-9 * max(1.0, abs(ref))


def test_legendre_q_complex_order():
    v = legendre_q(0.5j, 0.3 - 0.5, 1.7).value
    ref = complex(mp.legenq(-0.2, 0.5j, 1.7, type=3))
    assert rel(v, ref) < 1e-10


def test_bessel_k_imag_scaling_and_symmetry():
    x = np.array([0.5, 1.0, 3.0])
    assert np.allclose(bessel_k_imag(2.0, x).value, bessel_k_imag(-2.0, x).value, rtol=1e-14, atol=0)
    a = bessel_k_imag(1.0, 4.0, method="contour").value
    b = float(mp.re(mp.besselk(1j, 4)))
    assert rel(a, b) < 1e-12


def test_bessel_i_imag_matches_mpmath():
    v = bessel_i_imag(1.5, 2.0).value
    ref = complex(mp.besseli(1.5j, 2))
    assert rel(v, ref) < 1e-11


def test_whittaker_m_matches_mpmath():
    v = whittaker_m(0.3, 0.7j, 2.5).value
    ref = complex(mp.whitm(0.3, 0.7j, 2.5))
    assert rel(v, ref) < 1e-11


def test_hyp2f1_regularized_at_nonpositive_c():
    # at c = -n: 2F1/Gamma(c) = (a)_{n+1} (b)_{n+1} / (n+1)! x^{n+1} 2F1(a+n+1, b+n+1; n+2; x)
    a, b, x = 0.5 + 1j, 1.2, 0.3
    v, _ = hyp2f1_regularized(a, b, -1.0, x)
    ref = complex(mp.rf(a, 2) * mp.rf(b, 2) / 2 * x ** 2 * mp.hyp2f1(a + 2, b + 2, 3, x))
    assert rel(complex(v), ref) < 1e-12


def test_gamma_helpers():
    z = 0.3 + 2.2j
    assert rel(np.exp(loggamma_complex(z)), complex(mp.gamma(z))) < 1e-12
    assert rel(rgamma(z), 1 / complex(mp.gamma(z))) < 1e-12
    assert rgamma(-3.0) == 0
    assert rel(gamma_modulus_sq(0.5, 3.0), np.pi / np.cosh(3 * np.pi)) < 1e-12


def test_domain_errors():
    with pytest.raises(DomainError):
        conical_p((0, 1), 0.5)
    with pytest.raises(DomainError):
        bessel_k_imag(1, -1.0)
    with pytest.raises(DomainError):
        whittaker_w(0, 0.5, -1.0)
    with pytest.raises(PoleError):
        gamma_complex(-2)


def test_spectral_point_branches():
    assert SpectralPoint(2.0, 0).E == pytest.approx(4.25)
    assert SpectralPoint(2.0, 0, "minus").E == pytest.approx(3.75)


def test_ode_residual_conical_and_bad_step():
    mu, nu = 0.3, 2.0
    # (1 - z^2) u'' - 2 z u' + (deg(deg+1) - mu^2/(1-z^2)) u = 0, deg = i nu - 1/2
    deg = 1j * nu - 0.5
    coeffs = (lambda z: 1 - z * z, lambda z: -2 * z, lambda z: deg * (deg + 1) - mu * mu / (1 - z * z))
    f = lambda z: conical_p((mu, nu), z).value  # noqa: E731
    assert ode_residual(coeffs, f, 2.0) < 1e-7
    with pytest.raises(ValueError):
        ode_residual(coeffs, f, 2.0, h=1.0)


def test_conical_q_decay_rate():
    # |Q^{1/2}_{i nu - 1/2}(cosh xi)| = sqrt(pi / (2 sinh xi)), so |Q| ~ z^{-1/2}: |Q(50)|/|Q(10)| ~ 0.446
    xi = np.arccosh(np.array([10.0, 50.0, 1000.0]))
    q = np.abs(conical_q((0.5, 2.0), np.cosh(xi)).value)
    assert np.allclose(q, np.sqrt(np.pi / (2 * np.sinh(xi))), rtol=1e-11)
    assert q[1] / q[0] == pytest.approx(np.sqrt(np.sinh(xi[0]) / np.sinh(xi[1])), rel=1e-11)
    assert q[1] / q[0] > 0.4
