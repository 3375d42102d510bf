import numpy as np
import pytest

from hypdiff import geometry as geo


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0])
def test_fubini_study_is_quarter_poincare(tau):
    m = geo.fubini_study_metric(tau, 0.3, -0.2, h=1e-5)
    ref = 0.25 * np.diag([-1.0, np.sinh(tau) ** 2, 0.0])
    assert np.max(np.abs(m.g - ref)) < 1e-6
    assert m.F[0, 1].imag == pytest.approx(0.25 * np.sinh(tau), abs=1e-6)
    assert m.coords == ("tau", "phi", "psi")


def test_fubini_study_argument_checks():
    with pytest.raises(ValueError):
        geo.fubini_study_metric(0.0, 0, 0)
    with pytest.raises(ValueError):
        geo.fubini_study_metric(1.0, 0, 0, h=0.1)


def test_euler_matrix_closed_form_and_determinant():
    a, b, c = geo.euler_factors(0.9, 0.4, -1.3)
    U = geo.euler_matrix(0.9, 0.4, -1.3)
    assert np.allclose(a @ b @ c, U, atol=1e-15)
    assert abs(np.linalg.det(U) - 1) < 1e-14


def test_state_conventions():
    s = geo.state_from_euler(1.0, 0.3, 0.5)
    p = geo.state_from_euler(1.0, 0.3, 0.5, convention="printed")
    assert s.c1 == pytest.approx(np.cosh(0.5) * np.exp(0.5j * (0.3 - 0.5)))
    assert p.c1 == pytest.approx(np.cosh(0.5) * np.exp(0.5j * (0.3 + 0.5)))
    assert abs(s.c1) ** 2 - abs(s.c2) ** 2 == pytest.approx(1.0)
    with pytest.raises(ValueError):
        geo.state_from_euler(-1.0, 0, 0)


def test_projection_trace_and_idempotence():
    P = geo.projection(1.3, 0.2, 0.7)
    assert np.trace(P) == pytest.approx(1.0)
    assert np.allclose(P @ P, P, atol=1e-13)


def test_laplace_beltrami_hyperbolic_plane():
    lb = geo.laplace_beltrami_coeffs(geo.hyperbolic_plane_metric())
    x = np.array([0.8, 0.1])
    assert np.allclose(lb.A(x), [-1.0, 1 / np.sinh(0.8) ** 2])
    assert np.allclose(lb.B(x), [-1 / np.tanh(0.8), 0.0], atol=1e-10)
    # f = cosh(tau): -f'' - coth f' = -2 cosh
    val = lb.apply([np.sinh(0.8), 0.0], [np.cosh(0.8), 0.0], x)
    assert val == pytest.approx(-2 * np.cosh(0.8), rel=1e-10)


def test_laplace_beltrami_pseudosphere_radial_part():
    lb = geo.laplace_beltrami_coeffs(geo.pseudosphere_metric())
    x = np.array([2.0, 0.7, 0.0])
    assert np.allclose(lb.A(x), [1.0, -0.25, -0.25 / np.sinh(0.7) ** 2])
    assert np.allclose(lb.B(x), [1.0, -0.25 / np.tanh(0.7), 0.0], atol=1e-9)


def test_laplace_beltrami_rejects_non_diagonal():
    with pytest.raises(TypeError):
        geo.laplace_beltrami_coeffs(np.eye(2))
    assert np.allclose(geo.laplace_beltrami_coeffs(geo.euclidean_metric(3)).B(np.zeros(3)), 0)


def test_liouville_forms_agree():
    k, xi = 0.7, 1.3
    q = geo.liouville_potential(lambda t: 1 / np.tanh(t), lambda t: -k * k / np.sinh(t) ** 2 + 0.25 + xi * xi)
    qn = geo.liouville_normal_form(k, xi)
    for t in (0.3, 1.0, 2.5):
        assert q(t) == pytest.approx(qn(t), rel=1e-5)  # central difference, O(h^2) with h = 1e-4
