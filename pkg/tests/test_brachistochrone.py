import numpy as np
import pytest

from hypdiff import brachistochrone as br
from hypdiff.mat2 import SIGMA_Y, expm2, max_error


@pytest.mark.parametrize("t,s", [(0.4, -0.3), (1.0, 0.0), (1.5, 1.2)])
def test_evolution_composition(t, s):
    U = br.continue_to_hyperbolic
    assert max_error(U(t, s, 0.8), U(t, 0, 0.8) @ U(0, s, 0.8)) < 1e-12


def test_continuation_from_spherical():
    for t, s in [(0.3, 0.1), (-1.0, 0.5)]:
        a = br.evolution_spherical(1j * t, 1j * s, 0.6)
        assert max_error(a, br.continue_to_hyperbolic(t, s, 0.6)) < 1e-13


def test_w_factorization_reproduces_propagator():
    for t, s in [(0.4, -0.3), (0.0, 0.7)]:
        assert max_error(br.w_factorization(t, s, 0.5), br.continue_to_hyperbolic(t, s, 0.5)) < 1e-12


def test_hyperbolic_generator_is_exact_and_naive_exponent_is_not():
    e_naive, e_gen = br.continuation_mismatch(1.0, 0.5, 1.0)
    assert e_gen < 1e-13
    assert e_naive > 0.1
    G = br.hyperbolic_generator(0.5)
    assert max_error(expm2(0.8 * G), br.continue_to_hyperbolic(0.8, 0, 0.5)) < 1e-13


def test_hamiltonian_hyperbolic_traceless_and_continued():
    H = br.hamiltonian_hyperbolic(0.7, 0.5, 2.0)
    assert abs(np.trace(H)) < 1e-14
    # H(t) = -i d/dt ... continued spherical Hamiltonian evaluated at i t, up to the sigma_z/sigma_x frame
    Hs = br.hamiltonian_spherical(0.7j, 0.5, 2.0)
    assert abs(br.isotropy_trace(H) - br.isotropy_trace(Hs)) < 1e-12
    with pytest.raises(ValueError):
        br.hamiltonian_hyperbolic(0.0, 0.5, -1.0)


def test_constraint_is_sigma_y():
    assert np.array_equal(br.constraint(-0.5), -0.5 * SIGMA_Y)


def _traj(omega, Omega, steps=1024):
    st = br.BrachistochroneState(br.hamiltonian_hyperbolic(0.0, omega, 1.0), br.constraint(Omega), 0.0)
    return br.integrate_brachistochrone(st, 1.0, steps)


def test_rk4_matches_closed_form_for_omega_minus_omega():
    tr = _traj(0.5, -0.5)
    assert max_error(tr.final.H, br.hamiltonian_hyperbolic(1.0, 0.5, 1.0)) < 1e-8
    assert tr.drift_h2 < 1e-8 and tr.drift_hf < 1e-8
    assert tr.final.t == pytest.approx(1.0)


def test_rk4_wrong_sign_of_Omega_does_not_match():
    tr = _traj(0.5, 0.5)
    assert max_error(tr.final.H, br.hamiltonian_hyperbolic(1.0, 0.5, 1.0)) > 0.5


def test_rk4_fourth_order():
    ref = br.hamiltonian_hyperbolic(1.0, 1.5, 1.0)
    e1 = max_error(_traj(1.5, -1.5, 32).final.H, ref)
    e2 = max_error(_traj(1.5, -1.5, 64).final.H, ref)
    assert 12 < e1 / e2 < 20


def test_isotropy_trace_is_plus_R_squared():
    # tr(H^2/2) = R^2 (cosh^2 - sinh^2) = +R^2 for every t
    for t in (0.0, 0.5, 2.0):
        assert br.isotropy_trace(br.hamiltonian_hyperbolic(t, 0.5, 1.7)) == pytest.approx(1.7 ** 2)


def test_integrator_rejects_few_steps():
    st = br.BrachistochroneState(br.hamiltonian_hyperbolic(0.0, 0.5, 1.0), br.constraint(-0.5), 0.0)
    with pytest.raises(ValueError):
        br.integrate_brachistochrone(st, 1.0, 4)


def test_energy_dispersion_pairings():
    H = br.hamiltonian_hyperbolic(0.3, 0.5, 1.0)
    psi = np.array([np.cosh(0.4), 1j * np.sinh(0.4)])
    ind = br.energy_dispersion(H, psi)
    her = br.energy_dispersion(H, psi, pairing="hermitian")
    assert isinstance(ind, br.DispersionResult)
    assert ind.value >= 0 and her.value >= 0
    assert not np.isclose(ind.radicand, her.radicand)
    with pytest.raises(ValueError):
        br.energy_dispersion(H, psi, pairing="other")
    with pytest.raises(ValueError):
        br.energy_dispersion(H, [1.0, 1.0])  # null vector of the indefinite form
