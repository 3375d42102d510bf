# %% [markdown]
# # SU(1,1) brachistochrone and the Poincare metric
#
# The spherical evolution continued to imaginary time, the brachistochrone
# ODE, and the Fubini-Study metric of the coherent states.

# %%
import numpy as np

from hypdiff import brachistochrone as br
from hypdiff import geometry as geo
from hypdiff.mat2 import check_algebra, expm2, max_error, su11_generators

# %% [markdown]
# ## Algebra
#
# With a3 = (i/2) diag(-1, 1) the brackets close exactly; the opposite sign
# of a3 flips every relation.

# %%
print(check_algebra())
print(check_algebra(su11_generators(as_printed=True)))

# %% [markdown]
# ## Continued evolution

# %%
omega = 0.5
U = br.continue_to_hyperbolic(1.0, 0.0, omega)
print("W factorization error:", max_error(br.w_factorization(1.0, 0.0, omega), U))
print("exp(t G) error:", max_error(expm2(br.hyperbolic_generator(omega)), U))
print("exp(-int H) vs propagator (not equal, H(t) does not commute):", br.continuation_mismatch(1.0, omega, 1.0))

# %% [markdown]
# ## Brachistochrone ODE
#
# Only Omega = -omega reproduces the closed-form Hamiltonian.

# %%
for Omega in (-omega, omega):
    st = br.BrachistochroneState(br.hamiltonian_hyperbolic(0.0, omega, 1.0), br.constraint(Omega), 0.0)
    tr = br.integrate_brachistochrone(st, 1.0, 1024)
    err = max_error(tr.final.H, br.hamiltonian_hyperbolic(1.0, omega, 1.0))
    print(f"Omega={Omega:+.1f}: error {err:.1e}, drift tr(H^2/2) {tr.drift_h2:.1e}, tr(HF) {tr.drift_hf:.1e}")
print("tr(H^2/2) =", br.isotropy_trace(br.hamiltonian_hyperbolic(0.3, omega, 1.0)))

# %% [markdown]
# ## Fubini-Study metric

# %%
for tau in (0.5, 1.0, 2.0):
    m = geo.fubini_study_metric(tau, 0.2, 0.1)
    print(tau, np.round(4 * np.diag(m.g), 8), np.sinh(tau) ** 2, m.F[0, 1].imag, np.sinh(tau) / 4)

# %%
lb = geo.laplace_beltrami_coeffs(geo.hyperbolic_plane_metric())
print("A, B at tau=1:", lb.A([1.0, 0.0]), lb.B([1.0, 0.0]), -1 / np.tanh(1.0))
