# %% [markdown]
# # Mehler-Fock and Kontorovich-Lebedev transforms
#
# Round trips on smooth test functions and the Laplace-transform bridges
# (GR 7.141.5, GR 7.142.1) that connect conical functions to W and K.

# %%
import numpy as np

from hypdiff.transforms import (bridge_conical_macdonald, bridge_macdonald, bridge_whittaker,
                                kl_exponential_reference, kontorovich_lebedev, kontorovich_lebedev_roundtrip,
                                mehler_fock, mehler_fock_roundtrip)

# %% [markdown]
# ## Mehler-Fock round trip
#
# Forward transform on a p grid, then invert with the weight
# (1/pi)|Gamma(ip + mu)|^2 p sinh(pi p), truncated at p = 40.

# %%
gauss = lambda x: np.exp(-4 * (np.arccosh(x) - 2) ** 2)
for mu in (0.0, 0.5):
    err, x, rec = mehler_fock_roundtrip(gauss, mu, (1.0, np.cosh(4.5)))
    print(f"mu={mu}: relative L2 error {err:.2e}")

# %%
F = mehler_fock(gauss, 0.5, [0.5, 1.0, 2.0, 4.0], support=(1.0, np.cosh(4.5)))
print(F.table)

# %% [markdown]
# ## Kontorovich-Lebedev
#
# g(a) = a e^{-a cosh beta} has a closed-form transform.

# %%
beta = 0.9
nu = np.array([0.25, 1.0, 2.0, 4.0])
r = kontorovich_lebedev(lambda a: a * np.exp(-a * np.cosh(beta)), nu)
print("max abs err:", np.max(np.abs(r.values - kl_exponential_reference(nu, beta))))
for nu_max in (15, 30):
    e, _, _ = kontorovich_lebedev_roundtrip(lambda a: a * np.exp(-a * a), nu_max=nu_max)
    print(f"round trip, nu_max={nu_max}: {e:.1e}")

# %% [markdown]
# ## Laplace-transform bridges

# %%
print("GR 7.141.5", bridge_whittaker(0.5, 1.0, 2.0))
print("GR 7.142.1", bridge_macdonald(0.5, 0.3, 2.0))
print("conical -> K_{i nu}", bridge_conical_macdonald(1.0, 2.0, 2.0))
