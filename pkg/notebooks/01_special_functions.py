# %% [markdown]
# # Conical functions, K_{i nu} and Whittaker W
#
# Evaluate the special functions used by the transforms and compare with mpmath.

# %%
import mpmath as mp
import numpy as np

from hypdiff.specfun import bessel_k_imag, conical_p, conical_q, whittaker_w

# %% [markdown]
# ## Conical function P^mu_{i nu - 1/2}(cosh xi)
#
# For mu = 1/2 there is a closed form, sqrt(2 / (pi sinh xi)) cos(nu xi).

# %%
xi = np.linspace(0.1, 5.0, 8)
r = conical_p((0.5, 3.0), np.cosh(xi))
closed = np.sqrt(2 / (np.pi * np.sinh(xi))) * np.cos(3.0 * xi)
print("method:", r.method)
print("max |P - closed form|:", np.max(np.abs(r.value - closed)))

# %% [markdown]
# Large nu and large z route to quadrature; the value stays accurate.

# %%
for mu, nu, z in [(0.0, 20.0, 3.0), (0.3, 8.0, 50.0), (1.0, 0.5, 1.0001)]:
    v = conical_p((mu, nu), z)
    ref = float(mp.re(mp.legenp(-0.5 + 1j * nu, mu, z, type=3)))
    print(f"mu={mu} nu={nu} z={z}: {v.value:+.15e}  rel {abs(v.value - ref) / abs(ref):.1e}  ({v.method})")

# %%
q = conical_q((0.5, 2.0), 1.2)
print("Q^{1/2}_{2i-1/2}(1.2) =", q.value)

# %% [markdown]
# ## Macdonald function of imaginary order
#
# K_{i nu}(x) is real; for x < nu it oscillates with amplitude ~ e^{-pi nu / 2}.

# %%
x = np.array([0.5, 2.0, 10.0, 30.0])
for nu in (0.0, 5.0, 20.0):
    v = bessel_k_imag(nu, x).value
    ref = np.array([float(mp.re(mp.besselk(1j * nu, xx))) for xx in x])
    print(f"nu={nu:5.1f}", np.array2string(v, precision=6), " max abs err", np.max(np.abs(v - ref)))

# %% [markdown]
# ## Whittaker W with imaginary second index

# %%
print(whittaker_w(0.0, 0.5, 2.0).value, np.exp(-1.0))
print(whittaker_w(-0.25, 2j, 5.0).value, complex(mp.whitw(-0.25, 2j, 5)))
