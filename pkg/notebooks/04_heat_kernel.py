# %% [markdown]
# # Heat kernel on the hyperbolic plane
#
# Spectral (Mehler-Fock) form against the McKean integral, mass and
# semigroup checks, the Green's function, and a Brownian-motion sample.

# %%
import numpy as np

from hypdiff import kernels as ker

# %%
for rho, t in [(0.1, 0.1), (1.0, 1.0), (3.0, 2.0)]:
    a, b = ker.heat_kernel_radial(rho, t), ker.heat_kernel_mckean(rho, t)
    print(f"rho={rho} t={t}: spectral {a:.15e} McKean {b:.15e} rel {abs(a - b) / b:.1e}")
print("mass at t=0.5:", ker.heat_kernel_mass(0.5))

# %%
print("semigroup:", ker.semigroup_check(0.3, 0.5, 1.0))

# %% [markdown]
# ## Green's function
#
# Laplace transform in t of the heat kernel, equal to Q_{s-1/2}(cosh rho)/(2 pi)
# with s = sqrt(E + 1/4).

# %%
print(ker.greens_function(1.0, 2.0), ker.greens_function(1.0, 2.0, method="laplace"))

# %% [markdown]
# ## Brownian motion
#
# 10^5 paths to t = 0.5; the distance from the start point follows the
# radial heat-kernel distribution.

# %%
s = ker.brownian_sampler(0.0, 0.5, 100_000, 1e-3, seed=0)
d = ker.ks_distance(s.tau, ker.endpoint_cdf(0.5))
print(f"KS distance {d:.4f} (limit {3 / np.sqrt(1e5):.4f})")
