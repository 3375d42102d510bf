"""Hyperbolic diffusion toolkit: SU(1,1) brachistochrones, hyperbolic geometry,
conical special functions, index transforms and heat kernels on H^2."""

from . import brachistochrone, geometry, kernels, mat2, specfun, transforms, verify
from .specfun import bessel_k_imag, conical_p, conical_q, whittaker_w
from .kernels import greens_function, heat_kernel_radial
from .verify import run_suite

__version__ = "0.1.0"

__all__ = ["brachistochrone", "geometry", "kernels", "mat2", "specfun", "transforms", "verify",
           "bessel_k_imag", "conical_p", "conical_q", "whittaker_w", "greens_function",
           "heat_kernel_radial", "run_suite", "__version__"]
