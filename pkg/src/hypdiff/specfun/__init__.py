"""Special functions with complex order or degree."""

from ._result import DomainError, EvalResult, SpectralPoint
from .gamma import PoleError, gamma_complex, gamma_modulus_sq, loggamma_complex, rgamma
from .hypergeometric import hyp2f1_regularized
from .legendre import ConicalIndex, conical_p, conical_q, legendre_p, legendre_q
from .bessel import bessel_i_imag, bessel_k_imag
from .whittaker import whittaker_m, whittaker_w
from .residual import ode_residual
