"""Quadrature and integral transforms."""

from .quadrature import QuadratureError, QuadratureSpec, QuadResult, gauss_legendre, quad, tanh_sinh
from .result import TransformResult
from .mehler_fock import mehler_fock, mehler_fock_roundtrip, mehler_fock_weight
from .kontorovich_lebedev import (kl_exponential_reference, kl_weight, kontorovich_lebedev,
                                  kontorovich_lebedev_roundtrip)
from .bridges import BridgeResult, bridge_conical_macdonald, bridge_macdonald, bridge_whittaker
from .whipple import RELATIONS, WhippleResult, whipple_check, whipple_constant
from .conjugation import (ConjugationMismatch, ConjugationResult, conjugated_coefficients,
                          legendre_operator, legendre_operator_conjugation)
