from typing import NamedTuple

import numpy as np


class EvalResult(NamedTuple):
    """Value of a special function together with an error estimate.

    ``value`` and ``est_error`` may be scalars or arrays of matching shape.
    ``method`` is one of ``"series"``, ``"quadrature"``, ``"recurrence"``
    (or a ``+``-joined combination when a grid mixes methods).
    """

    value: complex
    est_error: float
    method: str


class DomainError(ValueError):
    """Argument outside the supported domain of a special function."""


def _methods(labels):
    labels = np.atleast_1d(labels).ravel()
    uniq = sorted(set(labels.tolist()))
    return "+".join(uniq)


class SpectralPoint(NamedTuple):
    """Continuous spectral parameter ``xi``, Fourier mode ``k`` and eigenvalue.

    ``branch`` selects E = -1/4 + xi^2 (``"minus"``, the Helmholtz form used
    for the coth-argument eigenfunctions) or E = 1/4 + xi^2 (``"plus"``, the
    Laplacian spectrum on the hyperbolic plane).
    """

    xi: float
    k: float
    branch: str = "plus"

    @property
    def E(self):
        return (0.25 if self.branch == "plus" else -0.25) + self.xi * self.xi
