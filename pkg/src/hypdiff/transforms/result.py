from dataclasses import dataclass

import numpy as np


@dataclass
class TransformResult:
    """Transform values on a grid of parameters.

    Attributes
    ----------
    grid : ndarray
        Points at which the transform was evaluated (``p``/``nu`` for a
        forward transform, ``x``/``a`` for an inverse one).
    values, est_error : ndarray
        Transform values and error estimates (rule comparison plus any
        propagated input error), same shape as ``grid``.
    truncation_report : float
        Bound on the neglected tail of the truncated integral; 0 when no
        truncation was needed.
    """

    grid: np.ndarray
    values: np.ndarray
    est_error: np.ndarray
    truncation_report: float = 0.0

    @property
    def table(self):
        """Rows of (parameter, value, est_error)."""
        return np.column_stack([self.grid, self.values, self.est_error])
