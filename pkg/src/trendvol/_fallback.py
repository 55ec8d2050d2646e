"""Pure-NumPy implementation of the sliding-window kernel."""
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def sliding_dot(values, weights):
    """Dot a bank of weight vectors with every trailing window.

    ``out[k, i] = sum_j weights[k, j] * values[i + j]`` for every window
    start ``i`` in ``0 .. len(values) - w``, where ``w = weights.shape[1]``.
    """
    windows = sliding_window_view(values, weights.shape[1])
    return np.ascontiguousarray(windows @ weights.T).T
