# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled implementation of the sliding-window kernel."""
import numpy as np


def sliding_dot(const double[::1] values, const double[:, ::1] weights):
    """Dot a bank of weight vectors with every trailing window.

    Same contract as the NumPy fallback: ``out[k, i]`` is the dot product
    of ``weights[k]`` with ``values[i : i + w]``.
    """
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = weights.shape[0]
    cdef Py_ssize_t w = weights.shape[1]
    cdef Py_ssize_t count = n - w + 1
    if count < 1:
        raise ValueError("values shorter than the window")
    out = np.empty((m, count), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t k, i, j
    cdef double acc
    for k in range(m):
        for i in range(count):
            acc = 0.0
            for j in range(w):
                acc += weights[k, j] * values[i + j]
            o[k, i] = acc
    return out
