"""Independent reference implementations used as test oracles.

These deliberately avoid the production code paths: window fits are
solved with explicit normal equations (the package itself uses an SVD
route), moments come from direct window means, and the return clip is a
second straightforward implementation of the same rule.
"""
import statistics

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def _scaled_basis(w, degree):
    tau = np.arange(-(w - 1), 1, dtype=float)
    scale = float(max(w - 1, 1))
    powers = np.arange(degree + 1)
    return (tau / scale)[:, None] ** powers, scale, powers


def normal_equations_fit(values, degree):
    """Single-window polynomial fit via an explicit normal-equations solve."""
    v = np.asarray(values, dtype=float)
    basis, scale, powers = _scaled_basis(v.size, degree)
    gram = basis.T @ basis
    rhs = basis.T @ v
    return np.linalg.solve(gram, rhs) / scale ** powers


def normal_equations_trend(values, window, degree, policy="grow"):
    """Per-window normal-equations coefficients for a whole series.

    Returns ``(coeffs, defined)`` with ``coeffs[k, t]`` the k-th
    coefficient of the trailing window ending at ``t`` (grow or mark
    warm-up semantics, matching the estimator contract).
    """
    v = np.asarray(values, dtype=float)
    n = v.size
    coeffs = np.zeros((degree + 1, n))
    defined = np.zeros(n, dtype=bool)
    if n >= window:
        basis, scale, powers = _scaled_basis(window, degree)
        gram = basis.T @ basis
        rhs = sliding_window_view(v, window) @ basis
        sol = np.linalg.solve(gram, rhs.T)
        coeffs[:, window - 1:] = sol / (scale ** powers)[:, None]
        defined[window - 1:] = True
    if policy == "grow":
        for t in range(degree, min(window - 1, n)):
            coeffs[:, t] = normal_equations_fit(v[:t + 1], degree)
            defined[t] = True
    return coeffs, defined


def window_mean_moments(x, y, window):
    """Grow-window sample covariance from direct window means.

    ``cov[t] = mean(xy) - mean(x) * mean(y)`` over the trailing window
    ending at ``t`` (population style, no n-1 correction).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.size
    cov = np.zeros(n)
    for t in range(n):
        w = min(window, t + 1)
        xs = x[t - w + 1:t + 1]
        ys = y[t - w + 1:t + 1]
        cov[t] = (xs * ys).mean() - xs.mean() * ys.mean()
    return cov


def clip_oracle(values, defined, multiple, window):
    """Second implementation of the adaptive median/MAD clip rule."""
    values = np.asarray(values, dtype=float)
    n = values.size
    out = values.copy()
    flags = np.zeros(n, dtype=bool)
    for t in range(n):
        if not defined[t]:
            continue
        lo = max(0, t - window)
        prev = [values[i] for i in range(lo, t) if defined[i]]
        if len(prev) < 3:
            continue
        med = statistics.median(prev)
        mad = statistics.median([abs(p - med) for p in prev])
        if mad == 0.0:
            new = med
        else:
            new = min(max(values[t], med - multiple * mad),
                      med + multiple * mad)
        if new != values[t]:
            out[t] = new
            flags[t] = True
    return out, flags


def gbm_prices(n, drift, sigma, seed, x0=100.0):
    """Geometric Brownian motion path sampled daily."""
    rng = np.random.default_rng(seed)
    steps = (drift - 0.5 * sigma ** 2) + sigma * rng.standard_normal(n - 1)
    log_price = np.empty(n)
    log_price[0] = np.log(x0)
    log_price[1:] = log_price[0] + np.cumsum(steps)
    return np.exp(log_price)


def fd_slope_ratio(y_vals, x_vals, defined, epsilon):
    """Central-difference slope of the curve (x(t), y(t)).

    Returns ``(ratio, ok)``; ``ok`` is False where either neighbour is
    undefined or the x increment is below ``epsilon``.
    """
    n = y_vals.size
    ratio = np.zeros(n)
    ok = np.zeros(n, dtype=bool)
    for t in range(1, n - 1):
        if not (defined[t - 1] and defined[t + 1]):
            continue
        dx = x_vals[t + 1] - x_vals[t - 1]
        if abs(dx) < 2 * epsilon:
            continue
        ratio[t] = (y_vals[t + 1] - y_vals[t - 1]) / dx
        ok[t] = True
    return ratio, ok
