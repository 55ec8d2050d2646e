"""Causal trend and derivative estimation, and the additive decomposition.

Every output sample is produced from a trailing window of past samples
only: the window ending at sample ``t`` is fitted with a least-squares
polynomial in local time ``tau in {-(w-1), ..., -1, 0}`` (``tau = 0`` at
the newest sample, one unit per trading day). The constant coefficient
``c0`` is the trend value at ``t`` and ``c1`` is its per-day derivative,
with no polynomial re-evaluation needed. No future sample ever enters a
fit, so outputs are usable for honest forecasting.

For a fixed window length the coefficient extraction is a linear map of
the window samples, so the whole series reduces to sliding dot products
with precomputed weight vectors (see :mod:`trendvol.kernels`). Window
fits are solved on a rescaled time axis via an orthogonalization method
(SVD); raw normal equations on integer powers lose precision for degree
3 windows of realistic length.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cache

import numpy as np

from . import kernels
from .errors import (
    DegenerateWindow,
    DegreeTooLow,
    InvalidParameter,
    InvalidSeries,
    SeriesTooShort,
)
from .series import SampledSeries, Unit

DEFAULT_WINDOW = 60
DEFAULT_DEGREE = 2


class WarmupPolicy(str, Enum):
    """How to treat samples before a full window is available.

    ``GROW`` shrinks the window at the series start (minimum ``degree+1``
    points); ``MARK`` leaves those samples undefined.
    """

    GROW = "grow"
    MARK = "mark"


@dataclass(frozen=True)
class TrendConfig:
    """Hyperparameters of the windowed-polynomial estimator."""

    window: int = DEFAULT_WINDOW
    degree: int = DEFAULT_DEGREE
    warmup: WarmupPolicy = WarmupPolicy.GROW

    def __post_init__(self):
        if not isinstance(self.window, int) or self.window < 2:
            raise InvalidParameter(f"window must be an int >= 2, got {self.window!r}")
        if not isinstance(self.degree, int) or self.degree < 0:
            raise InvalidParameter(f"degree must be an int >= 0, got {self.degree!r}")
        if self.degree >= self.window:
            raise InvalidParameter(
                f"degree must be below the window length ({self.degree} >= {self.window})")
        object.__setattr__(self, "warmup", WarmupPolicy(self.warmup))


@dataclass(frozen=True)
class DecomposedSeries:
    """Trend, per-day trend derivative, and what the trend leaves behind.

    ``trend + fluctuation`` reproduces the input at every defined sample.
    ``warmup_mask`` is True until a full window backs the fit; under the
    GROW policy such samples are defined but computed on fewer points.
    """

    trend: SampledSeries
    derivative: SampledSeries
    fluctuation: SampledSeries
    warmup_mask: np.ndarray


@cache
def projection_weights(window, degree):
    """Coefficient-extraction weights for one trailing window.

    Row ``k`` dotted with the window samples (oldest first) yields the
    ``k``-th polynomial coefficient of the least-squares fit in local
    time, i.e. the fitted value (k=0) and per-day derivative (k=1) at
    the window's newest point.
    """
    if window < 1:
        raise InvalidParameter("window must be positive")
    if degree < 0:
        raise InvalidParameter("degree must be non-negative")
    if window < degree + 1:
        raise DegenerateWindow(
            f"window of {window} cannot support degree {degree}")
    tau = np.arange(-(window - 1), 1, dtype=np.float64)
    scale = float(max(window - 1, 1))
    powers = np.arange(degree + 1)
    basis = (tau / scale)[:, None] ** powers
    weights = np.linalg.pinv(basis) / scale ** powers[:, None]
    weights = np.ascontiguousarray(weights)
    weights.flags.writeable = False
    return weights


def fit_window(values, degree):
    """Least-squares polynomial coefficients for a single window.

    Fits ``sum_k c_k tau^k`` to ``values`` placed at local times
    ``tau = -(w-1) .. 0`` and returns ``[c0, ..., c_degree]``; ``c0`` is
    the fitted value at the newest sample, ``c1`` its per-day slope.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise InvalidParameter("values must be 1-D")
    if not isinstance(degree, int) or degree < 0:
        raise InvalidParameter(f"degree must be an int >= 0, got {degree!r}")
    w = v.size
    if w < degree + 1:
        raise DegenerateWindow(
            f"{w} samples cannot support a degree-{degree} fit")
    if not np.isfinite(v).all():
        raise InvalidSeries("window values must be finite")
    tau = np.arange(-(w - 1), 1, dtype=np.float64)
    scale = float(max(w - 1, 1))
    powers = np.arange(degree + 1)
    basis = (tau / scale)[:, None] ** powers
    coef, *_ = np.linalg.lstsq(basis, v, rcond=None)
    return coef / scale ** powers


def _suffix_start(mask):
    """Index of the first defined sample; masks must be a leading prefix."""
    undefined = int(mask.sum())
    if undefined and not mask[:undefined].all():
        raise InvalidSeries(
            "undefined samples must form a leading prefix for trend fitting")
    return undefined


def _fit_coefficients(series, config):
    """All window-fit coefficients for a series.

    Returns ``(coeffs, defined, warmup)`` where ``coeffs[k, t]`` is the
    k-th coefficient of the window ending at ``t`` (zero where
    undefined), ``defined`` flags samples with a fit, and ``warmup``
    flags samples whose window is not yet full.
    """
    n = len(series)
    p = config.degree
    window = config.window
    start = _suffix_start(series.mask)
    v = np.ascontiguousarray(series.values[start:])
    ns = v.size
    if config.warmup is WarmupPolicy.MARK:
        if ns < window:
            raise SeriesTooShort(
                f"{ns} defined samples but MARK warm-up needs {window}")
    elif ns < p + 1:
        raise SeriesTooShort(
            f"{ns} defined samples cannot support a degree-{p} fit")
    coeffs = np.zeros((p + 1, n))
    defined = np.zeros(n, dtype=bool)
    if ns >= window:
        coeffs[:, start + window - 1:] = kernels.sliding_dot(
            v, projection_weights(window, p))
        defined[start + window - 1:] = True
    if config.warmup is WarmupPolicy.GROW:
        for t in range(p, min(window - 1, ns)):
            coeffs[:, start + t] = projection_weights(t + 1, p) @ v[:t + 1]
            defined[start + t] = True
    warmup = np.ones(n, dtype=bool)
    if ns >= window:
        warmup[start + window - 1:] = False
    return coeffs, defined, warmup


def _derivative_unit(unit):
    # per-day slope of a log price is a per-day return; other derivative
    # units are not in the Unit enum
    return Unit.RETURN_PER_DAY if unit is Unit.LOG_PRICE else Unit.DIMENSIONLESS


def estimate_trend(series, config=TrendConfig()):
    """Causal trend (the slowly varying mean) of a series.

    The value at ``t`` is the constant coefficient of the trailing-window
    fit ending at ``t``. Early samples follow the warm-up policy.
    """
    coeffs, defined, _ = _fit_coefficients(series, config)
    return SampledSeries(series.timestamps, coeffs[0], unit=series.unit,
                         mask=~defined)


def estimate_derivative(series, config=TrendConfig()):
    """Per-day derivative of the causal trend. Requires ``degree >= 1``."""
    if config.degree < 1:
        raise DegreeTooLow("a derivative needs a fit of degree >= 1")
    coeffs, defined, _ = _fit_coefficients(series, config)
    return SampledSeries(series.timestamps, coeffs[1],
                         unit=_derivative_unit(series.unit), mask=~defined)


def decompose(series, config=TrendConfig()):
    """Split a series into trend + fluctuation, with the trend derivative.

    The fluctuation is simply ``series - trend`` pointwise, so the two
    parts add back to the input exactly at defined samples. For a
    degree-0 config the derivative slot is zero-filled and fully masked
    rather than silently zero.
    """
    coeffs, defined, warmup = _fit_coefficients(series, config)
    mask = ~defined
    trend = SampledSeries(series.timestamps, coeffs[0], unit=series.unit,
                          mask=mask)
    if config.degree >= 1:
        derivative = SampledSeries(series.timestamps, coeffs[1],
                                   unit=_derivative_unit(series.unit),
                                   mask=mask)
    else:
        derivative = SampledSeries(series.timestamps, np.zeros(len(series)),
                                   unit=_derivative_unit(series.unit),
                                   mask=np.ones(len(series), dtype=bool))
    fluct_mask = mask | series.mask
    fluctuation = SampledSeries(series.timestamps,
                                series.values - coeffs[0],
                                unit=series.unit, mask=fluct_mask)
    return DecomposedSeries(trend=trend, derivative=derivative,
                            fluctuation=fluctuation, warmup_mask=warmup)
