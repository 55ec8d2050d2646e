"""Short-horizon forecasting by causal trend extrapolation.

A forecast issued at sample ``t`` for ``t + h`` uses only samples up to
``t``: either the trend level ``c0(t)`` alone, or the first-order
extrapolation ``c0(t) + h * c1(t)``. Higher orders amplify estimator
noise at horizons around 20 days and are deliberately not offered.

Forecasts are indexed by their *target* date: the output value at date
``d`` is the prediction for ``d`` issued ``h`` samples earlier, so a
predicted column overlays the realized one date-for-date. Predictions
whose target falls beyond the observed calendar are not emitted — the
trading calendar past the last sample is unknown.
"""
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import DegreeTooLow, EmptyIntersection, InvalidParameter
from .moments import MomentConfig
from .returns import asset_volatility
from .series import SampledSeries, align
from .trend import TrendConfig, _fit_coefficients


class ForecastOrder(str, Enum):
    LEVEL = "level"        # c0 only
    TAYLOR1 = "taylor1"    # c0 + h * c1


@dataclass(frozen=True)
class ForecastConfig:
    """Horizon in samples, extrapolation order, and the trend to fit."""

    horizon: int
    order: ForecastOrder = ForecastOrder.TAYLOR1
    trend: TrendConfig = TrendConfig()

    def __post_init__(self):
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise InvalidParameter(
                f"horizon must be an int >= 1, got {self.horizon!r}")
        object.__setattr__(self, "order", ForecastOrder(self.order))
        if self.order is ForecastOrder.TAYLOR1 and self.trend.degree < 1:
            raise DegreeTooLow(
                "taylor1 extrapolation needs a trend of degree >= 1")


def forecast_series(x, cfg):
    """Rolling ``cfg.horizon``-step-ahead forecasts of a series.

    The output shares the input's timestamps; the value at index ``t``
    is the prediction for that date issued at ``t - horizon``, masked
    where no prediction exists (the first ``horizon`` samples plus the
    estimator's undefined region).
    """
    h = cfg.horizon
    coeffs, defined, _ = _fit_coefficients(x, cfg.trend)
    if cfg.order is ForecastOrder.TAYLOR1:
        predicted = coeffs[0] + h * coeffs[1]
    else:
        predicted = coeffs[0]
    n = len(x)
    out = np.zeros(n)
    out_mask = np.ones(n, dtype=bool)
    if h < n:
        out[h:] = predicted[:-h]
        out_mask[h:] = ~defined[:-h]
    return SampledSeries(x.timestamps, out, unit=x.unit, mask=out_mask)


def forecast_volatility(asset, delta_t, horizon, cfg=MomentConfig(),
                        forecast_cfg=None):
    """Asset-volatility pipeline followed by trend extrapolation.

    ``forecast_cfg`` defaults to a taylor1 extrapolation reusing the
    moment config's trend; ``horizon`` always wins over the config's.
    """
    vol = asset_volatility(asset, delta_t, cfg)
    if forecast_cfg is None:
        fcfg = ForecastConfig(horizon=horizon, order=ForecastOrder.TAYLOR1,
                              trend=cfg.trend)
    else:
        fcfg = replace(forecast_cfg, horizon=horizon)
    return forecast_series(vol, fcfg)


@dataclass(frozen=True)
class ForecastReport:
    """Error statistics of predictions against realized values."""

    rmse: float
    mae: float
    bias: float
    count: int


def evaluate_forecast(predicted, realized):
    """Compare a forecast series with the realized one, date by date.

    Only dates defined in both series contribute. ``bias`` is the mean
    of predicted minus realized.
    """
    p, r, _ = align(predicted, realized)
    use = p.defined & r.defined
    count = int(use.sum())
    if count == 0:
        raise EmptyIntersection("no overlapping defined samples to evaluate")
    err = p.values[use] - r.values[use]
    return ForecastReport(
        rmse=float(np.sqrt(np.mean(err ** 2))),
        mae=float(np.mean(np.abs(err))),
        bias=float(np.mean(err)),
        count=count,
    )
