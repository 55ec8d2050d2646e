"""Beta via mean-return curve tangents, Treynor and Sharpe ratios.

Plot the asset's mean return against the market's as a plane curve
parameterized by time; the beta coefficient at ``t`` is the slope of
that curve's tangent, i.e. the ratio of the two curves' time
derivatives. The derivatives come from a second pass of the trend
derivative estimator over the mean-return series (they are smooth but
still noisy at the sample level); samples where the market-side
derivative is below ``epsilon`` are masked rather than blown up.

Treynor divides the asset's mean return by its beta; Sharpe divides it
by the asset's volatility. Neither subtracts a risk-free rate here —
that belongs to the output layer, off by default.
"""
from dataclasses import dataclass

import numpy as np

from .errors import MisalignedSeries
from .moments import MomentConfig
from .returns import (
    DEFAULT_CLIP_MULTIPLE,
    DEFAULT_CLIP_WINDOW,
    asset_volatility,
    instantaneous_mean_return,
    mean_return,
)
from .series import SampledSeries, Unit
from .trend import TrendConfig, estimate_derivative

DEFAULT_EPSILON = 1e-6
DEFAULT_EPSILON_VOL = 1e-8


@dataclass(frozen=True)
class BetaSeries:
    """Beta coefficients with their undefined mask and threshold.

    ``undefined_mask`` is True where the market curve's derivative
    magnitude fell below ``epsilon`` (or where upstream estimates are
    themselves undefined).
    """

    series: SampledSeries
    epsilon: float

    @property
    def values(self):
        return self.series.values

    @property
    def undefined_mask(self):
        return self.series.mask

    @property
    def defined(self):
        return self.series.defined


def _require_same_dates(asset, market):
    if not np.array_equal(asset.timestamps, market.timestamps):
        raise MisalignedSeries(
            "asset and market must share identical timestamps; align first")


def _curve_slope_ratio(y_curve, x_curve, cfg, epsilon):
    """dy/dx of the curve (x(t), y(t)) from per-day time derivatives."""
    dy = estimate_derivative(y_curve, cfg)
    dx = estimate_derivative(x_curve, cfg)
    defined = dy.defined & dx.defined & (np.abs(dx.values) >= epsilon)
    vals = np.zeros(len(y_curve))
    vals[defined] = dy.values[defined] / dx.values[defined]
    return SampledSeries(y_curve.timestamps, vals, unit=Unit.DIMENSIONLESS,
                         mask=~defined)


def beta(asset, market, delta_t, cfg=TrendConfig(), epsilon=DEFAULT_EPSILON,
         curve_cfg=None):
    """Beta of an asset against a market from mean-return curve slopes.

    Both prices are reduced to mean returns over ``delta_t`` days under
    ``cfg``; the beta is the ratio of the asset curve's time derivative
    to the market curve's. ``curve_cfg`` configures the derivative pass
    over the mean-return series and defaults to ``cfg`` itself.
    """
    _require_same_dates(asset, market)
    y = mean_return(asset, delta_t, cfg)
    x = mean_return(market, delta_t, cfg)
    ratio = _curve_slope_ratio(y.series, x.series, curve_cfg or cfg, epsilon)
    return BetaSeries(series=ratio, epsilon=float(epsilon))


def instantaneous_beta(asset, market, cfg=TrendConfig(),
                       epsilon=DEFAULT_EPSILON, curve_cfg=None):
    """Beta from instantaneous mean-return curves (``delta_t``-free)."""
    _require_same_dates(asset, market)
    y = instantaneous_mean_return(asset, cfg)
    x = instantaneous_mean_return(market, cfg)
    ratio = _curve_slope_ratio(y.series, x.series, curve_cfg or cfg, epsilon)
    return BetaSeries(series=ratio, epsilon=float(epsilon))


def _ratio_over_beta(numerator, b, epsilon):
    defined = numerator.defined & b.defined & (np.abs(b.values) >= epsilon)
    vals = np.zeros(len(numerator))
    vals[defined] = numerator.values[defined] / b.values[defined]
    return SampledSeries(numerator.timestamps, vals,
                         unit=Unit.RETURN_PER_DAY, mask=~defined)


def treynor(asset, market, delta_t, cfg=TrendConfig(),
            epsilon=DEFAULT_EPSILON, curve_cfg=None):
    """Treynor ratio: mean return per unit of beta.

    Undefined wherever the beta is undefined or its magnitude falls
    below ``epsilon``.
    """
    b = beta(asset, market, delta_t, cfg, epsilon, curve_cfg)
    rbar = mean_return(asset, delta_t, cfg)
    return _ratio_over_beta(rbar.series, b, epsilon)


def instantaneous_treynor(asset, market, cfg=TrendConfig(),
                          epsilon=DEFAULT_EPSILON, curve_cfg=None):
    """Treynor ratio built from instantaneous mean returns throughout."""
    b = instantaneous_beta(asset, market, cfg, epsilon, curve_cfg)
    rbar = instantaneous_mean_return(asset, cfg)
    return _ratio_over_beta(rbar.series, b, epsilon)


def sharpe(asset, delta_t, cfg=MomentConfig(), use_modified=False,
           multiple=DEFAULT_CLIP_MULTIPLE, clamp_window=DEFAULT_CLIP_WINDOW,
           epsilon_vol=DEFAULT_EPSILON_VOL):
    """Sharpe ratio: mean return per unit of asset volatility.

    Masked (not infinite) wherever the volatility falls below
    ``epsilon_vol`` — an exactly exponential price has zero volatility
    and no meaningful Sharpe ratio.
    """
    rbar = mean_return(asset, delta_t, cfg.trend)
    vol = asset_volatility(asset, delta_t, cfg, use_modified=use_modified,
                           multiple=multiple, clamp_window=clamp_window)
    defined = rbar.series.defined & vol.defined & (vol.values >= epsilon_vol)
    vals = np.zeros(len(asset))
    vals[defined] = rbar.values[defined] / vol.values[defined]
    return SampledSeries(asset.timestamps, vals, unit=Unit.DIMENSIONLESS,
                         mask=~defined)
