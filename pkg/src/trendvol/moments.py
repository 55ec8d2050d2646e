"""Model-free covariance, variance and volatility of arbitrary series.

All second moments are built from one trend operator E(.): the
covariance of two series is ``E(xy) - E(x)E(y)`` with every expectation
evaluated under the same :class:`~trendvol.trend.TrendConfig`, the
variance is the self-covariance, and the volatility its square root.
These are population-style quantities — no ``n-1`` correction anywhere.

For degree >= 1 the raw variance can dip slightly negative because the
trends of ``x`` and ``x^2`` are fitted independently; it is clamped from
below at ``variance_floor`` (default 0) and the clamped samples are
reported as a numerical diagnostic.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, MisalignedSeries
from .series import SampledSeries, Unit
from .trend import TrendConfig, decompose, estimate_trend


@dataclass(frozen=True)
class MomentConfig:
    """Trend operator configuration plus the variance clamp threshold."""

    trend: TrendConfig = TrendConfig()
    variance_floor: float = 0.0

    def __post_init__(self):
        floor = float(self.variance_floor)
        if not np.isfinite(floor) or floor < 0.0:
            raise InvalidParameter(
                f"variance_floor must be finite and >= 0, got {self.variance_floor!r}")
        object.__setattr__(self, "variance_floor", floor)


def _require_same_dates(x, y):
    if not np.array_equal(x.timestamps, y.timestamps):
        raise MisalignedSeries(
            "series must share identical timestamps; align them first")


def covariance(x, y, cfg=MomentConfig()):
    """Pointwise covariance ``E(xy) - E(x)E(y)`` of two aligned series."""
    _require_same_dates(x, y)
    product = x.with_values(x.values * y.values, unit=Unit.DIMENSIONLESS,
                            mask=x.mask | y.mask)
    exy = estimate_trend(product, cfg.trend)
    ex = estimate_trend(x, cfg.trend)
    ey = estimate_trend(y, cfg.trend)
    mask = exy.mask | ex.mask | ey.mask
    return SampledSeries(x.timestamps, exy.values - ex.values * ey.values,
                         unit=Unit.DIMENSIONLESS, mask=mask)


def variance_with_flags(x, cfg=MomentConfig()):
    """Clamped variance plus the per-sample clamp diagnostic.

    Returns ``(variance, clamped)`` where ``clamped[t]`` is True at
    defined samples whose raw value fell below ``variance_floor``.
    """
    raw = covariance(x, x, cfg)
    clamped = raw.defined & (raw.values < cfg.variance_floor)
    out = raw.with_values(np.maximum(raw.values, cfg.variance_floor))
    return out, clamped


def variance(x, cfg=MomentConfig()):
    """Pointwise variance ``E(x^2) - E(x)^2``, clamped at the floor."""
    out, _ = variance_with_flags(x, cfg)
    return out


def volatility(x, cfg=MomentConfig()):
    """Pointwise standard deviation: square root of the clamped variance."""
    var = variance(x, cfg)
    return var.with_values(np.sqrt(var.values))


def abs_deviation_volatility(x, cfg=MomentConfig()):
    """Alternative dispersion measure ``E(|x - E(x)|)``.

    Not equivalent to :func:`volatility`; exposed for completeness, and
    nothing downstream consumes it by default.
    """
    parts = decompose(x, cfg.trend)
    absf = parts.fluctuation.with_values(np.abs(parts.fluctuation.values),
                                         unit=Unit.DIMENSIONLESS)
    return estimate_trend(absf, cfg.trend)
