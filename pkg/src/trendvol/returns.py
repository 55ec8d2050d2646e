"""Log-returns and their means, robust clipping, and asset volatility.

Definitions, all per trading day where normalized:

* raw log-return over ``delta_t`` days: ``ln x(t) - ln x(t - delta_t)``;
* arithmetic return: ``(x(t) - x(t - delta_t)) / x(t - delta_t)``;
* normalized return: raw log-return divided by ``delta_t``;
* mean return: the same difference quotient applied to the *trend of the
  log price*, so the quick fluctuations of the raw return are absent;
* instantaneous mean return: per-day derivative of the log-price trend.

The asset volatility is the square root of the trend of the squared
deviation between normalized and mean returns. Everything here is
invariant under positive price rescaling, since a constant shift of the
log price cancels in every difference.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import InvalidParameter, SeriesTooShort, WrongKind
from .moments import MomentConfig
from .series import SampledSeries, Unit, validate_positive
from .trend import TrendConfig, estimate_derivative, estimate_trend

DEFAULT_CLIP_MULTIPLE = 6.0
DEFAULT_CLIP_WINDOW = 250


class ReturnKind(str, Enum):
    RAW_LOG = "raw_log"
    ARITHMETIC = "arithmetic"
    NORMALIZED = "normalized"
    MEAN = "mean"
    INSTANTANEOUS_MEAN = "instantaneous_mean"
    MODIFIED = "modified"


@dataclass(frozen=True)
class ReturnSeries:
    """A return series tagged with its horizon and construction.

    ``delta_t`` is the lookback in samples; the first ``delta_t`` samples
    are always masked (no predecessor). The instantaneous kind carries
    ``delta_t = 0`` by convention. ``clipped`` records which samples the
    adaptive clip of :func:`clamp_return` actually altered.
    """

    series: SampledSeries
    delta_t: int
    kind: ReturnKind
    clipped: np.ndarray = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ReturnKind(self.kind))
        if self.kind is ReturnKind.INSTANTANEOUS_MEAN:
            if self.delta_t != 0:
                raise InvalidParameter(
                    "instantaneous returns carry delta_t = 0")
        elif not isinstance(self.delta_t, int) or self.delta_t < 1:
            raise InvalidParameter(
                f"delta_t must be an int >= 1, got {self.delta_t!r}")
        if self.clipped is not None:
            flags = np.array(self.clipped, dtype=bool, copy=True)
            if flags.shape != self.series.values.shape:
                raise InvalidParameter("clipped flags must match the series")
            flags.flags.writeable = False
            object.__setattr__(self, "clipped", flags)

    @property
    def values(self):
        return self.series.values

    @property
    def mask(self):
        return self.series.mask

    @property
    def timestamps(self):
        return self.series.timestamps


def _require_delta_t(delta_t):
    if not isinstance(delta_t, int) or delta_t < 1:
        raise InvalidParameter(f"delta_t must be an int >= 1, got {delta_t!r}")


def _lagged_difference(values, mask, delta_t):
    """values[t] - values[t - delta_t] with the first delta_t masked."""
    n = values.size
    out = np.zeros(n)
    out_mask = np.ones(n, dtype=bool)
    if delta_t < n:
        out[delta_t:] = values[delta_t:] - values[:-delta_t]
        out_mask[delta_t:] = mask[delta_t:] | mask[:-delta_t]
    return out, out_mask


def _log_values(x):
    validate_positive(x)
    return np.log(np.where(x.defined, x.values, 1.0))


def _log_price_series(x):
    return x.with_values(_log_values(x), unit=Unit.LOG_PRICE)


def log_return(x, delta_t):
    """Raw log-return ``ln x(t) - ln x(t - delta_t)``."""
    _require_delta_t(delta_t)
    if len(x) <= delta_t:
        raise SeriesTooShort(
            f"need more than {delta_t} samples, got {len(x)}")
    diff, mask = _lagged_difference(_log_values(x), x.mask, delta_t)
    out = SampledSeries(x.timestamps, diff, unit=Unit.DIMENSIONLESS, mask=mask)
    return ReturnSeries(out, delta_t, ReturnKind.RAW_LOG)


def arithmetic_return(x, delta_t):
    """Arithmetic return ``(x(t) - x(t-delta_t)) / x(t-delta_t)``."""
    _require_delta_t(delta_t)
    validate_positive(x)
    if len(x) <= delta_t:
        raise SeriesTooShort(
            f"need more than {delta_t} samples, got {len(x)}")
    v = x.values
    n = v.size
    out = np.zeros(n)
    mask = np.ones(n, dtype=bool)
    prev = np.where(x.defined, v, 1.0)[:-delta_t]
    out[delta_t:] = (v[delta_t:] - prev) / prev
    mask[delta_t:] = x.mask[delta_t:] | x.mask[:-delta_t]
    series = SampledSeries(x.timestamps, out, unit=Unit.DIMENSIONLESS, mask=mask)
    return ReturnSeries(series, delta_t, ReturnKind.ARITHMETIC)


def normalized_return(x, delta_t):
    """Log-return per day: the raw log-return divided by ``delta_t``."""
    raw = log_return(x, delta_t)
    series = raw.series.with_values(raw.values / delta_t,
                                    unit=Unit.RETURN_PER_DAY)
    return ReturnSeries(series, delta_t, ReturnKind.NORMALIZED)


def mean_return(x, delta_t, cfg=TrendConfig()):
    """Mean (slowly varying) return over ``delta_t`` days.

    The difference quotient of the *trend of the log price*:
    ``(E(ln x)(t) - E(ln x)(t - delta_t)) / delta_t``. Masked during the
    trend warm-up and for the first ``delta_t`` samples.
    """
    _require_delta_t(delta_t)
    if len(x) <= delta_t:
        raise SeriesTooShort(
            f"need more than {delta_t} samples, got {len(x)}")
    eln = estimate_trend(_log_price_series(x), cfg)
    diff, mask = _lagged_difference(eln.values, eln.mask, delta_t)
    series = SampledSeries(x.timestamps, diff / delta_t,
                           unit=Unit.RETURN_PER_DAY, mask=mask)
    return ReturnSeries(series, delta_t, ReturnKind.MEAN)


def instantaneous_mean_return(x, cfg=TrendConfig()):
    """Per-day derivative of the log-price trend (``delta_t``-free)."""
    deriv = estimate_derivative(_log_price_series(x), cfg)
    return ReturnSeries(deriv, 0, ReturnKind.INSTANTANEOUS_MEAN)


def clamp_return(returns, multiple=DEFAULT_CLIP_MULTIPLE,
                 window=DEFAULT_CLIP_WINDOW):
    """Clip outlier returns to an adaptive band around the recent level.

    Each defined sample is clipped to ``median +/- multiple * MAD`` of
    the up-to-``window`` defined samples strictly before it. Samples with
    fewer than three defined predecessors in that span pass through
    untouched. A zero MAD collapses the band to the median itself —
    letting outliers through there would defeat the clip. The rule is a
    robust-location/scale choice of this library, and the clipped flags
    record exactly which samples were altered.
    """
    if returns.kind is not ReturnKind.NORMALIZED:
        raise WrongKind(
            f"can only clip normalized returns, got {returns.kind.value}")
    if not isinstance(window, int) or window < 3:
        raise InvalidParameter(f"clamp window must be an int >= 3, got {window!r}")
    multiple = float(multiple)
    if not np.isfinite(multiple) or multiple <= 0:
        raise InvalidParameter("band multiple must be positive")
    v = returns.values.copy()
    defined = returns.series.defined
    n = v.size
    clipped = np.zeros(n, dtype=bool)

    counts = np.concatenate([[0], np.cumsum(defined)])
    ragged = []
    full = np.zeros(n, dtype=bool)
    for t in range(n):
        if not defined[t]:
            continue
        lo = max(0, t - window)
        if t - lo == window and counts[t] - counts[lo] == window:
            full[t] = True
        elif counts[t] - counts[lo] >= 3:
            ragged.append(t)

    t_full = np.flatnonzero(full)
    if t_full.size:
        wins = sliding_window_view(returns.values, window)
        rows = wins[t_full - window]
        med = np.median(rows, axis=1)
        mad = np.median(np.abs(rows - med[:, None]), axis=1)
        lo_band = med - multiple * mad
        hi_band = med + multiple * mad
        new = np.clip(v[t_full], lo_band, hi_band)
        degenerate = mad == 0.0
        new[degenerate] = med[degenerate]
        changed = new != v[t_full]
        v[t_full[changed]] = new[changed]
        clipped[t_full[changed]] = True

    for t in ragged:
        lo = max(0, t - window)
        idx = np.flatnonzero(defined[lo:t]) + lo
        vals = returns.values[idx]
        med = float(np.median(vals))
        mad = float(np.median(np.abs(vals - med)))
        if mad == 0.0:
            new = med
        else:
            new = min(max(v[t], med - multiple * mad), med + multiple * mad)
        if new != v[t]:
            v[t] = new
            clipped[t] = True

    series = returns.series.with_values(v)
    return ReturnSeries(series, returns.delta_t, ReturnKind.MODIFIED,
                        clipped=clipped)


@dataclass(frozen=True)
class AssetVolatility:
    """Primary volatility, the diagnostic cross-check form, and clamps.

    ``volatility`` is ``sqrt(E((r - rbar)^2))``; ``crosscheck`` is the
    algebraically related ``sqrt(E(r^2) - rbar^2)``. With a single shared
    trend operator the two differ by the estimator's nonlinearity
    residual. ``clamped`` flags samples whose raw variance fell below the
    configured floor before the square root.
    """

    volatility: SampledSeries
    crosscheck: SampledSeries
    clamped: np.ndarray


def asset_volatility_forms(x, delta_t, cfg=MomentConfig(),
                           use_modified=False,
                           multiple=DEFAULT_CLIP_MULTIPLE,
                           clamp_window=DEFAULT_CLIP_WINDOW):
    """Asset volatility with the cross-check form and clamp diagnostics.

    Pipeline: normalized return (optionally clipped via
    :func:`clamp_return`), mean return, squared deviation, one pass of
    the trend operator, square root with the variance floor.
    """
    r = normalized_return(x, delta_t)
    if use_modified:
        r = clamp_return(r, multiple=multiple, window=clamp_window)
    rbar = mean_return(x, delta_t, cfg.trend)

    dev_mask = r.mask | rbar.mask
    dev2 = SampledSeries(x.timestamps, (r.values - rbar.values) ** 2,
                         unit=Unit.DIMENSIONLESS, mask=dev_mask)
    edev2 = estimate_trend(dev2, cfg.trend)
    clamped = edev2.defined & (edev2.values < cfg.variance_floor)
    vol = SampledSeries(
        x.timestamps,
        np.sqrt(np.maximum(edev2.values, cfg.variance_floor)),
        unit=Unit.RETURN_PER_DAY, mask=edev2.mask)

    r2 = SampledSeries(x.timestamps, r.values ** 2,
                       unit=Unit.DIMENSIONLESS, mask=r.mask)
    er2 = estimate_trend(r2, cfg.trend)
    cross_mask = er2.mask | rbar.mask
    cross = SampledSeries(
        x.timestamps,
        np.sqrt(np.maximum(er2.values - rbar.values ** 2, cfg.variance_floor)),
        unit=Unit.RETURN_PER_DAY, mask=cross_mask)
    return AssetVolatility(volatility=vol, crosscheck=cross, clamped=clamped)


def asset_volatility(x, delta_t, cfg=MomentConfig(), use_modified=False,
                     multiple=DEFAULT_CLIP_MULTIPLE,
                     clamp_window=DEFAULT_CLIP_WINDOW):
    """Volatility of an asset: ``sqrt(E((r - rbar)^2))`` per day."""
    return asset_volatility_forms(
        x, delta_t, cfg, use_modified=use_modified, multiple=multiple,
        clamp_window=clamp_window).volatility
