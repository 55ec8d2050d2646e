"""Core data model: uniformly indexed daily series and date alignment.

A :class:`SampledSeries` pairs strictly increasing trading-day timestamps
with float values. Time is discrete: consecutive samples are consecutive
grid points one trading day apart, and calendar gaps (weekends, holidays)
carry no meaning. All per-day rates produced elsewhere in the package are
therefore "per trading day".

Samples can be individually *undefined* (e.g. during an estimator's
warm-up). Undefined samples are tracked with an explicit boolean mask,
never with NaN or other sentinel values; masked slots hold 0.0 and must
be ignored by every consumer.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EmptyIntersection, InvalidSeries, NonPositivePrice


class Unit(str, Enum):
    """Coarse unit tag carried along derived series."""

    PRICE = "price"
    LOG_PRICE = "log-price"
    RETURN_PER_DAY = "return-per-day"
    DIMENSIONLESS = "dimensionless"


def _as_readonly(arr):
    out = np.array(arr, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class SampledSeries:
    """Daily time series with an explicit undefined-sample mask.

    Parameters
    ----------
    timestamps : array-like of datetime64[D]
        Strictly increasing trading days, no duplicates.
    values : array-like of float
        One finite value per timestamp. Slots where ``mask`` is True are
        normalized to 0.0 on construction.
    unit : Unit
        What the values measure.
    mask : array-like of bool, optional
        True marks an undefined sample. Defaults to all-defined.
    """

    timestamps: np.ndarray
    values: np.ndarray
    unit: Unit = Unit.DIMENSIONLESS
    mask: np.ndarray = None

    def __post_init__(self):
        ts = np.asarray(self.timestamps, dtype="datetime64[D]")
        vals = np.asarray(self.values, dtype=np.float64)
        if ts.ndim != 1 or vals.ndim != 1:
            raise InvalidSeries("timestamps and values must be 1-D")
        if ts.size != vals.size:
            raise InvalidSeries(
                f"{ts.size} timestamps but {vals.size} values")
        if ts.size == 0:
            raise InvalidSeries("series must hold at least one sample")
        if ts.size > 1 and not (np.diff(ts.astype("int64")) > 0).all():
            raise InvalidSeries(
                "timestamps must be strictly increasing with no duplicates")
        if self.mask is None:
            mask = np.zeros(ts.size, dtype=bool)
        else:
            mask = np.asarray(self.mask, dtype=bool)
            if mask.shape != vals.shape:
                raise InvalidSeries("mask length must match values")
        vals = np.where(mask, 0.0, vals)
        if not np.isfinite(vals).all():
            raise InvalidSeries("values must be finite (no NaN/inf)")
        object.__setattr__(self, "timestamps", _as_readonly(ts))
        object.__setattr__(self, "values", _as_readonly(vals))
        object.__setattr__(self, "mask", _as_readonly(mask))
        object.__setattr__(self, "unit", Unit(self.unit))

    def __len__(self):
        return self.values.size

    @property
    def defined(self):
        """Boolean array, True where the sample carries a real value."""
        return ~self.mask

    def with_values(self, values, unit=None, mask=None):
        """New series on the same timestamps with different values."""
        return SampledSeries(
            self.timestamps,
            values,
            unit=self.unit if unit is None else unit,
            mask=self.mask if mask is None else mask,
        )


@dataclass(frozen=True)
class AlignmentReport:
    """How many samples survived a pairwise date alignment."""

    kept_count: int
    dropped_left: int
    dropped_right: int


def consecutive_dates(start, n):
    """``n`` consecutive calendar days from ``start`` as datetime64[D]."""
    return np.datetime64(start, "D") + np.arange(n)


def validate_positive(series):
    """Return ``series`` unchanged if every defined value is positive.

    Raises
    ------
    NonPositivePrice
        At the first defined sample whose value is <= 0; logarithms and
        returns are undefined for such a series.
    """
    bad = series.defined & (series.values <= 0.0)
    if bad.any():
        raise NonPositivePrice(index=int(np.argmax(bad)))
    return series


def align(a, b):
    """Restrict two series to their common timestamps.

    Returns
    -------
    (SampledSeries, SampledSeries, AlignmentReport)
        Both outputs share an identical timestamp vector (the ordered
        intersection of the inputs' timestamps).

    Raises
    ------
    EmptyIntersection
        If the series share no dates.
    """
    common, ia, ib = np.intersect1d(
        a.timestamps, b.timestamps, assume_unique=True, return_indices=True)
    if common.size == 0:
        raise EmptyIntersection("series share no common dates")
    a2 = SampledSeries(common, a.values[ia], unit=a.unit, mask=a.mask[ia])
    b2 = SampledSeries(common, b.values[ib], unit=b.unit, mask=b.mask[ib])
    report = AlignmentReport(
        kept_count=int(common.size),
        dropped_left=len(a) - int(common.size),
        dropped_right=len(b) - int(common.size),
    )
    return a2, b2, report
