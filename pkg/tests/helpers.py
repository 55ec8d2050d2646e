"""Small shared helpers for the test suite."""
import numpy as np

from trendvol import SampledSeries, Unit, consecutive_dates


def make_series(values, start="2015-01-05", unit=Unit.DIMENSIONLESS, mask=None):
    values = np.asarray(values, dtype=float)
    return SampledSeries(consecutive_dates(start, values.size), values,
                         unit=unit, mask=mask)


def make_prices(values, start="2015-01-05", mask=None):
    return make_series(values, start=start, unit=Unit.PRICE, mask=mask)


def assert_relative(actual, expected, tol, floor=1.0):
    """|actual - expected| <= tol * max(floor, |expected|), elementwise."""
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    bound = tol * np.maximum(floor, np.abs(expected))
    err = np.abs(actual - expected)
    worst = np.max(err - bound) if err.size else 0.0
    assert (err <= bound).all(), (
        f"max violation {worst:.3e} (tol {tol:g}, floor {floor:g})")
