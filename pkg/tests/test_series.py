import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trendvol import (
    EmptyIntersection,
    InvalidSeries,
    NonPositivePrice,
    SampledSeries,
    Unit,
    align,
    consecutive_dates,
    validate_positive,
)

from .helpers import make_prices, make_series


class TestConstruction:
    def test_basic(self):
        s = make_series([1.0, 2.0, 3.0])
        assert len(s) == 3
        assert s.defined.all()
        assert s.unit is Unit.DIMENSIONLESS

    def test_rejects_empty(self):
        with pytest.raises(InvalidSeries):
            SampledSeries(consecutive_dates("2020-01-01", 0), [])

    def test_rejects_length_mismatch(self):
        with pytest.raises(InvalidSeries):
            SampledSeries(consecutive_dates("2020-01-01", 3), [1.0, 2.0])

    def test_rejects_duplicate_dates(self):
        dates = np.array(["2020-01-01", "2020-01-01"], dtype="datetime64[D]")
        with pytest.raises(InvalidSeries):
            SampledSeries(dates, [1.0, 2.0])

    def test_rejects_unordered_dates(self):
        dates = np.array(["2020-01-02", "2020-01-01"], dtype="datetime64[D]")
        with pytest.raises(InvalidSeries):
            SampledSeries(dates, [1.0, 2.0])

    def test_rejects_nan(self):
        with pytest.raises(InvalidSeries):
            make_series([1.0, np.nan])
        with pytest.raises(InvalidSeries):
            make_series([np.inf, 1.0])

    def test_masked_slots_are_zeroed(self):
        s = make_series([np.nan, 2.0], mask=[True, False])
        assert s.values[0] == 0.0
        assert s.mask[0] and not s.mask[1]

    def test_arrays_are_readonly(self):
        s = make_series([1.0, 2.0])
        with pytest.raises(ValueError):
            s.values[0] = 9.0
        with pytest.raises(ValueError):
            s.mask[0] = True


class TestValidatePositive:
    def test_all_positive_returned_unchanged(self):
        s = make_prices([100.0, 110.0, 105.0])
        assert validate_positive(s) is s

    def test_zero_price_rejected(self):
        with pytest.raises(NonPositivePrice) as info:
            validate_positive(make_prices([100.0, 0.0, 105.0]))
        assert info.value.index == 1

    def test_negative_price_rejected(self):
        with pytest.raises(NonPositivePrice) as info:
            validate_positive(make_prices([100.0, -5.0]))
        assert info.value.index == 1

    def test_masked_samples_are_ignored(self):
        s = make_prices([-1.0, 105.0], mask=[True, False])
        assert validate_positive(s) is s

    def test_never_modifies_values(self):
        s = make_prices([100.0, 110.0])
        before = s.values.copy()
        validate_positive(s)
        assert np.array_equal(s.values, before)


class TestAlign:
    def test_partial_overlap(self):
        a = make_series([1.0, 2.0, 3.0], start="2020-01-01")
        b = make_series([20.0, 30.0, 40.0], start="2020-01-02")
        a2, b2, report = align(a, b)
        assert np.array_equal(a2.timestamps, b2.timestamps)
        assert list(a2.values) == [2.0, 3.0]
        assert list(b2.values) == [20.0, 30.0]
        assert report.kept_count == 2
        assert report.dropped_left == 1
        assert report.dropped_right == 1

    def test_identical_dates_unchanged(self):
        a = make_series([1.0, 2.0])
        b = make_series([3.0, 4.0])
        a2, b2, report = align(a, b)
        assert np.array_equal(a2.values, a.values)
        assert np.array_equal(b2.values, b.values)
        assert report.dropped_left == report.dropped_right == 0

    def test_disjoint_dates(self):
        a = make_series([1.0], start="2020-01-01")
        b = make_series([2.0], start="2021-01-01")
        with pytest.raises(EmptyIntersection):
            align(a, b)

    def test_masks_travel_with_values(self):
        a = make_series([1.0, 2.0, 3.0], start="2020-01-01",
                        mask=[True, False, False])
        b = make_series([5.0, 6.0], start="2020-01-01")
        a2, b2, _ = align(a, b)
        assert list(a2.mask) == [True, False]

    @given(offset=st.integers(0, 5), n_a=st.integers(1, 12),
           n_b=st.integers(1, 12))
    @settings(deadline=None, max_examples=60)
    def test_idempotent_and_symmetric(self, offset, n_a, n_b):
        a = make_series(np.arange(n_a, dtype=float), start="2020-01-01")
        b = make_series(np.arange(n_b, dtype=float) * 2,
                        start=np.datetime64("2020-01-01") + offset)
        try:
            a2, b2, report = align(a, b)
        except EmptyIntersection:
            assert offset >= n_a  # b starts after a ends
            return
        assert report.kept_count <= min(n_a, n_b)
        # idempotence
        a3, b3, report2 = align(a2, b2)
        assert np.array_equal(a3.values, a2.values)
        assert np.array_equal(b3.values, b2.values)
        assert report2.dropped_left == report2.dropped_right == 0
        # symmetry up to swapping
        b4, a4, report_sw = align(b, a)
        assert np.array_equal(a4.values, a2.values)
        assert np.array_equal(b4.values, b2.values)
        assert report_sw.dropped_left == report.dropped_right
        assert report_sw.dropped_right == report.dropped_left
