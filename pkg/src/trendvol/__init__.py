"""Model-free trend and volatility analytics for daily price series.

The package decomposes a series into a slowly varying mean plus a
quickly fluctuating residual with a causal trailing-window polynomial
fit, then builds everything else on that one operator: variances and
volatilities with a non-constant mean, log-returns and their means, beta
coefficients as mean-return curve slopes, Sharpe and Treynor ratios, and
short-horizon forecasts by trend extrapolation.
"""
from .errors import (
    DataError,
    DegenerateWindow,
    DegreeTooLow,
    DuplicateDate,
    EmptyIntersection,
    InvalidParameter,
    InvalidSeries,
    MisalignedSeries,
    NonPositivePrice,
    ParseError,
    SeriesTooShort,
    TrendvolError,
    UnorderedDates,
    WrongKind,
)
from .forecast import (
    ForecastConfig,
    ForecastOrder,
    ForecastReport,
    evaluate_forecast,
    forecast_series,
    forecast_volatility,
)
from .frames import IndicatorFrame, load_csv, read_frame, write_frame
from .indicators import (
    BetaSeries,
    beta,
    instantaneous_beta,
    instantaneous_treynor,
    sharpe,
    treynor,
)
from .kernels import BACKEND
from .moments import (
    MomentConfig,
    abs_deviation_volatility,
    covariance,
    variance,
    variance_with_flags,
    volatility,
)
from .returns import (
    AssetVolatility,
    ReturnKind,
    ReturnSeries,
    arithmetic_return,
    asset_volatility,
    asset_volatility_forms,
    clamp_return,
    instantaneous_mean_return,
    log_return,
    mean_return,
    normalized_return,
)
from .series import (
    AlignmentReport,
    SampledSeries,
    Unit,
    align,
    consecutive_dates,
    validate_positive,
)
from .trend import (
    DecomposedSeries,
    TrendConfig,
    WarmupPolicy,
    decompose,
    estimate_derivative,
    estimate_trend,
    fit_window,
    projection_weights,
)

__version__ = "0.1.0"
