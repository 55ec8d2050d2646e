"""Command-line interface.

Three subcommands over daily ``date,close`` CSV files:

* ``analyze`` — single-asset frame: price, trend, fluctuation, returns,
  mean returns, volatility, and an optional volatility forecast.
* ``beta`` — asset-versus-market frame: mean returns, beta, Treynor.
* ``sharpe`` — mean return, volatility, Sharpe ratio, and an optional
  Sharpe forecast.

Exit codes: 0 success, 1 usage error, 2 data error. All rates are per
trading day unless ``--annualize`` is given (returns x252, volatilities
x sqrt(252), applied at output only). Every default in effect is echoed
in the output metadata.
"""
import argparse
import math
import sys

from .errors import DataError, InvalidParameter
from .forecast import ForecastConfig, ForecastOrder, forecast_series, forecast_volatility
from .frames import IndicatorFrame, load_csv, write_frame
from .indicators import (
    DEFAULT_EPSILON,
    DEFAULT_EPSILON_VOL,
    beta,
    instantaneous_beta,
    instantaneous_treynor,
    sharpe,
    treynor,
)
from .moments import MomentConfig
from .returns import (
    DEFAULT_CLIP_MULTIPLE,
    DEFAULT_CLIP_WINDOW,
    asset_volatility,
    clamp_return,
    instantaneous_mean_return,
    mean_return,
    normalized_return,
)
from .series import align
from .trend import DEFAULT_DEGREE, DEFAULT_WINDOW, TrendConfig, decompose

TRADING_DAYS_PER_YEAR = 252
DEFAULT_DELTA_T = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_trend_options(sub):
    sub.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                     help="trend window length in samples (default 60)")
    sub.add_argument("--degree", type=int, default=DEFAULT_DEGREE,
                     help="trend polynomial degree (default 2)")
    sub.add_argument("--delta-t", type=int, default=DEFAULT_DELTA_T,
                     dest="delta_t",
                     help="return horizon in samples (default 1)")


def _add_output_options(sub):
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")
    sub.add_argument("--output", default=None,
                     help="output file (default stdout)")


def build_parser():
    parser = _Parser(prog="trendvol",
                     description="Model-free trend, volatility, beta and "
                                 "Sharpe/Treynor analytics for daily prices")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    analyze = sub.add_parser("analyze",
                             help="single-asset indicator frame")
    analyze.add_argument("--input", required=True, help="date,close CSV file")
    _add_trend_options(analyze)
    analyze.add_argument("--modified", action="store_true",
                         help="clip outlier returns before the volatility")
    analyze.add_argument("--k", type=float, default=DEFAULT_CLIP_MULTIPLE,
                         help="clip band width in MAD multiples (default 6)")
    analyze.add_argument("--clamp-window", type=int,
                         default=DEFAULT_CLIP_WINDOW, dest="clamp_window",
                         help="clip lookback in samples (default 250)")
    analyze.add_argument("--annualize", action="store_true",
                         help="scale returns x252 and volatilities x sqrt(252)"
                              " in the output")
    analyze.add_argument("--forecast", type=int, default=None, metavar="H",
                         help="add an H-day volatility forecast column")
    _add_output_options(analyze)

    beta_cmd = sub.add_parser("beta", help="beta/Treynor frame")
    beta_cmd.add_argument("--asset", required=True, help="asset CSV file")
    beta_cmd.add_argument("--market", required=True, help="market CSV file")
    _add_trend_options(beta_cmd)
    beta_cmd.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                          help="denominator threshold (default 1e-6)")
    beta_cmd.add_argument("--instantaneous", action="store_true",
                          help="use instantaneous mean returns (delta-t free)")
    beta_cmd.add_argument("--fill", choices=("forward",), default=None,
                          help="carry defined values into masked cells")
    _add_output_options(beta_cmd)

    sharpe_cmd = sub.add_parser("sharpe", help="Sharpe-ratio frame")
    sharpe_cmd.add_argument("--input", required=True, help="date,close CSV file")
    _add_trend_options(sharpe_cmd)
    sharpe_cmd.add_argument("--epsilon-vol", type=float,
                            default=DEFAULT_EPSILON_VOL, dest="epsilon_vol",
                            help="volatility threshold for the ratio "
                                 "(default 1e-8)")
    sharpe_cmd.add_argument("--forecast", type=int, default=None, metavar="H",
                            help="add an H-day Sharpe forecast column")
    sharpe_cmd.add_argument("--fill", choices=("forward",), default=None,
                            help="carry defined values into masked cells")
    _add_output_options(sharpe_cmd)
    return parser


def _scaled(series, factor):
    return series.with_values(series.values * factor)


def _run_analyze(args):
    prices = load_csv(args.input)
    tc = TrendConfig(window=args.window, degree=args.degree)
    mc = MomentConfig(trend=tc)
    parts = decompose(prices, tc)
    r = normalized_return(prices, args.delta_t)
    rbar = mean_return(prices, args.delta_t, tc)
    vol = asset_volatility(prices, args.delta_t, mc,
                           use_modified=args.modified, multiple=args.k,
                           clamp_window=args.clamp_window)

    ret_scale = TRADING_DAYS_PER_YEAR if args.annualize else 1.0
    vol_scale = math.sqrt(TRADING_DAYS_PER_YEAR) if args.annualize else 1.0
    columns = {
        "price": prices,
        "trend": parts.trend,
        "fluctuation": parts.fluctuation,
        "return": _scaled(r.series, ret_scale),
    }
    if args.modified:
        modified = clamp_return(r, multiple=args.k, window=args.clamp_window)
        columns["modified_return"] = _scaled(modified.series, ret_scale)
    columns["mean_return"] = _scaled(rbar.series, ret_scale)
    if args.degree >= 1:
        rinst = instantaneous_mean_return(prices, tc)
        columns["instantaneous_mean_return"] = _scaled(rinst.series, ret_scale)
    columns["volatility"] = _scaled(vol, vol_scale)
    if args.forecast is not None:
        fvol = forecast_volatility(prices, args.delta_t, args.forecast, mc)
        columns["forecast_volatility"] = _scaled(fvol, vol_scale)

    meta = {
        "command": "analyze",
        "window": args.window,
        "degree": args.degree,
        "delta_t": args.delta_t,
        "warmup": "grow",
        "modified": args.modified,
        "k": args.k,
        "clamp_window": args.clamp_window,
        "variance_floor": mc.variance_floor,
        "annualize": args.annualize,
        "forecast": args.forecast,
    }
    return IndicatorFrame.from_series(columns, meta)


def _run_beta(args):
    asset = load_csv(args.asset)
    market = load_csv(args.market)
    asset, market, report = align(asset, market)
    tc = TrendConfig(window=args.window, degree=args.degree)
    if args.instantaneous:
        b = instantaneous_beta(asset, market, tc, epsilon=args.epsilon)
        tr = instantaneous_treynor(asset, market, tc, epsilon=args.epsilon)
        asset_r = instantaneous_mean_return(asset, tc).series
        market_r = instantaneous_mean_return(market, tc).series
    else:
        b = beta(asset, market, args.delta_t, tc, epsilon=args.epsilon)
        tr = treynor(asset, market, args.delta_t, tc, epsilon=args.epsilon)
        asset_r = mean_return(asset, args.delta_t, tc).series
        market_r = mean_return(market, args.delta_t, tc).series
    columns = {
        "asset_mean_return": asset_r,
        "market_mean_return": market_r,
        "beta": b.series,
        "treynor": tr,
    }
    meta = {
        "command": "beta",
        "window": args.window,
        "degree": args.degree,
        "delta_t": None if args.instantaneous else args.delta_t,
        "warmup": "grow",
        "epsilon": args.epsilon,
        "instantaneous": args.instantaneous,
        "aligned_samples": report.kept_count,
        "dropped_asset": report.dropped_left,
        "dropped_market": report.dropped_right,
    }
    frame = IndicatorFrame.from_series(columns, meta)
    if args.fill == "forward":
        frame = frame.fill_forward()
    return frame


def _run_sharpe(args):
    prices = load_csv(args.input)
    tc = TrendConfig(window=args.window, degree=args.degree)
    mc = MomentConfig(trend=tc)
    rbar = mean_return(prices, args.delta_t, tc)
    vol = asset_volatility(prices, args.delta_t, mc)
    sr = sharpe(prices, args.delta_t, mc, epsilon_vol=args.epsilon_vol)
    columns = {
        "mean_return": rbar.series,
        "volatility": vol,
        "sharpe": sr,
    }
    if args.forecast is not None:
        fcfg = ForecastConfig(horizon=args.forecast,
                              order=ForecastOrder.TAYLOR1, trend=tc)
        columns["forecast_sharpe"] = forecast_series(sr, fcfg)
    meta = {
        "command": "sharpe",
        "window": args.window,
        "degree": args.degree,
        "delta_t": args.delta_t,
        "warmup": "grow",
        "epsilon_vol": args.epsilon_vol,
        "variance_floor": mc.variance_floor,
        "forecast": args.forecast,
    }
    frame = IndicatorFrame.from_series(columns, meta)
    if args.fill == "forward":
        frame = frame.fill_forward()
    return frame


_RUNNERS = {"analyze": _run_analyze, "beta": _run_beta, "sharpe": _run_sharpe}


def _emit(frame, args):
    data = write_frame(frame, fmt=args.format)
    if args.output:
        with open(args.output, "wb") as handle:
            handle.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def main(argv=None):
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except _UsageError as exc:
        print(parser.format_usage(), file=sys.stderr, end="")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.command is None:
        print(parser.format_usage(), file=sys.stderr, end="")
        print("error: a subcommand is required", file=sys.stderr)
        return 1
    try:
        frame = _RUNNERS[args.command](args)
        _emit(frame, args)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
