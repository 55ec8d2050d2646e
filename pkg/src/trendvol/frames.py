"""Indicator frames, CSV/JSON serialization, and price-file ingestion.

An :class:`IndicatorFrame` is a per-date table of computed columns with
an explicit mask per column and a metadata mapping echoing every
configuration value that produced it, defaults included — the metadata
alone suffices to reproduce the frame.

Serialization is deterministic byte for byte and round-trip safe: floats
are written with ``repr`` (shortest exact form), masked cells become
empty CSV fields or JSON nulls, never numbers. The CSV carries the
metadata as a single leading ``# meta`` comment line; the JSON schema is
``{"meta": {...}, "rows": [{"date": ..., <col>: number|null}]}``.
"""
import csv
import io
import json
from dataclasses import dataclass
from datetime import date

import numpy as np

from .errors import (
    DuplicateDate,
    InvalidParameter,
    NonPositivePrice,
    ParseError,
    UnorderedDates,
)
from .series import SampledSeries, Unit

_META_PREFIX = "# meta "


@dataclass(frozen=True)
class IndicatorFrame:
    """Aligned per-date columns, their masks, and a config echo."""

    dates: np.ndarray
    columns: dict
    masks: dict
    meta: dict

    def __post_init__(self):
        dates = np.asarray(self.dates, dtype="datetime64[D]")
        object.__setattr__(self, "dates", dates)
        if set(self.columns) != set(self.masks):
            raise InvalidParameter("columns and masks must carry the same names")
        columns = {}
        masks = {}
        for name, vals in self.columns.items():
            v = np.asarray(vals, dtype=np.float64)
            m = np.asarray(self.masks[name], dtype=bool)
            if v.shape != dates.shape or m.shape != dates.shape:
                raise InvalidParameter(
                    f"column {name!r} does not match the date vector")
            if not np.isfinite(v[~m]).all():
                raise InvalidParameter(
                    f"column {name!r} holds non-finite defined values")
            columns[name] = v
            masks[name] = m
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "masks", masks)

    @classmethod
    def from_series(cls, named_series, meta):
        """Build a frame from {name: SampledSeries} sharing one date vector."""
        items = list(named_series.items())
        if not items:
            raise InvalidParameter("a frame needs at least one column")
        dates = items[0][1].timestamps
        columns = {}
        masks = {}
        for name, series in items:
            if not np.array_equal(series.timestamps, dates):
                raise InvalidParameter(
                    f"column {name!r} is not aligned with the frame dates")
            columns[name] = series.values
            masks[name] = series.mask
        return cls(dates=dates, columns=columns, masks=masks, meta=dict(meta))

    def fill_forward(self):
        """Carry the last defined value into masked cells (per column).

        Cells before a column's first defined sample stay masked. Returns
        a new frame with ``fill: forward`` recorded in the metadata.
        """
        columns = {}
        masks = {}
        for name, vals in self.columns.items():
            v = vals.copy()
            m = self.masks[name].copy()
            last = None
            for i in range(v.size):
                if not m[i]:
                    last = v[i]
                elif last is not None:
                    v[i] = last
                    m[i] = False
            columns[name] = v
            masks[name] = m
        meta = dict(self.meta)
        meta["fill"] = "forward"
        return IndicatorFrame(dates=self.dates, columns=columns, masks=masks,
                              meta=meta)


def _format_cell(value, masked):
    return "" if masked else repr(float(value))


def write_frame(frame, fmt="csv"):
    """Serialize a frame to bytes; ``fmt`` is ``csv`` or ``json``."""
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(_META_PREFIX + json.dumps(frame.meta) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        names = list(frame.columns)
        writer.writerow(["date"] + names)
        date_strs = frame.dates.astype(str)
        for i in range(frame.dates.size):
            row = [date_strs[i]]
            row.extend(_format_cell(frame.columns[name][i],
                                    frame.masks[name][i]) for name in names)
            writer.writerow(row)
        return buf.getvalue().encode("utf-8")
    if fmt == "json":
        rows = []
        names = list(frame.columns)
        date_strs = frame.dates.astype(str)
        for i in range(frame.dates.size):
            row = {"date": str(date_strs[i])}
            for name in names:
                row[name] = (None if frame.masks[name][i]
                             else float(frame.columns[name][i]))
            rows.append(row)
        doc = {"meta": frame.meta, "rows": rows}
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    raise InvalidParameter(f"unknown format {fmt!r}")


def read_frame(data, fmt="csv"):
    """Parse bytes produced by :func:`write_frame` back into a frame."""
    text = data.decode("utf-8")
    if fmt == "csv":
        meta = {}
        lines = text.splitlines()
        body_start = 0
        for line in lines:
            if line.startswith(_META_PREFIX):
                meta = json.loads(line[len(_META_PREFIX):])
                body_start += 1
            elif line.startswith("#"):
                body_start += 1
            else:
                break
        reader = csv.reader(lines[body_start:])
        header = next(reader, None)
        if not header or header[0] != "date":
            raise ParseError("expected a header starting with 'date'",
                             line=body_start + 1)
        names = header[1:]
        dates = []
        cells = {name: [] for name in names}
        masks = {name: [] for name in names}
        for row in reader:
            dates.append(row[0])
            for name, field in zip(names, row[1:]):
                masked = field == ""
                masks[name].append(masked)
                cells[name].append(0.0 if masked else float(field))
        return IndicatorFrame(
            dates=np.array(dates, dtype="datetime64[D]"),
            columns={n: np.array(cells[n]) for n in names},
            masks={n: np.array(masks[n], dtype=bool) for n in names},
            meta=meta,
        )
    if fmt == "json":
        doc = json.loads(text)
        rows = doc["rows"]
        names = [k for k in rows[0] if k != "date"] if rows else []
        dates = np.array([r["date"] for r in rows], dtype="datetime64[D]")
        columns = {}
        masks = {}
        for name in names:
            vals = [r[name] for r in rows]
            masks[name] = np.array([v is None for v in vals], dtype=bool)
            columns[name] = np.array(
                [0.0 if v is None else float(v) for v in vals])
        return IndicatorFrame(dates=dates, columns=columns, masks=masks,
                              meta=doc.get("meta", {}))
    raise InvalidParameter(f"unknown format {fmt!r}")


def load_csv(path):
    """Read a two-column ``date,close`` CSV into a price series.

    Dates must be ISO-8601 and strictly ascending; prices must be
    positive finite numbers. Errors carry the 1-based line number of the
    offending row.
    """
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file", line=1) from None
        if [h.strip().lower() for h in header] != ["date", "close"]:
            raise ParseError(
                f"expected header 'date,close', got {','.join(header)!r}",
                line=1)
        dates = []
        values = []
        prev = None
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ParseError(
                    f"expected 2 fields, got {len(row)}", line=line_no)
            try:
                day = date.fromisoformat(row[0].strip())
            except ValueError:
                raise ParseError(
                    f"bad date {row[0]!r}", line=line_no) from None
            try:
                close = float(row[1])
            except ValueError:
                raise ParseError(
                    f"bad number {row[1]!r}", line=line_no) from None
            if not np.isfinite(close):
                raise ParseError(
                    f"non-finite price {row[1]!r}", line=line_no)
            if prev is not None:
                if day == prev:
                    raise DuplicateDate(line=line_no)
                if day < prev:
                    raise UnorderedDates(line=line_no)
            if close <= 0.0:
                raise NonPositivePrice(index=len(values), line=line_no)
            dates.append(day)
            values.append(close)
            prev = day
    if not dates:
        raise ParseError("no data rows", line=2)
    return SampledSeries(np.array(dates, dtype="datetime64[D]"),
                         np.array(values), unit=Unit.PRICE)
