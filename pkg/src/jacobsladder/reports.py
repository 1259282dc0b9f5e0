"""Serialization of reports: JSON, CSV, and plain plot data.

JSON output is deterministic (sorted keys, fixed indentation, trailing
newline, NaN mapped to null) so byte-identical runs produce
byte-identical files.  CSV flattens reports into one row per
verification with a fixed column set.  Plot data is a plain text format
of named (x, y) series separated by comment headers, consumable by any
plotting tool.
"""

import io
import json
import math
from dataclasses import dataclass

from .errors import DomainError
from .zeros import ZeroScan

_CSV_COLUMNS = ("formula_id", "T", "U", "N", "M", "gamma", "tan_alpha",
                "lhs", "rhs", "residual", "bound", "pass")


@dataclass(frozen=True)
class PlotSeries:
    name: str
    x: tuple
    y: tuple


class PlotData(list):
    """A list of PlotSeries with a text rendering."""

    def to_text(self):
        out = io.StringIO()
        for s in self:
            out.write(f"# series: {s.name}\n")
            for xv, yv in zip(s.x, s.y):
                out.write(f"{float(xv)!r} {float(yv)!r}\n")
            out.write("\n")
        return out.getvalue()


def _as_dict(obj):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return obj
    raise DomainError(f"cannot serialize {type(obj).__name__} as a report")


def _clean(obj):
    """Replace non-finite floats by None so JSON stays strict."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _json_bytes(payload):
    return (json.dumps(_clean(payload), sort_keys=True, indent=2,
                       allow_nan=False) + "\n").encode()


def _iter_reports(obj):
    """Yield flat VerificationReport-like dicts from any report shape."""
    if isinstance(obj, (list, tuple)) and not isinstance(obj, ZeroScan):
        for item in obj:
            yield from _iter_reports(item)
        return
    d = _as_dict(obj)
    if "reports" in d:
        for r in d["reports"]:
            yield r
    else:
        yield d


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv_bytes(obj):
    if isinstance(obj, ZeroScan):
        out = ["gamma,lo,hi,residual"]
        for r in obj:
            out.append(f"{float(r.gamma)!r},{float(r.bracket[0])!r},"
                       f"{float(r.bracket[1])!r},{float(r.residual)!r}")
        return ("\n".join(out) + "\n").encode()
    out = [",".join(_CSV_COLUMNS)]
    for d in _iter_reports(obj):
        inputs = d.get("inputs", {})
        row = []
        for col in _CSV_COLUMNS:
            if col in ("formula_id", "lhs", "rhs", "residual", "bound", "pass"):
                row.append(_csv_cell(d.get(col)))
            else:
                row.append(_csv_cell(inputs.get(col)))
        out.append(",".join(row))
    return ("\n".join(out) + "\n").encode()


def emit_report(report, format):
    """Serialize a report (or list of reports) to bytes.

    format is one of "json", "csv", "plot-data".  Any object with a
    to_dict method serializes to JSON; suites flatten to CSV rows; zero
    scans have their own CSV shape; PlotData renders as named series.
    """
    if format == "json":
        if isinstance(report, ZeroScan):
            payload = {
                "zeros": [{"gamma": r.gamma, "bracket": list(r.bracket),
                           "residual": r.residual} for r in report],
                "warnings": list(report.warnings),
            }
        elif isinstance(report, PlotData):
            payload = {"series": [{"name": s.name, "x": list(s.x),
                                   "y": list(s.y)} for s in report]}
        elif isinstance(report, (list, tuple)):
            payload = [_as_dict(r) for r in report]
        else:
            payload = _as_dict(report)
        return _json_bytes(payload)
    if format == "csv":
        return _csv_bytes(report)
    if format == "plot-data":
        if not isinstance(report, PlotData):
            raise DomainError("plot-data format needs a PlotData object")
        return report.to_text().encode()
    raise DomainError(f"unknown report format {format!r}")


def ladder_plot(ctx, lo, hi, n=512, chords=()):
    """Series for the curve y = phi(T)/2 with optional chords overlaid."""
    from .ladder import phi  # local import to keep module load light
    import numpy as np
    xs = np.linspace(lo, hi, n)
    ys = [0.5 * phi(ctx, float(t)) for t in xs]
    data = PlotData([PlotSeries("half_phi", tuple(float(v) for v in xs),
                                tuple(ys))])
    for i, ch in enumerate(chords):
        data.append(PlotSeries(f"chord_{i}",
                               (ch.T, ch.T + ch.U),
                               (ch.y_left, ch.y_right)))
    return data


def residual_plot(table, lo, hi, n=512):
    """Series of the mean-value residual R(T) over [lo, hi]."""
    from .quadrature import hl_residual
    import numpy as np
    xs = np.linspace(lo, hi, n)
    ys = [hl_residual(table, float(t)).R for t in xs]
    return PlotData([PlotSeries("residual",
                                tuple(float(v) for v in xs), tuple(ys))])


def slope_plot(ctx, anchors, eps=0.01):
    """Series of measured tan alpha(T, U0) next to the asymptotic slope."""
    from .chords import chord
    from .verify import asymptotic_tan
    tans, asys = [], []
    for T in anchors:
        U0 = T ** (1.0 / 3.0 + 2.0 * eps)
        tans.append(chord(ctx, T, U0).tan_alpha)
        asys.append(asymptotic_tan(T, ctx.c))
    ax = tuple(float(t) for t in anchors)
    return PlotData([PlotSeries("tan_alpha", ax, tuple(tans)),
                     PlotSeries("asymptotic", ax, tuple(asys))])
