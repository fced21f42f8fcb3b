"""Deterministic emission of sweep results: CSV, JSON and simple SVG plots.

Identical results must serialize to identical bytes, so no timestamps or
environment details are written, floats use their shortest round-trip
representation and row order is the grid order.  Unavailable values
(unstable or failed grid points) are written as ``NA`` so downstream
plots gap instead of interpolating through them.
"""

import json
import math
import os

TWO_PI = 2 * math.pi

LEGEND = ("NA = unavailable (stability gate or per-point failure); "
          "contrast X := 0 when both directions vanish; booleans are 1/0")


def format_value(v):
    if v is None:
        return "NA"
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def params_hz(params):
    """Config-unit view (Hz / K) of a parameter set, for provenance blocks."""
    out = {}
    for name in ("omega_c", "omega_m1", "omega_m2", "omega_b", "omega_drive",
                 "delta_B", "kappa_c", "kappa_m1", "kappa_m2", "gamma_b",
                 "g1", "g2", "J", "G0", "drive_amplitude", "G_direct"):
        value = getattr(params, name)
        if value is not None:
            out[f"{name}_hz"] = value / TWO_PI
    out["temperature_K"] = params.temperature
    return out


def provenance_lines(params, prov):
    """Human-readable provenance block for banners and CSV headers."""
    lines = []
    values = params_hz(params)
    origins = prov.origins if prov else {}
    for origin in ("paper", "assumed", "user"):
        keys = [k for k in values if origins.get(k) == origin]
        if not origins:
            keys = list(values) if origin == "user" else []
        if keys:
            pairs = ", ".join(f"{k}={format_value(values[k])}" for k in keys)
            lines.append(f"provenance ({origin}): {pairs}")
    if prov:
        for key in sorted(prov.notes):
            lines.append(f"note {key}: {prov.notes[key]}")
    return lines


def sweep_csv(result):
    spec = result.spec
    header = [
        f"# magnomech sweep: {spec.label}",
        f"# swept parameter: {spec.parameter}, {spec.count} points in "
        f"[{format_value(spec.start)}, {format_value(spec.stop)}]"
        + (" K" if spec.parameter == "temperature" else " rad/s"),
        f"# delta_B pair mode: {'on' if spec.pair_delta_b else 'off'}",
    ]
    header += [f"# {line}" for line in provenance_lines(spec.params, spec.provenance)]
    header.append(f"# legend: {LEGEND}")
    lines = header + [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def sweep_json(result):
    spec = result.spec
    prov = spec.provenance
    payload = {
        "label": spec.label,
        "parameter": spec.parameter,
        "start": spec.start,
        "stop": spec.stop,
        "count": spec.count,
        "pair_delta_b": spec.pair_delta_b,
        "params_hz": params_hz(spec.params),
        "provenance": {
            "origins": dict(sorted(prov.origins.items())) if prov else {},
            "notes": dict(sorted(prov.notes.items())) if prov else {},
        },
        "legend": LEGEND,
        "columns": list(result.columns),
        "rows": [[v for v in row] for row in result.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


_PALETTE = ("#1b6ca8", "#c1403d", "#2e854b", "#8454a3", "#b5761c",
            "#3a7f7f", "#93003a", "#5c5c1a")

_PLOT_PREFIXES = ("E_", "X_", "Rmin_", "varmin_")


def _plot_columns(columns):
    return [c for c in columns if c.startswith(_PLOT_PREFIXES)
            and not c.startswith("Rraw_")]


def sweep_svg(result, width=800, height=500):
    """Minimal line chart of the measure columns against the swept value.

    Rows with NA values break the polyline, leaving visible gaps at
    unstable or failed grid points.
    """
    spec = result.spec
    cols = _plot_columns(result.columns)
    xs = [row[0] for row in result.rows]
    series = {c: [row[result.columns.index(c)] for row in result.rows]
              for c in cols}

    finite = [v for vals in series.values() for v in vals if v is not None]
    y_lo = min(finite, default=0.0)
    y_hi = max(finite, default=1.0)
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    x_lo, x_hi = xs[0], xs[-1]
    ml, mr, mt, mb = 70, 160, 30, 50

    def sx(x):
        return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr)

    def sy(y):
        return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<g stroke="#444" stroke-width="1">'
        f'<line x1="{ml}" y1="{height - mb}" x2="{width - mr}" y2="{height - mb}"/>'
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}"/></g>',
        f'<text x="{ml}" y="{height - mb + 18}" font-size="11">{format_value(float(x_lo))}</text>',
        f'<text x="{width - mr - 40}" y="{height - mb + 18}" font-size="11">{format_value(float(x_hi))}</text>',
        f'<text x="{ml - 64}" y="{height - mb}" font-size="11">{format_value(float(y_lo))}</text>',
        f'<text x="{ml - 64}" y="{mt + 10}" font-size="11">{format_value(float(y_hi))}</text>',
        f'<text x="{(ml + width - mr) // 2}" y="{height - 12}" font-size="12" '
        f'text-anchor="middle">{spec.parameter}</text>',
        f'<text x="{ml}" y="{mt - 12}" font-size="12">{spec.label}</text>',
    ]
    for i, col in enumerate(cols):
        color = _PALETTE[i % len(_PALETTE)]
        segment = []
        segments = []
        for x, y in zip(xs, series[col]):
            if y is None:
                if len(segment) > 1:
                    segments.append(segment)
                segment = []
            else:
                segment.append(f"{sx(x):.2f},{sy(y):.2f}")
        if len(segment) > 1:
            segments.append(segment)
        for seg in segments:
            parts.append(f'<polyline fill="none" stroke="{color}" '
                         f'stroke-width="1.5" points="{" ".join(seg)}"/>')
        ly = mt + 16 * i
        parts.append(f'<line x1="{width - mr + 10}" y1="{ly}" '
                     f'x2="{width - mr + 30}" y2="{ly}" stroke="{color}" '
                     f'stroke-width="2"/>')
        parts.append(f'<text x="{width - mr + 36}" y="{ly + 4}" '
                     f'font-size="11">{col}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


_RENDERERS = {"csv": sweep_csv, "json": sweep_json, "svg-plot": sweep_svg}
_EXTENSIONS = {"csv": ".csv", "json": ".json", "svg-plot": ".svg"}

FORMATS = tuple(_RENDERERS)


def emit(result, fmt, out_dir):
    """Write one sweep result in the requested format; returns the path."""
    if fmt not in _RENDERERS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, result.spec.label + _EXTENSIONS[fmt])
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(_RENDERERS[fmt](result))
    return path
