"""Parameter sweeps over the full model -> covariance -> measures pipeline.

Each grid point builds the linearized model, gates on stability, solves
the Lyapunov equation and evaluates the requested entanglement measures.
Unstable or failed points are recorded in-row as not-available markers;
a sweep never aborts on a single bad point.  Grid points are independent
and may be distributed over a thread pool; output rows are always
assembled in grid order, so results do not depend on the worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, MagnomechError
from .gaussian import MODE_LABELS, MODES, reduce, symplectic_eigenvalues
from .lyapunov import solve_lyapunov
from .measures import contrast_ratio, log_negativity, min_residual_contangle
from .model import build_diffusion, build_drift, is_stable, steady_state
from .wigner import quadrature_squeezing

#: sweepable PhysicalParams fields
_FIELD_PARAMS = (
    "omega_c", "omega_m1", "omega_m2", "omega_b", "omega_drive", "delta_B",
    "kappa_c", "kappa_m1", "kappa_m2", "gamma_b", "g1", "g2", "J", "G0",
    "temperature", "drive_amplitude", "G_direct",
)
#: detuning aliases; each maps onto exactly one mode frequency
_DETUNING_PARAMS = {
    "delta_c": "omega_c",
    "delta_m1": "omega_m1",
    "delta_m2": "omega_m2",
}
SWEEPABLE = _FIELD_PARAMS + tuple(_DETUNING_PARAMS)


@dataclass(frozen=True)
class Provenance:
    """Where each configuration value came from: paper, assumed or user."""

    origins: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def has_assumptions(self):
        return any(origin == "assumed" for origin in self.origins.values())

    def grouped(self):
        groups = {"paper": [], "assumed": [], "user": []}
        for key in sorted(self.origins):
            groups.setdefault(self.origins[key], []).append(key)
        return groups


@dataclass(frozen=True)
class SweepSpec:
    """One linear sweep of a single parameter with requested outputs."""

    params: object
    parameter: str
    start: float
    stop: float
    count: int
    bipartite: tuple = ()
    tripartite: tuple = ()
    wigner_modes: tuple = ()
    contrast: bool = False
    pair_delta_b: bool = False
    label: str = "sweep"
    provenance: Provenance | None = None

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise ConfigError(
                f"unknown sweep parameter {self.parameter!r}; "
                f"choose one of {', '.join(SWEEPABLE)}")
        if self.count < 2:
            raise ConfigError("sweep count must be >= 2")
        if not self.start < self.stop:
            raise ConfigError("sweep requires start < stop")
        if not (self.bipartite or self.tripartite or self.wigner_modes):
            raise ConfigError("sweep requests no outputs")
        if self.contrast and not self.pair_delta_b:
            raise ConfigError("contrast ratios require the delta_B pair mode")
        if self.pair_delta_b and self.parameter == "delta_B":
            raise ConfigError("cannot sweep delta_B while pairing over its sign")
        for attr, width in (("bipartite", 2), ("tripartite", 3)):
            for sel in getattr(self, attr):
                if len(sel) != width or any(m not in MODES for m in sel):
                    raise ConfigError(f"invalid mode selection {sel!r} in {attr}")
        for mode in self.wigner_modes:
            if mode not in MODES:
                raise ConfigError(f"invalid Wigner mode {mode!r}")
        if self.parameter in ("drive_amplitude", "G_direct") and \
                getattr(self.params, self.parameter) is None:
            raise ConfigError(
                f"cannot sweep {self.parameter}: base configuration uses "
                "the other drive pathway")

    def grid(self):
        return np.linspace(self.start, self.stop, self.count)


@dataclass
class SweepResult:
    """Tabular sweep output: one row per grid point, in grid order."""

    spec: SweepSpec
    columns: list
    rows: list


def apply_sweep_value(params, name, value):
    """Set one sweepable parameter; detunings move their mode frequency."""
    value = float(value)
    if name in _DETUNING_PARAMS:
        return params.with_changes(
            **{_DETUNING_PARAMS[name]: params.omega_drive + value})
    return params.with_changes(**{name: value})


def solve_covariance(params):
    """Model pipeline for one parameter set.

    Returns (steady_state, drift, diffusion, stability_report, C) where C
    is None when the stability gate fails.
    """
    ss = steady_state(params)
    A = build_drift(params, ss)
    F = build_diffusion(params)
    report = is_stable(A)
    C = solve_lyapunov(A, F) if report.stable else None
    return ss, A, F, report, C


def _pair_name(sel):
    return "".join(sel)


def _evaluate_one(params, spec):
    """Measures for a single direction at a single grid point."""
    out = {"status": "ok", "stable": None, "abscissa": None, "nu_min": None}
    for sel in spec.bipartite:
        out[f"E_{_pair_name(sel)}"] = None
    for sel in spec.tripartite:
        out[f"Rmin_{_pair_name(sel)}"] = None
        out[f"Rraw_{_pair_name(sel)}"] = None
    for mode in spec.wigner_modes:
        out[f"varmin_{mode}"] = None
        out[f"squeezed_{mode}"] = None
    try:
        _, _, _, report, C = solve_covariance(params)
        out["stable"] = report.stable
        out["abscissa"] = float(report.abscissa)
        if not report.stable:
            out["status"] = "unstable"
            return out
        out["nu_min"] = float(symplectic_eigenvalues(C).min())
        for sel in spec.bipartite:
            res = log_negativity(reduce(C, sel), pair=sel)
            out[f"E_{_pair_name(sel)}"] = float(res.E_n)
        for sel in spec.tripartite:
            res = min_residual_contangle(reduce(C, sel), triple=sel)
            out[f"Rmin_{_pair_name(sel)}"] = float(max(0.0, res.R_min))
            out[f"Rraw_{_pair_name(sel)}"] = float(min(res.raw.values()))
        for mode in spec.wigner_modes:
            v_min, squeezed = quadrature_squeezing(reduce(C, [mode]))
            out[f"varmin_{mode}"] = float(v_min)
            out[f"squeezed_{mode}"] = bool(squeezed)
    except MagnomechError as exc:
        out["status"] = f"error:{type(exc).__name__}"
    return out


def _norm_column(spec):
    """Optional normalized-value column for the natural figure axes."""
    if spec.parameter in ("delta_c", "delta_m1", "delta_m2", "delta_B"):
        return f"{spec.parameter}_over_omega_b", spec.params.omega_b
    if spec.parameter == "J":
        return "J_over_g1", spec.params.g1
    return None, None


def _columns(spec):
    norm_name, _ = _norm_column(spec)
    cols = [spec.parameter] + ([norm_name] if norm_name else [])
    suffixes = ("_pos", "_neg") if spec.pair_delta_b else ("",)
    for sfx in suffixes:
        cols += [f"stable{sfx}", f"abscissa{sfx}", f"nu_min{sfx}"]
    for sel in spec.bipartite:
        name = _pair_name(sel)
        for sfx in suffixes:
            cols.append(f"E_{name}{sfx}")
        if spec.pair_delta_b and spec.contrast:
            cols.append(f"X_{name}")
    for sel in spec.tripartite:
        name = _pair_name(sel)
        for sfx in suffixes:
            cols += [f"Rmin_{name}{sfx}", f"Rraw_{name}{sfx}"]
        if spec.pair_delta_b and spec.contrast:
            cols.append(f"X_R_{name}")
    for mode in spec.wigner_modes:
        for sfx in suffixes:
            cols += [f"varmin_{mode}{sfx}", f"squeezed_{mode}{sfx}"]
    for sfx in suffixes:
        cols.append(f"status{sfx}")
    return cols


def _contrast_or_none(e_pos, e_neg):
    if e_pos is None or e_neg is None:
        return None
    return float(contrast_ratio(e_pos, e_neg))


def _point_row(spec, value):
    value = float(value)
    norm_name, norm_scale = _norm_column(spec)
    row = {spec.parameter: value}
    if norm_name:
        row[norm_name] = value / norm_scale

    base = apply_sweep_value(spec.params, spec.parameter, value)
    if spec.pair_delta_b:
        magnitude = abs(base.delta_B)
        sides = {
            "_pos": _evaluate_one(base.with_changes(delta_B=+magnitude), spec),
            "_neg": _evaluate_one(base.with_changes(delta_B=-magnitude), spec),
        }
        for sfx, res in sides.items():
            for key, val in res.items():
                row[f"{key}{sfx}"] = val
        if spec.contrast:
            for sel in spec.bipartite:
                name = _pair_name(sel)
                row[f"X_{name}"] = _contrast_or_none(
                    sides["_pos"][f"E_{name}"], sides["_neg"][f"E_{name}"])
            for sel in spec.tripartite:
                name = _pair_name(sel)
                row[f"X_R_{name}"] = _contrast_or_none(
                    sides["_pos"][f"Rmin_{name}"], sides["_neg"][f"Rmin_{name}"])
    else:
        row.update(_evaluate_one(base, spec))
    return row


def run_sweep(spec, threads=1):
    """Run one sweep and return its result table.

    ``threads`` bounds the worker pool; the output is identical for any
    value because every grid point is computed independently and rows are
    collected in grid order.
    """
    values = spec.grid()
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda v: _point_row(spec, v), values))
    else:
        records = [_point_row(spec, v) for v in values]
    columns = _columns(spec)
    rows = [tuple(rec.get(col) for col in columns) for rec in records]
    return SweepResult(spec, columns, rows)
