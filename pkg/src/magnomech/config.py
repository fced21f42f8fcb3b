"""Configuration files: INI-style sections with unit-suffixed keys.

Frequencies and rates are given in ordinary hertz under keys ending in
``_hz`` and are converted to angular units (rad/s) on load; temperatures
use the ``_K`` suffix.  Unknown or ambiguous keys are rejected.  The
optional ``[provenance]`` section records which values are published and
which are assumptions, so that runs using assumptions can be detected by
their exit status.

Sections::

    [system]      all PhysicalParams fields (required)
    [sweep]       parameter, start/stop (suffixed), count, pair_delta_b
    [outputs]     bipartite, tripartite, wigner, contrast
    [provenance]  paper = <keys>, assumed = <keys>

A config reference that is not an existing file may name a shipped
preset (currently ``table1``).
"""

import configparser
import dataclasses
import math
import os
from dataclasses import dataclass

from .errors import ConfigError
from .model import PhysicalParams
from .presets import (TABLE1_HZ, default_sweep, table1_params,
                      table1_provenance)
from .sweep import Provenance, SweepSpec

TWO_PI = 2 * math.pi

#: [system] keys; value units are encoded in the suffix
SYSTEM_KEYS = (
    "omega_c_hz", "omega_m1_hz", "omega_m2_hz", "omega_b_hz",
    "omega_drive_hz", "delta_B_hz", "kappa_c_hz", "kappa_m1_hz",
    "kappa_m2_hz", "gamma_b_hz", "g1_hz", "g2_hz", "J_hz", "G0_hz",
    "temperature_K",
)
DRIVE_KEYS = ("drive_amplitude_hz", "G_direct_hz")
SWEEP_KEYS = ("parameter", "start_hz", "stop_hz", "start_K", "stop_K",
              "count", "pair_delta_b")
OUTPUT_KEYS = ("bipartite", "tripartite", "wigner", "contrast")
PROVENANCE_KEYS = ("paper", "assumed")
SECTIONS = ("system", "sweep", "outputs", "provenance")

PRESET_NAMES = ("table1",)


@dataclass(frozen=True)
class ParsedConfig:
    """A validated configuration: parameters, optional sweep, provenance."""

    label: str
    params: PhysicalParams
    sweep: SweepSpec | None
    provenance: Provenance
    raw_values: dict


def _unknown_key_error(section, key, known):
    hints = [k for k in known if k.lower() == f"{key}_hz".lower()
             or k.lower() == f"{key}_k".lower()]
    if hints:
        return ConfigError(
            f"[{section}] key {key!r} is missing its unit suffix; "
            f"did you mean {hints[0]!r}?")
    return ConfigError(f"[{section}] unknown key {key!r}")


def _get_float(section, key, raw):
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(
            f"[{section}] {key} = {raw!r} is not a number") from None


def _params_from_section(sec):
    present = set(sec)
    known = set(SYSTEM_KEYS) | set(DRIVE_KEYS)
    for key in sorted(present - known):
        raise _unknown_key_error("system", key, known)
    missing = [k for k in SYSTEM_KEYS if k not in present]
    if missing:
        raise ConfigError(
            "[system] missing required keys: " + ", ".join(missing))
    drive_given = [k for k in DRIVE_KEYS if k in present]
    if len(drive_given) != 1:
        raise ConfigError(
            "[system] exactly one of drive_amplitude_hz or G_direct_hz "
            f"must be set (found {len(drive_given)})")

    kw = {}
    for key in SYSTEM_KEYS + tuple(drive_given):
        value = _get_float("system", key, sec[key])
        if key.endswith("_hz"):
            kw[key[:-3]] = TWO_PI * value
        else:
            kw[key[:-2]] = value
    return PhysicalParams(**kw)


def _split_selections(raw, width, what):
    out = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        sel = tuple(part.strip() for part in chunk.split(":"))
        if len(sel) != width:
            raise ConfigError(
                f"[outputs] {what} entry {chunk!r} must have {width} "
                "colon-separated mode labels")
        out.append(sel)
    return tuple(out)


def _sweep_from_sections(cfg, params, label):
    sec = cfg["sweep"]
    for key in sorted(set(sec) - set(SWEEP_KEYS)):
        raise _unknown_key_error("sweep", key, SWEEP_KEYS)
    if "parameter" not in sec:
        raise ConfigError("[sweep] missing required key: parameter")
    parameter = sec["parameter"].strip()

    kelvin = parameter == "temperature"
    want, reject = (("start_K", "stop_K"), ("start_hz", "stop_hz")) if kelvin \
        else (("start_hz", "stop_hz"), ("start_K", "stop_K"))
    for key in reject:
        if key in sec:
            raise ConfigError(
                f"[sweep] {key} has the wrong unit suffix for parameter "
                f"{parameter!r}; use {want[0]}/{want[1]}")
    missing = [k for k in want + ("count",) if k not in sec]
    if missing:
        raise ConfigError("[sweep] missing required keys: " + ", ".join(missing))

    scale = 1.0 if kelvin else TWO_PI
    start = scale * _get_float("sweep", want[0], sec[want[0]])
    stop = scale * _get_float("sweep", want[1], sec[want[1]])
    try:
        count = int(sec["count"])
    except ValueError:
        raise ConfigError(f"[sweep] count = {sec['count']!r} is not an integer") from None
    try:
        pair = sec.getboolean("pair_delta_b", fallback=False)
    except ValueError:
        raise ConfigError("[sweep] pair_delta_b must be a boolean") from None

    bipartite = tripartite = wigner = ()
    contrast = False
    if cfg.has_section("outputs"):
        out = cfg["outputs"]
        for key in sorted(set(out) - set(OUTPUT_KEYS)):
            raise _unknown_key_error("outputs", key, OUTPUT_KEYS)
        bipartite = _split_selections(out.get("bipartite", ""), 2, "bipartite")
        tripartite = _split_selections(out.get("tripartite", ""), 3, "tripartite")
        wigner = tuple(m.strip() for m in out.get("wigner", "").split(",")
                       if m.strip())
        try:
            contrast = out.getboolean("contrast", fallback=False)
        except ValueError:
            raise ConfigError("[outputs] contrast must be a boolean") from None

    return SweepSpec(
        params=params, parameter=parameter, start=start, stop=stop,
        count=count, bipartite=bipartite, tripartite=tripartite,
        wigner_modes=wigner, contrast=contrast, pair_delta_b=pair,
        label=label)


def _provenance_from_section(cfg):
    origins = {}
    if cfg.has_section("provenance"):
        sec = cfg["provenance"]
        for key in sorted(set(sec) - set(PROVENANCE_KEYS)):
            raise _unknown_key_error("provenance", key, PROVENANCE_KEYS)
        for origin in PROVENANCE_KEYS:
            for key in sec.get(origin, "").split(","):
                key = key.strip()
                if not key:
                    continue
                if key not in SYSTEM_KEYS and key not in DRIVE_KEYS:
                    raise ConfigError(
                        f"[provenance] {origin} lists unknown key {key!r}")
                origins[key] = origin
    for key in SYSTEM_KEYS:
        origins.setdefault(key, "user")
    return Provenance(origins, {})


def parse_config(ref):
    """Load a config file (or shipped preset name) into a ParsedConfig.

    Raises ConfigError with the offending section/key on any schema
    violation; duplicate keys are rejected with their line numbers.
    """
    if not os.path.exists(ref):
        if ref in PRESET_NAMES:
            spec = dataclasses.replace(default_sweep(), label="table1")
            return ParsedConfig("table1", table1_params(), spec,
                                table1_provenance(), dict(TABLE1_HZ))
        raise ConfigError(f"{ref!r} is neither a config file nor a preset "
                          f"name (presets: {', '.join(PRESET_NAMES)})")

    cfg = configparser.ConfigParser(interpolation=None, strict=True)
    cfg.optionxform = str  # keys are case-sensitive (delta_B_hz, G0_hz, ...)
    try:
        with open(ref, encoding="utf-8") as fh:
            cfg.read_file(fh, source=ref)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {ref}: {exc}") from exc

    for section in cfg.sections():
        if section not in SECTIONS:
            raise ConfigError(f"unknown section [{section}]")
    if not cfg.has_section("system"):
        raise ConfigError(
            "[system] section is required and missing; required keys: "
            + ", ".join(SYSTEM_KEYS))

    params = _params_from_section(cfg["system"])
    label = os.path.splitext(os.path.basename(ref))[0]
    sweep = _sweep_from_sections(cfg, params, label) if cfg.has_section("sweep") \
        else None
    if sweep is None and cfg.has_section("outputs"):
        raise ConfigError("[outputs] given without a [sweep] section")
    provenance = _provenance_from_section(cfg)
    raw = {key: cfg["system"][key] for key in cfg["system"]}
    return ParsedConfig(label, params, sweep, provenance, raw)
