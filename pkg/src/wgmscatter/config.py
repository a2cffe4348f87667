"""Flat key=value configuration files.

Format: one `key = value` per line, `#` starts a comment, blank lines are
skipped. Length values carry an explicit SI suffix (nm, um, mm, cm, m); a bare
number is accepted only for an exact zero. Dimensionless values must be bare.
Unknown keys are errors (with the line number), as are duplicates.

Sweep axes are declared with `sweep.<key> = <values>` where <values> is a
comma-separated list (`10nm, 20nm, 50nm`), `linspace(lo, hi, count)` or
`logspace(lo, hi, count)` with lo/hi in the key's unit convention. The
`outputs = name1, name2, ...` line selects which derived scalars a sweep
tabulates (see sweep.OUTPUTS for the registry).

Example::

    # baseline
    R = 10um
    n = 1.7
    r_s = 50nm
    eps_s = 12
    lambda1 = 977nm
    lambda2 = 1550nm
    w0 = 5um
    s = 0
    f1_0 = 0.4
    sweep.r_s = logspace(10nm, 100nm, 50)
    outputs = kappa_in, kappa_R, eta
"""
from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from decimal import Decimal

from .params import (
    BeamSpec,
    MicrosphereSpec,
    ModeSpec,
    ScattererSpec,
    SystemParams,
    validate,
)

log = logging.getLogger(__name__)

# decimal exponents, applied via Decimal.scaleb so "10 um" parses to exactly
# the float of the literal 10e-6 (multiplying by 1e-6 lands one ulp off)
_LENGTH_UNITS = {"nm": -9, "um": -6, "µm": -6, "mm": -3, "cm": -2, "m": 0}

# key -> (kind, may_be_negative); kind "length" takes a unit suffix
_SCALAR_KEYS: dict[str, tuple[str, bool]] = {
    "R": ("length", False),
    "n": ("plain", False),
    "r_s": ("length", False),
    "eps_s": ("plain", False),
    "lambda1": ("length", False),
    "lambda2": ("length", False),
    "w0": ("length", False),
    "s": ("length", True),
    "f1_0": ("plain", False),
    "f2_0": ("plain", False),
    "Q0": ("plain", False),
    "phi": ("plain", True),
}

_REQUIRED = ("R", "n", "r_s", "eps_s", "lambda1", "lambda2", "w0", "s", "f1_0")
_SWEEPABLE = tuple(_SCALAR_KEYS)

_VALUE_RE = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([a-zA-Zµ]*)$")
_RANGE_RE = re.compile(r"^(linspace|logspace)\s*\(\s*([^,]+)\s*,\s*([^,]+)\s*,\s*(\d+)\s*\)$")


class ConfigError(ValueError):
    """Malformed or inconsistent configuration text."""


@dataclass(frozen=True)
class SweepGrid:
    """Cartesian sweep: named value lists plus the requested output scalars.

    No axes means a single-point grid (one row from the base parameters).
    Axis order is the declaration order and fixes the row-major point order.
    """

    axes: tuple[tuple[str, tuple[float, ...]], ...] = ()
    outputs: tuple[str, ...] = ()
    phi: float = 0.0

    def __post_init__(self) -> None:
        for name, values in self.axes:
            if len(values) == 0:
                raise ConfigError(f"sweep axis {name!r} is empty")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(values) for _, values in self.axes)

    @property
    def n_points(self) -> int:
        return math.prod(self.shape) if self.axes else 1


def _parse_scalar(key: str, raw: str, lineno: int) -> float:
    kind, signed = _SCALAR_KEYS[key]
    m = _VALUE_RE.match(raw.strip())
    if m is None:
        raise ConfigError(f"line {lineno}: cannot parse value {raw!r} for key {key!r}")
    number, unit = float(m.group(1)), m.group(2)
    if kind == "plain":
        if unit:
            raise ConfigError(f"line {lineno}: key {key!r} is dimensionless, got unit {unit!r}")
        value = number
    else:
        if unit:
            if unit not in _LENGTH_UNITS:
                raise ConfigError(
                    f"line {lineno}: unknown length unit {unit!r} for key {key!r} "
                    f"(use one of {sorted(set(_LENGTH_UNITS) - {'µm'})})"
                )
            value = float(Decimal(m.group(1)).scaleb(_LENGTH_UNITS[unit]))
        elif number == 0.0:
            value = 0.0
        else:
            raise ConfigError(
                f"line {lineno}: length key {key!r} needs an explicit unit suffix "
                f"(nm/um/mm/cm/m), got bare {raw!r}"
            )
    if not signed and value < 0:
        raise ConfigError(f"line {lineno}: key {key!r} must be nonnegative, got {value}")
    return value


def _parse_axis(key: str, raw: str, lineno: int) -> tuple[float, ...]:
    raw = raw.strip()
    m = _RANGE_RE.match(raw)
    if m is not None:
        kind, lo_s, hi_s, count_s = m.groups()
        lo = _parse_scalar(key, lo_s, lineno)
        hi = _parse_scalar(key, hi_s, lineno)
        count = int(count_s)
        if count < 1:
            raise ConfigError(f"line {lineno}: sweep count must be >= 1, got {count}")
        if count == 1:
            return (lo,)
        if kind == "linspace":
            stepw = (hi - lo) / (count - 1)
            return tuple(lo + i * stepw for i in range(count))
        if lo <= 0 or hi <= 0:
            raise ConfigError(f"line {lineno}: logspace endpoints must be positive")
        ratio = (hi / lo) ** (1.0 / (count - 1))
        return tuple(lo * ratio**i for i in range(count))
    return tuple(_parse_scalar(key, part, lineno) for part in raw.split(","))


def parse_config(text: str) -> tuple[SystemParams, SweepGrid]:
    """Parse configuration text into validated parameters and a sweep grid.

    Missing Q0 defaults to 1e8 (logged); missing f2_0 defaults to f1_0.
    All other scalar keys are required. Raises ConfigError on any syntax,
    unit, or range problem, naming the offending line/key.
    """
    scalars: dict[str, float] = {}
    axes: list[tuple[str, tuple[float, ...]]] = []
    outputs: tuple[str, ...] = ()
    seen: set[str] = set()

    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"line {lineno}: expected key = value, got {body!r}")
        key, raw = (part.strip() for part in body.split("=", 1))
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        if key == "outputs":
            outputs = tuple(p.strip() for p in raw.split(",") if p.strip())
            if not outputs:
                raise ConfigError(f"line {lineno}: outputs list is empty")
        elif key.startswith("sweep."):
            axis_key = key[len("sweep.") :]
            if axis_key not in _SWEEPABLE:
                raise ConfigError(
                    f"line {lineno}: cannot sweep {axis_key!r}; "
                    f"sweepable keys: {', '.join(_SWEEPABLE)}"
                )
            values = _parse_axis(axis_key, raw, lineno)
            if not values:
                raise ConfigError(f"line {lineno}: sweep axis {axis_key!r} is empty")
            axes.append((axis_key, values))
        elif key in _SCALAR_KEYS:
            scalars[key] = _parse_scalar(key, raw, lineno)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")

    missing = [k for k in _REQUIRED if k not in scalars]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")
    if "Q0" not in scalars:
        scalars["Q0"] = 1e8
        log.info("Q0 not given; using the default intrinsic quality factor 1e8")
    if "f2_0" not in scalars:
        scalars["f2_0"] = scalars["f1_0"]

    params = build_params(scalars)
    grid = SweepGrid(axes=tuple(axes), outputs=outputs, phi=scalars.get("phi", 0.0))
    return params, grid


def build_params(scalars: dict[str, float]) -> SystemParams:
    """Assemble and validate SystemParams from resolved SI scalars."""
    params = SystemParams(
        sphere=MicrosphereSpec(R=scalars["R"], n=scalars["n"], Q0=scalars["Q0"]),
        scatterer=ScattererSpec(r_s=scalars["r_s"], eps_s=scalars["eps_s"]),
        beam=BeamSpec(wavelength=scalars["lambda1"], w0=scalars["w0"], s=scalars["s"]),
        excitation=ModeSpec(wavelength=scalars["lambda1"], f0=scalars["f1_0"]),
        lasing=ModeSpec(wavelength=scalars["lambda2"], f0=scalars["f2_0"]),
    )
    return validate(params)


def params_to_scalars(params: SystemParams, phi: float = 0.0) -> dict[str, float]:
    """Flatten SystemParams back to the config key space (SI units)."""
    return {
        "R": params.sphere.R,
        "n": params.sphere.n,
        "Q0": params.sphere.Q0,
        "r_s": params.scatterer.r_s,
        "eps_s": params.scatterer.eps_s,
        "lambda1": params.beam.wavelength,
        "lambda2": params.lasing.wavelength,
        "w0": params.beam.w0,
        "s": params.beam.s,
        "f1_0": params.excitation.f0,
        "f2_0": params.lasing.f0,
        "phi": phi,
    }
