"""Parameter sweeps and their serialized datasets.

A sweep evaluates a registry of derived scalars over the Cartesian product of
the configured axes, in row-major order of the axes as declared. Evaluation
of one grid point is a pure function of the parameter values, so results are
independent of the worker count; rows are collected in grid order, making the
serialized bytes reproducible run to run (no timestamps are ever written).

CSV dialect: comma separator, `.` decimal point, LF line endings, first line
is the header with unit-suffixed column names, every float printed with 17
significant digits (lossless round trip). Rate columns are emitted in both
rad/s and Hz. A trailing `# provenance: {json}` comment line carries the
resolved configuration so a file is self-describing; parsing restores it.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable

from . import __version__
from .beam_optics import focus_params
from .config import SweepGrid, build_params, params_to_scalars
from .coupling import excitation_rates, lasing_rates
from .emission import critical_angle, emission_profile
from .params import ParameterError, SystemParams
from .spectral import excitation_efficiency, t_min

_TWO_PI = 2.0 * math.pi


class SweepError(RuntimeError):
    """A grid point failed to evaluate; the message names the point."""


@dataclass(frozen=True)
class Dataset:
    """Rectangular numeric table with unit-tagged columns and provenance."""

    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    provenance: dict

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_fmt(v) for v in row))
        lines.append("# provenance: " + json.dumps(self.provenance, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "provenance": self.provenance,
            "columns": list(self.columns),
            "rows": [dict(zip(self.columns, row)) for row in self.rows],
        }
        return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def parse_csv(text: str) -> Dataset:
    """Inverse of Dataset.to_csv (exact float round trip)."""
    lines = [ln for ln in text.split("\n") if ln != ""]
    provenance: dict = {}
    data_lines = []
    for ln in lines:
        if ln.startswith("# provenance: "):
            provenance = json.loads(ln[len("# provenance: ") :])
        elif not ln.startswith("#"):
            data_lines.append(ln)
    if not data_lines:
        raise ParameterError("CSV has no header line")
    columns = tuple(data_lines[0].split(","))
    rows = tuple(tuple(float(tok) for tok in ln.split(",")) for ln in data_lines[1:])
    return Dataset(columns=columns, rows=rows, provenance=provenance)


# ---------------------------------------------------------------------------
# output registry

# name -> (column base with unit suffix, is_rate, function(scalars) -> float)
# Rate outputs additionally get a *_Hz twin column (value / 2 pi).

def _with_params(fn: Callable[[SystemParams, dict], float]) -> Callable[[dict], float]:
    def wrapped(scalars: dict) -> float:
        return fn(build_params(scalars), scalars)

    return wrapped


OUTPUTS: dict[str, tuple[str, bool, Callable[[dict], float]]] = {
    "F": ("F_m", False, _with_params(lambda p, s: focus_params(p).F)),
    "w0_prime": ("w0_prime_m", False, _with_params(lambda p, s: focus_params(p).w0_prime)),
    "s_prime": ("s_prime_m", False, _with_params(lambda p, s: focus_params(p).s_prime)),
    "z_R": ("z_R_m", False, _with_params(lambda p, s: focus_params(p).z_R)),
    "z_R_prime": ("z_R_prime_m", False, _with_params(lambda p, s: focus_params(p).z_R_prime)),
    "w_s": ("w_s_m", False, _with_params(lambda p, s: focus_params(p).w_s)),
    "A_s": ("A_s_m2", False, _with_params(lambda p, s: focus_params(p).A_s)),
    "minification": ("minification", False, _with_params(lambda p, s: focus_params(p).w_s / p.beam.w0)),
    "omega1": ("omega1_rad_s", False, _with_params(lambda p, s: p.omega1)),
    "omega2": ("omega2_rad_s", False, _with_params(lambda p, s: p.omega2)),
    "g1": ("g1", True, _with_params(lambda p, s: excitation_rates(p).g_self)),
    "kappa_in": ("kappa_in", True, _with_params(lambda p, s: excitation_rates(p).kappa_in)),
    "kappa_R": ("kappa_R", True, _with_params(lambda p, s: excitation_rates(p).kappa_R)),
    "kappa_0": ("kappa_0", True, _with_params(lambda p, s: excitation_rates(p).kappa_0)),
    "eta": ("eta", False, _with_params(lambda p, s: excitation_efficiency(excitation_rates(p)))),
    "t_min": ("t_min", False, _with_params(lambda p, s: t_min(excitation_rates(p)))),
    "g2": ("g2", True, _with_params(lambda p, s: lasing_rates(p).g_self)),
    "kappa_out": ("kappa_out", True, _with_params(lambda p, s: lasing_rates(p).kappa_R)),
    "Q_out": ("Q_out", False, _with_params(lambda p, s: p.omega2 / lasing_rates(p).kappa_R)),
    "theta_c": ("theta_c_deg", False, _with_params(lambda p, s: critical_angle(p.sphere.n))),
    "Theta_half": ("Theta_half_deg", False, None),  # filled below (needs phi + mode)
}

_AXIS_COLUMNS = {
    "R": "R_m",
    "n": "n",
    "r_s": "r_s_m",
    "eps_s": "eps_s",
    "lambda1": "lambda1_m",
    "lambda2": "lambda2_m",
    "w0": "w0_m",
    "s": "s_m",
    "f1_0": "f1_0",
    "f2_0": "f2_0",
    "Q0": "Q0",
    "phi": "phi_deg",
}


def _theta_half_output(scalars: dict, normalization: str, grid_size: int, nbins: int) -> float:
    profile = emission_profile(
        scalars["n"],
        scalars.get("phi", 0.0),
        normalization_mode=normalization,
        grid_size=grid_size,
        nbins=nbins,
    )
    if profile.theta_half is None:
        return float("nan")
    return profile.theta_half


def run_sweep(
    params: SystemParams,
    grid: SweepGrid,
    workers: int = 1,
    normalization: str = "transmitted",
    profile_grid_size: int = 100_001,
    profile_nbins: int = 2000,
) -> Dataset:
    """Evaluate the requested outputs over the grid; returns a Dataset.

    Rows appear in row-major order of the axes (last axis fastest). Any
    failure aborts the whole sweep with a SweepError naming the grid point.
    """
    if not grid.outputs:
        raise ParameterError("sweep requested without outputs; set `outputs = ...`")
    unknown = [name for name in grid.outputs if name not in OUTPUTS]
    if unknown:
        raise ParameterError(
            f"unknown outputs: {', '.join(unknown)}; available: {', '.join(sorted(OUTPUTS))}"
        )
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")

    base = params_to_scalars(params, phi=grid.phi)
    points = list(_grid_points(base, grid))

    columns: list[str] = [_AXIS_COLUMNS[name] for name, _ in grid.axes]
    for name in grid.outputs:
        col, is_rate, _ = OUTPUTS[name]
        if is_rate:
            columns.extend([f"{col}_rad_s", f"{col}_Hz"])
        else:
            columns.append(col)

    def evaluate(indexed: tuple[int, dict]) -> tuple[float, ...]:
        idx, scalars = indexed
        values = [scalars[name] for name, _ in grid.axes]
        try:
            for name in grid.outputs:
                col, is_rate, fn = OUTPUTS[name]
                if name == "Theta_half":
                    v = _theta_half_output(scalars, normalization, profile_grid_size, profile_nbins)
                else:
                    v = fn(scalars)
                if is_rate:
                    values.extend([v, v / _TWO_PI])
                else:
                    values.append(v)
        except Exception as exc:
            at = ", ".join(f"{name}={scalars[name]:g}" for name, _ in grid.axes) or "base point"
            raise SweepError(f"grid point {idx} ({at}): {exc}") from exc
        return tuple(values)

    if workers == 1:
        rows = tuple(evaluate(item) for item in enumerate(points))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(evaluate, enumerate(points)))

    provenance = {
        "tool": "wgmscatter",
        "version": __version__,
        "base_config": {k: base[k] for k in sorted(base)},
        "axes": [[name, list(values)] for name, values in grid.axes],
        "outputs": list(grid.outputs),
        "normalization": normalization if "Theta_half" in grid.outputs else None,
    }
    return Dataset(columns=tuple(columns), rows=rows, provenance=provenance)


def _grid_points(base: dict, grid: SweepGrid) -> Iterable[dict]:
    if not grid.axes:
        yield dict(base)
        return
    names = [name for name, _ in grid.axes]
    value_lists = [values for _, values in grid.axes]
    idx = [0] * len(names)
    while True:
        scalars = dict(base)
        for name, values, i in zip(names, value_lists, idx):
            scalars[name] = values[i]
        yield scalars
        for k in reversed(range(len(idx))):
            idx[k] += 1
            if idx[k] < len(value_lists[k]):
                break
            idx[k] = 0
        else:
            return
