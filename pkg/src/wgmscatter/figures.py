"""Preset sweep datasets for the published operating points.

Each preset pins its swept axes (and, where noted, the 50 nm grain radius for
the radius-vs-R companions); every other parameter comes from the loaded
configuration. Presets emit Dataset files plus a short text summary. All
output is byte-deterministic for a fixed configuration.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .config import SweepGrid, params_to_scalars
from .coupling import excitation_rates
from .emission import EmissionProfile, angular_density, cumulative_at, emission_profile
from .params import ParameterError, SystemParams
from .spectral import transmission_spectrum, t_min
from .sweep import Dataset, run_sweep, _fmt
from . import __version__

FIGURE_NAMES = ("fig2b", "fig3", "fig4", "fig7", "fig8", "spectrum")

_INDEX_CURVES = (1.5, 1.7, 1.9)
_RS_AXIS = ("r_s", tuple(10e-9 * (10.0 ** (i / 49.0)) for i in range(50)))
_R_AXIS = ("R", tuple(5e-6 + i * 25e-6 / 49.0 for i in range(50)))


def _replace_scalar(params: SystemParams, **overrides: float) -> SystemParams:
    from .config import build_params

    scalars = params_to_scalars(params)
    scalars.pop("phi")
    scalars.update(overrides)
    return build_params(scalars)


def figure_command(
    name: str,
    params: SystemParams,
    out_dir: Path,
    fmt: str = "csv",
    normalization: str = "transmitted",
    workers: int = 1,
) -> tuple[list[Path], str]:
    """Generate one preset dataset family; returns (paths written, summary text)."""
    if name not in FIGURE_NAMES:
        raise ParameterError(f"unknown figure {name!r}; expected one of {FIGURE_NAMES}")
    out_dir.mkdir(parents=True, exist_ok=True)
    builder = {
        "fig2b": _fig2b,
        "fig3": _fig3,
        "fig4": _fig4,
        "fig7": _fig7,
        "fig8": _fig8,
        "spectrum": _spectrum,
    }[name]
    return builder(params, out_dir, fmt, normalization, workers)


def _write(dataset: Dataset, path_base: Path, fmt: str) -> Path:
    # append, never with_suffix: stems like fig8_n1.5_phi0 contain dots
    path = path_base.parent / f"{path_base.name}.{fmt}"
    text = dataset.to_csv() if fmt == "csv" else dataset.to_json()
    path.write_text(text, encoding="utf-8", newline="\n")
    return path


def _fig2b(params, out_dir, fmt, normalization, workers):
    """Spot radius at the grain plane vs input waist, one curve per index."""
    w0_axis = tuple(0.2e-6 + i * 9.8e-6 / 49.0 for i in range(50))
    grid = SweepGrid(
        axes=(("n", _INDEX_CURVES), ("w0", w0_axis)),
        outputs=("w_s", "minification"),
    )
    data = run_sweep(params, grid, workers=workers)
    path = _write(data, out_dir / "fig2b", fmt)
    i_ws = data.columns.index("w_s_m")
    lines = []
    for n in _INDEX_CURVES:
        best = min(row[i_ws] for row in data.rows if row[0] == n)
        lines.append(f"n={n}: min w_s = {best * 1e6:.4f} um over w0 in [0.2, 10] um")
    return [path], "\n".join(lines)


def _fig3(params, out_dir, fmt, normalization, workers):
    """Coupling/decay rates and efficiency vs grain radius, plus efficiency vs sphere radius."""
    grid_abc = SweepGrid(
        axes=(("n", _INDEX_CURVES), (_RS_AXIS[0], _RS_AXIS[1])),
        outputs=("kappa_in", "kappa_R", "eta"),
    )
    data_abc = run_sweep(params, grid_abc, workers=workers)
    p1 = _write(data_abc, out_dir / "fig3_abc", fmt)

    params_50 = _replace_scalar(params, r_s=50e-9)
    grid_d = SweepGrid(axes=(("n", _INDEX_CURVES), (_R_AXIS[0], _R_AXIS[1])), outputs=("eta",))
    data_d = run_sweep(params_50, grid_d, workers=workers)
    p2 = _write(data_d, out_dir / "fig3_d", fmt)

    i_eta = data_abc.columns.index("eta")
    i_rs = data_abc.columns.index("r_s_m")
    best = max(data_abc.rows, key=lambda row: row[i_eta])
    summary = (
        f"max eta = {best[i_eta]:.4f} at n={best[0]:g}, r_s={best[i_rs] * 1e9:.1f} nm "
        f"(grain radius sweep); companion dataset: eta vs sphere radius at r_s=50nm"
    )
    return [p1, p2], summary


def _fig4(params, out_dir, fmt, normalization, workers):
    """Lasing-mode out-coupling rate vs grain radius and vs sphere radius."""
    grid_a = SweepGrid(
        axes=(("n", _INDEX_CURVES), (_RS_AXIS[0], _RS_AXIS[1])),
        outputs=("kappa_out", "Q_out"),
    )
    data_a = run_sweep(params, grid_a, workers=workers)
    p1 = _write(data_a, out_dir / "fig4_a", fmt)

    params_50 = _replace_scalar(params, r_s=50e-9)
    grid_b = SweepGrid(
        axes=(("n", _INDEX_CURVES), (_R_AXIS[0], _R_AXIS[1])),
        outputs=("kappa_out", "Q_out"),
    )
    data_b = run_sweep(params_50, grid_b, workers=workers)
    p2 = _write(data_b, out_dir / "fig4_b", fmt)

    i_k = data_a.columns.index("kappa_out_rad_s")
    lo = min(row[i_k] for row in data_a.rows)
    hi = max(row[i_k] for row in data_a.rows)
    summary = f"kappa_out spans [{lo:.3e}, {hi:.3e}] rad/s over the grain-radius sweep"
    return [p1, p2], summary


def _fig7(params, out_dir, fmt, normalization, workers):
    """Half-energy exit angle vs refractive index, phi = 0 and 90 deg."""
    n_axis = tuple(1.2 + i * 0.8 / 80.0 for i in range(81))
    grid = SweepGrid(
        axes=(("phi", (0.0, 90.0)), ("n", n_axis)),
        outputs=("Theta_half",),
    )
    data = run_sweep(params, grid, workers=workers, normalization=normalization)
    path = _write(data, out_dir / "fig7", fmt)
    i_th = data.columns.index("Theta_half_deg")
    lines = []
    for phi in (0.0, 90.0):
        rows = [row for row in data.rows if row[0] == phi and math.isfinite(row[i_th])]
        if not rows:
            lines.append(f"phi={phi:g} deg: Theta_half undefined across the whole index range")
            continue
        best = min(rows, key=lambda row: row[i_th])
        lines.append(
            f"phi={phi:g} deg: min Theta_half = {best[i_th]:.4f} deg at n = {best[1]:.3f}"
        )
    return [path], "\n".join(lines)


def _fig8(params, out_dir, fmt, normalization, workers):
    """Exit-angle density and cumulative for n in {1.5, 1.9}, phi in {0, 90} deg."""
    paths = []
    lines = []
    for n in (1.5, 1.9):
        for phi in (0.0, 90.0):
            profile = emission_profile(n, phi, normalization_mode=normalization)
            base = out_dir / f"fig8_n{n:g}_phi{phi:g}"
            paths.append(_write_profile(profile, base, fmt))
            mark = 11.0 if n == 1.5 else 0.7
            th = "undefined" if profile.theta_half is None else f"{profile.theta_half:.4f} deg"
            lines.append(
                f"n={n:g} phi={phi:g}: Theta_half = {th}, "
                f"P({mark:g} deg) = {cumulative_at(profile, mark):.4f} [{profile.normalization_mode}]"
            )
    return paths, "\n".join(lines)


def _spectrum(params, out_dir, fmt, normalization, workers):
    """Power transmission vs drive frequency across the resonance dip."""
    rates = excitation_rates(params)
    fwhm = 2.0 * rates.kappa_total
    detuning = np.linspace(-10.0 * fwhm, 10.0 * fwhm, 2001)
    omega = rates.omega_eff + detuning
    pairs = transmission_spectrum(rates, omega)
    rows = tuple(
        (w, w - rates.omega_eff, T) for (w, T) in pairs
    )
    data = Dataset(
        columns=("omega_rad_s", "detuning_rad_s", "transmission"),
        rows=rows,
        provenance=_profile_provenance(params=params, extra={"fwhm_rad_s": fwhm}),
    )
    path = _write(data, out_dir / "spectrum", fmt)
    summary = (
        f"dip floor T_min = {t_min(rates):.6f} at omega_eff = {rates.omega_eff:.6e} rad/s, "
        f"FWHM = {fwhm:.6e} rad/s"
    )
    return [path], summary


# ---------------------------------------------------------------------------
# emission profile serialization (pinned headers)

def _profile_provenance(params: SystemParams | None = None, extra: dict | None = None) -> dict:
    prov: dict = {"tool": "wgmscatter", "version": __version__}
    if params is not None:
        base = params_to_scalars(params)
        base.pop("phi")
        prov["base_config"] = {k: base[k] for k in sorted(base)}
    if extra:
        prov.update(extra)
    return prov


def emission_profile_csv(profile: EmissionProfile) -> str:
    """Pinned wire format: Theta_deg,phi_deg,p_per_deg,P_cum,normalization_mode.

    One row per histogram bin; Theta_deg is the bin center, P_cum the
    cumulative at the bin's right edge.
    """
    centers = 0.5 * (profile.Theta_edges[1:] + profile.Theta_edges[:-1])
    lines = ["Theta_deg,phi_deg,p_per_deg,P_cum,normalization_mode"]
    for c, p, P in zip(centers, profile.p_hist, profile.P_cum[1:]):
        lines.append(
            f"{_fmt(c)},{_fmt(profile.phi)},{_fmt(p)},{_fmt(P)},{profile.normalization_mode}"
        )
    prov = _profile_provenance(
        extra={
            "n": profile.n,
            "phi_deg": profile.phi,
            "normalization": profile.normalization_mode,
            "saturation": profile.saturation,
            "theta_half_deg": profile.theta_half,
        }
    )
    lines.append("# provenance: " + json.dumps(prov, sort_keys=True))
    return "\n".join(lines) + "\n"


def emission_profile_json(profile: EmissionProfile) -> str:
    centers = 0.5 * (profile.Theta_edges[1:] + profile.Theta_edges[:-1])
    payload = {
        "provenance": _profile_provenance(
            extra={
                "n": profile.n,
                "phi_deg": profile.phi,
                "normalization": profile.normalization_mode,
                "saturation": profile.saturation,
                "theta_half_deg": profile.theta_half,
            }
        ),
        "columns": ["Theta_deg", "phi_deg", "p_per_deg", "P_cum", "normalization_mode"],
        "rows": [
            {
                "Theta_deg": float(c),
                "phi_deg": profile.phi,
                "p_per_deg": float(p),
                "P_cum": float(P),
                "normalization_mode": profile.normalization_mode,
            }
            for c, p, P in zip(centers, profile.p_hist, profile.P_cum[1:])
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def _write_profile(profile: EmissionProfile, path_base: Path, fmt: str) -> Path:
    path = path_base.parent / f"{path_base.name}.{fmt}"
    text = emission_profile_csv(profile) if fmt == "csv" else emission_profile_json(profile)
    path.write_text(text, encoding="utf-8", newline="\n")
    return path


def angular_density_csv(n: float, phi_values: tuple[float, ...] = (0.0, 45.0, 90.0)) -> str:
    """Pinned wire format: theta_deg,phi_deg,u_per_sr on a 0.5-degree theta grid."""
    theta = np.arange(0.0, 360.0, 0.5)
    lines = ["theta_deg,phi_deg,u_per_sr"]
    for phi in phi_values:
        u = angular_density(theta, phi, n)
        for t, v in zip(theta, u):
            lines.append(f"{_fmt(t)},{_fmt(phi)},{_fmt(v)}")
    prov = _profile_provenance(extra={"n": n, "phi_values": list(phi_values)})
    lines.append("# provenance: " + json.dumps(prov, sort_keys=True))
    return "\n".join(lines) + "\n"


def write_emission_outputs(
    params: SystemParams,
    out_dir: Path,
    phi: float,
    normalization: str,
    fmt: str = "csv",
) -> tuple[list[Path], str]:
    """The `emission` subcommand payload: u table plus one pushforward profile."""
    out_dir.mkdir(parents=True, exist_ok=True)
    n = params.sphere.n
    profile = emission_profile(n, phi, normalization_mode=normalization)
    paths = []
    if fmt == "csv":
        u_path = out_dir / "emission_u.csv"
        u_path.write_text(angular_density_csv(n), encoding="utf-8", newline="\n")
        paths.append(u_path)
    else:
        u_path = out_dir / "emission_u.json"
        theta = np.arange(0.0, 360.0, 0.5)
        payload = {
            "provenance": _profile_provenance(extra={"n": n}),
            "columns": ["theta_deg", "phi_deg", "u_per_sr"],
            "rows": [
                {"theta_deg": float(t), "phi_deg": float(phi_v), "u_per_sr": float(v)}
                for phi_v in (0.0, 45.0, 90.0)
                for t, v in zip(theta, angular_density(theta, phi_v, n))
            ],
        }
        u_path.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n", encoding="utf-8")
        paths.append(u_path)
    paths.append(_write_profile(profile, out_dir / "emission_out", fmt))
    th = "undefined under this normalization" if profile.theta_half is None else f"{profile.theta_half:.4f} deg"
    summary = (
        f"n={n:g} phi={phi:g} [{profile.normalization_mode}]: Theta_half = {th}, "
        f"saturation = {profile.saturation:.4f}, "
        f"P(11 deg) = {cumulative_at(profile, 11.0):.4f}, "
        f"P(0.7 deg) = {cumulative_at(profile, 0.7):.4f}"
    )
    return paths, summary
