"""Shared plumbing for the runnable scripts: repo root and baseline loading."""
from pathlib import Path

from wgmscatter.config import build_params, params_to_scalars, parse_config

REPO = Path(__file__).resolve().parent.parent


def baseline_params(**overrides):
    """Baseline configuration with selected scalar keys replaced (SI units)."""
    text = (REPO / "configs" / "baseline.cfg").read_text(encoding="utf-8")
    params, _ = parse_config(text)
    scalars = params_to_scalars(params)
    unknown = set(overrides) - set(scalars)
    if unknown:
        raise KeyError(f"unknown config keys: {sorted(unknown)}")
    scalars.update(overrides)
    return build_params(scalars)
