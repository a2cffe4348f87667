"""Command-line interface.

    wgmscatter excite   --config cfg [--out FILE] [--format csv|json]
    wgmscatter focus    --config cfg [--out FILE] [--format csv|json]
    wgmscatter emission --config cfg [--out DIR] [--phi DEG] [--normalization MODE]
    wgmscatter spectrum --config cfg [--out FILE]
    wgmscatter verify   --config cfg [--trials N] [--seed N]
    wgmscatter sweep    --config cfg [--out FILE] [--workers N]
    wgmscatter figure NAME --config cfg [--out DIR] [--workers N] [--normalization MODE]

Exit codes: 0 success, 1 validation/configuration error, 2 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from .config import ConfigError, SweepGrid, parse_config
from .coupling import excitation_rates
from .figures import FIGURE_NAMES, figure_command, write_emission_outputs
from .params import ParameterError
from .spectral import settled_transmission, transmission_amplitude
from .sweep import Dataset, SweepError, run_sweep
from . import __version__

_NORMALIZATION_CHOICES = ("transmitted", "front", "full")


class _Parser(argparse.ArgumentParser):
    # usage problems are validation errors under this tool's exit-code contract
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="wgmscatter", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"wgmscatter {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, out_help: str) -> None:
        p.add_argument("--config", required=True, type=Path, help="key=value config file")
        p.add_argument("--out", type=Path, default=None, help=out_help)
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("excite", help="drive-mode rates and excitation efficiency")
    common(p, "output file (default: stdout)")

    p = sub.add_parser("focus", help="ball-lens transform of the drive beam")
    common(p, "output file (default: stdout)")

    p = sub.add_parser("emission", help="angular emission tables for the config's sphere")
    common(p, "output directory (default: current directory)")
    p.add_argument("--phi", type=float, default=0.0, help="azimuth slice in degrees")
    p.add_argument("--normalization", choices=_NORMALIZATION_CHOICES, default="transmitted")

    p = sub.add_parser("spectrum", help="transmission spectrum across the dip")
    common(p, "output file (default: stdout)")

    p = sub.add_parser("verify", help="time-domain integration vs closed-form response")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sweep", help="run the sweep declared in the config")
    common(p, "output file (default: stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--normalization", choices=_NORMALIZATION_CHOICES, default="transmitted")

    p = sub.add_parser("figure", help="regenerate a preset dataset family")
    p.add_argument("name", choices=FIGURE_NAMES)
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--out", type=Path, default=Path("figures"), help="output directory")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--normalization", choices=_NORMALIZATION_CHOICES, default="transmitted")
    return parser


def _load(config_path: Path):
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read config {config_path}: {exc}") from exc
    return parse_config(text)


class _IOFailure(RuntimeError):
    pass


def _emit(dataset: Dataset, out: Path | None, fmt: str) -> None:
    payload = dataset.to_csv() if fmt == "csv" else dataset.to_json()
    if out is None:
        sys.stdout.write(payload)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(payload, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc


def _cmd_excite(args) -> int:
    params, _ = _load(args.config)
    grid = SweepGrid(
        axes=(),
        outputs=("g1", "kappa_in", "kappa_R", "kappa_0", "eta", "t_min", "w_s", "A_s"),
    )
    _emit(run_sweep(params, grid), args.out, args.format)
    return 0


def _cmd_focus(args) -> int:
    params, _ = _load(args.config)
    grid = SweepGrid(
        axes=(),
        outputs=("F", "z_R", "w0_prime", "s_prime", "z_R_prime", "w_s", "A_s", "minification"),
    )
    _emit(run_sweep(params, grid), args.out, args.format)
    return 0


def _cmd_emission(args) -> int:
    params, _ = _load(args.config)
    out_dir = args.out if args.out is not None else Path(".")
    try:
        paths, summary = write_emission_outputs(
            params, out_dir, args.phi, args.normalization, args.format
        )
    except OSError as exc:
        raise _IOFailure(f"cannot write into {out_dir}: {exc}") from exc
    for path in paths:
        print(f"wrote {path}")
    print(summary)
    return 0


def _cmd_spectrum(args) -> int:
    from .figures import _spectrum

    params, _ = _load(args.config)
    if args.out is None:
        # build in-memory and print
        import tempfile

        with tempfile.TemporaryDirectory() as tmp:
            paths, summary = _spectrum(params, Path(tmp), args.format, "transmitted", 1)
            sys.stdout.write(paths[0].read_text(encoding="utf-8"))
        print(summary, file=sys.stderr)
        return 0
    out = args.out
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        paths, summary = _spectrum(params, out.parent, args.format, "transmitted", 1)
        paths[0].replace(out)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc
    print(f"wrote {out}")
    print(summary)
    return 0


def _cmd_verify(args) -> int:
    params, _ = _load(args.config)
    rates = excitation_rates(params)
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(max(1, args.trials)):
        delta = rng.uniform(-5.0, 5.0) * rates.kappa_total
        omega = rates.omega_eff + delta
        T_time = settled_transmission(rates, omega).transmission
        t = transmission_amplitude(rates, omega)
        T_closed = t.real**2 + t.imag**2
        rel = abs(T_time - T_closed) / max(T_closed, 1e-300)
        worst = max(worst, rel)
    print(f"time-domain vs closed-form transmission: max relative error {worst:.3e} "
          f"over {max(1, args.trials)} random detunings")
    if worst < 1e-6:
        print("PASS (tolerance 1e-6)")
        return 0
    print("FAIL (tolerance 1e-6)")
    return 1


def _cmd_sweep(args) -> int:
    params, grid = _load(args.config)
    data = run_sweep(params, grid, workers=args.workers, normalization=args.normalization)
    _emit(data, args.out, args.format)
    return 0


def _cmd_figure(args) -> int:
    params, _ = _load(args.config)
    try:
        paths, summary = figure_command(
            args.name,
            params,
            args.out,
            fmt=args.format,
            normalization=args.normalization,
            workers=args.workers,
        )
    except OSError as exc:
        raise _IOFailure(f"cannot write into {args.out}: {exc}") from exc
    for path in paths:
        print(f"wrote {path}")
    print(summary)
    return 0


_COMMANDS = {
    "excite": _cmd_excite,
    "focus": _cmd_focus,
    "emission": _cmd_emission,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ParameterError, SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
