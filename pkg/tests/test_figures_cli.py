"""Command-line interface and the preset dataset families."""
import json
import math
from pathlib import Path

import pytest

from wgmscatter import parse_csv
from wgmscatter.cli import main
from wgmscatter.figures import FIGURE_NAMES

from conftest import BASELINE_CFG


@pytest.fixture()
def cfg(tmp_path):
    path = tmp_path / "system.cfg"
    path.write_text(BASELINE_CFG, encoding="utf-8")
    return path


def run_cli(*argv) -> int:
    return main([str(a) for a in argv])


def test_excite_writes_rate_table(cfg, tmp_path, capsys):
    out = tmp_path / "rates.csv"
    assert run_cli("excite", "--config", cfg, "--out", out) == 0
    data = parse_csv(out.read_text(encoding="utf-8"))
    assert "kappa_in_rad_s" in data.columns and "kappa_in_Hz" in data.columns
    assert "eta" in data.columns and "t_min" in data.columns
    row = dict(zip(data.columns, data.rows[0]))
    assert math.isclose(row["kappa_in_rad_s"], 2303208.3357211973, rel_tol=5e-15)
    assert math.isclose(row["eta"], 0.039298553136081953, rel_tol=5e-14)


def test_excite_stdout_when_no_out(cfg, capsys):
    assert run_cli("excite", "--config", cfg) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("g1_rad_s,")
    assert "# provenance: " in captured.out


def test_focus_json_format(cfg, tmp_path):
    out = tmp_path / "focus.json"
    assert run_cli("focus", "--config", cfg, "--out", out, "--format", "json") == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    row = payload["rows"][0]
    assert math.isclose(row["w_s_m"], 9.5519994327239912e-7, rel_tol=5e-15)
    assert math.isclose(row["F_m"], 1.2142857142857143e-5, rel_tol=5e-15)


def test_spectrum_pinned_columns(cfg, tmp_path):
    out = tmp_path / "spec.csv"
    assert run_cli("spectrum", "--config", cfg, "--out", out) == 0
    text = out.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "omega_rad_s,detuning_rad_s,transmission"
    data = parse_csv(text)
    assert len(data.rows) == 2001
    assert "fwhm_rad_s" in data.provenance
    # dip floor is reached at zero detuning
    mid = data.rows[len(data.rows) // 2]
    assert mid[1] == 0.0
    assert math.isclose(mid[2], 0.96070144686391805, rel_tol=1e-12)


def test_emission_pinned_headers(cfg, tmp_path):
    out_dir = tmp_path / "em"
    assert run_cli("emission", "--config", cfg, "--out", out_dir, "--phi", "0") == 0
    u_head = (out_dir / "emission_u.csv").read_text(encoding="utf-8").splitlines()[0]
    o_head = (out_dir / "emission_out.csv").read_text(encoding="utf-8").splitlines()[0]
    assert u_head == "theta_deg,phi_deg,u_per_sr"
    assert o_head == "Theta_deg,phi_deg,p_per_deg,P_cum,normalization_mode"


def test_emission_cumulative_column_is_monotone(cfg, tmp_path):
    out_dir = tmp_path / "em"
    assert run_cli("emission", "--config", cfg, "--out", out_dir) == 0
    lines = (out_dir / "emission_out.csv").read_text(encoding="utf-8").splitlines()
    cum = [float(ln.split(",")[3]) for ln in lines[1:] if not ln.startswith("#")]
    assert all(b >= a for a, b in zip(cum, cum[1:]))
    assert cum[-1] == pytest.approx(1.0, abs=1e-9)


def test_verify_reports_pass(cfg, capsys):
    assert run_cli("verify", "--config", cfg, "--trials", "10", "--seed", "3") == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "max relative error" in out


def test_sweep_uses_config_axes(cfg, tmp_path):
    cfg.write_text(
        BASELINE_CFG + "sweep.n = 1.5, 1.9\noutputs = eta, theta_c\n", encoding="utf-8"
    )
    out = tmp_path / "sweep.csv"
    assert run_cli("sweep", "--config", cfg, "--out", out, "--workers", "2") == 0
    data = parse_csv(out.read_text(encoding="utf-8"))
    assert data.columns == ("n", "eta", "theta_c_deg")
    assert [r[0] for r in data.rows] == [1.5, 1.9]
    assert math.isclose(data.rows[0][2], 41.810314895778598, rel_tol=5e-15)


def test_figure_names_pinned():
    assert FIGURE_NAMES == ("fig2b", "fig3", "fig4", "fig7", "fig8", "spectrum")


def test_figure_fig3_files(cfg, tmp_path):
    out_dir = tmp_path / "f3"
    assert run_cli("figure", "fig3", "--config", cfg, "--out", out_dir, "--workers", "4") == 0
    abc = parse_csv((out_dir / "fig3_abc.csv").read_text(encoding="utf-8"))
    assert abc.columns[:2] == ("n", "r_s_m")
    for col in ("kappa_in_rad_s", "kappa_R_rad_s", "eta"):
        assert col in abc.columns
    assert len(abc.rows) == 3 * 50
    d = parse_csv((out_dir / "fig3_d.csv").read_text(encoding="utf-8"))
    assert d.columns[:2] == ("n", "R_m")
    assert len(d.rows) == 3 * 50


def test_figure_fig8_four_profiles(cfg, tmp_path):
    out_dir = tmp_path / "f8"
    assert run_cli("figure", "fig8", "--config", cfg, "--out", out_dir) == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [
        "fig8_n1.5_phi0.csv",
        "fig8_n1.5_phi90.csv",
        "fig8_n1.9_phi0.csv",
        "fig8_n1.9_phi90.csv",
    ]


def test_bad_config_value_exits_1(cfg, tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text(BASELINE_CFG.replace("n = 1.7", "n = 0.9"), encoding="utf-8")
    assert run_cli("excite", "--config", bad) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_config_exits_2(tmp_path, capsys):
    assert run_cli("excite", "--config", tmp_path / "nope.cfg") == 2
    assert "cannot read" in capsys.readouterr().err


def test_unwritable_output_exits_2(cfg, capsys):
    assert run_cli("spectrum", "--config", cfg, "--out", "/proc/version/x.csv") == 2


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["excite"])  # --config is required
    assert exc.value.code == 1


def test_unknown_figure_name_exits_1(cfg):
    with pytest.raises(SystemExit) as exc:
        main(["figure", "fig99", "--config", str(cfg)])
    assert exc.value.code == 1
