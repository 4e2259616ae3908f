import json
import os

import pandas as pd
import pytest
from click.testing import CliRunner

from pyduality.cli import main
from pyduality.config import CONFIG_ENV, ExperimentConfig
from pyduality.duality import simulated_sweep, verify_all
from pyduality.storage import read_figure_data

SMALL = ["--theta-start", "10", "--theta-end", "30", "--theta-steps", "3",
         "--mc-samples", "5", "--seed", "7"]
SMALL_CONFIG = dict(theta_start=10, theta_end=30, theta_steps=3,
                    mc_samples=5, seed=7)


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


def expected_exit(**kwargs):
    records = simulated_sweep(ExperimentConfig(**kwargs))
    verdicts = [v for r in records for source in ("ideal", "simulated")
                for v in verify_all(r, source)]
    return 0 if all(v.satisfied for v in verdicts) else 1


def test_version(runner):
    result = run(runner, "--version")
    assert result.exit_code == 0
    assert "duality" in result.output


def test_sweep_single_point(runner, out_dir):
    result = run(runner, "sweep", "--theta-steps", 1, "--theta-start", 0,
                 "--mc-samples", 5, "--out-dir", out_dir)
    assert result.exit_code == expected_exit(
        theta_start=0, theta_steps=1, mc_samples=5), result.output
    figure, df = read_figure_data(os.path.join(out_dir, "fig2.csv"))
    assert figure == "fig2"
    assert len(df) == 1
    assert df["C_ideal"][0] == pytest.approx(1)
    assert df["bound"][0] == 1
    assert df["C_sim"][0] == pytest.approx(1, abs=0.01)


def test_sweep_more_paths_is_ideal_only(runner, out_dir):
    result = run(runner, "sweep", "--theta-steps", 1, "--theta-start", 0,
                 "--n-paths", 3, "--out-dir", out_dir)
    assert result.exit_code == 0, result.output
    _, df = read_figure_data(os.path.join(out_dir, "fig2.csv"))
    assert df["C_ideal"][0] == pytest.approx(1.5849625, abs=1e-7)
    assert df["bound"][0] == pytest.approx(1.5849625, abs=1e-7)
    assert df["C_sim"].isna().all()


def test_sweep_simulated_then_verify(runner, out_dir):
    result = run(runner, "sweep", *SMALL, "--out-dir", out_dir)
    expected = expected_exit(**SMALL_CONFIG)
    assert result.exit_code == expected, result.output
    assert "/18 verdicts satisfied." in result.output
    fig2 = os.path.join(out_dir, "fig2.csv")
    fig3 = os.path.join(out_dir, "fig3.csv")
    _, df = read_figure_data(fig3)
    assert len(df) == 3
    assert df["X_sim"].notna().all()
    result = run(runner, "verify", fig2, fig3)
    assert result.exit_code == expected, result.output
    assert "/18 verdicts satisfied." in result.output
    ideal = [line for line in result.output.splitlines()
             if " ideal " in line]
    assert len(ideal) == 9
    assert all(line.endswith(" ok") for line in ideal)


def test_sweep_is_deterministic_across_workers(runner, tmp_path):
    expected = expected_exit(**SMALL_CONFIG)
    for name, workers in (("a", 1), ("b", 3)):
        result = run(runner, "sweep", *SMALL, "--format", "json",
                     "--workers", workers, "--out-dir", tmp_path / name)
        assert result.exit_code == expected, result.output
    for figure in ("fig2.json", "fig3.json"):
        with open(tmp_path / "a" / figure, "rb") as a, \
                open(tmp_path / "b" / figure, "rb") as b:
            assert a.read() == b.read()


@pytest.mark.parametrize("args", [
    ["--flux", "0"],
    ["--theta-start", "100"],
    ["--mc-samples", "1"],
    ["--format", "xml"],
    ["--n-paths", "3", "--theta-end", "80"],
    ["--config", "does-not-exist.ini"],
])
def test_sweep_config_errors(runner, out_dir, args):
    result = run(runner, "sweep", *args, "--out-dir", out_dir)
    assert result.exit_code == 2


def test_sweep_reads_config_file(runner, tmp_path):
    config = tmp_path / "duality.ini"
    config.write_text("[sweep]\ntheta_steps=2\ntheta_start=40\n"
                      "theta_end=45\nn_paths=4\nformat=json\n")
    result = run(runner, "sweep", "--config", config, "--out-dir",
                 tmp_path / "out")
    assert result.exit_code == 0, result.output
    with open(tmp_path / "out" / "fig3.json") as f:
        data = json.load(f)
    assert len(data["rows"]) == 2
    assert data["rows"][0][-1] == pytest.approx(0.5625)


def test_verify_reports_violation(runner, out_dir):
    run(runner, "sweep", "--theta-steps", 1, "--mc-samples", 3,
        "--out-dir", out_dir)
    fig3 = os.path.join(out_dir, "fig3.csv")
    df = pd.read_csv(fig3)
    df.loc[0, "X_ideal"] = 0.6
    df.to_csv(fig3, index=False)
    result = run(runner, "verify", fig3)
    assert result.exit_code == 1
    assert "VIOLATED" in result.output


def test_verify_malformed(runner, tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    result = run(runner, "verify", empty)
    assert result.exit_code == 2
    assert "line 1" in result.output


def test_counts_and_tomo_wave(runner, tmp_path):
    counts = tmp_path / "wave.csv"
    result = run(runner, "counts", "--theta", 30, "--seed", 1, "--out",
                 counts)
    assert result.exit_code == 0, result.output
    result = run(runner, "tomo", counts, "--mc-samples", 10)
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["mode"] == "wave"
    offdiag = report["values"]["offdiag_abs"]
    sigma = report["monte_carlo"]["offdiag_abs"]["std_dev"]
    assert abs(offdiag - 0.25) <= 3 * sigma + 1e-3
    assert report["rho"]["real"][0][1] == pytest.approx(0.25, abs=0.01)


def test_tomo_pure_horizontal_state(runner, tmp_path):
    path = tmp_path / "h.csv"
    rows = [("H", 50000), ("V", 0), ("D", 25000), ("A", 25000),
            ("R", 25000), ("L", 25000)]
    path.write_text("setting_label,branch,counts,exposure_s\n"
                    + "".join(f"{k},1,{n},10\n" for k, n in rows))
    out = tmp_path / "report.json"
    result = run(runner, "tomo", path, "--mc-samples", 10, "--out", out)
    assert result.exit_code == 0, result.output
    with open(out) as f:
        report = json.load(f)
    assert report["mode"] == "state"
    c = report["monte_carlo"]["C"]
    assert report["values"]["C"] <= 3 * c["std_dev"] + 1e-3


def test_tomo_particle(runner, tmp_path):
    counts = tmp_path / "particle.csv"
    run(runner, "counts", "--theta", 45, "--mode", "particle", "--exact",
        "--out", counts)
    result = run(runner, "tomo", counts, "--mc-samples", 4)
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["mode"] == "particle"
    assert report["values"]["Ps"] == pytest.approx(1)
    assert report["values"]["H"] == pytest.approx(1)


def test_tomo_truncated_file(runner, tmp_path):
    path = tmp_path / "truncated.csv"
    path.write_text("setting_label,branch,counts,exposure_s\nH,1,10,10\nV,1\n")
    result = run(runner, "tomo", path)
    assert result.exit_code == 2
    assert "line 3" in result.output


def test_tomo_incomplete(runner, tmp_path):
    path = tmp_path / "incomplete.csv"
    path.write_text("setting_label,branch,counts,exposure_s\n"
                    "H,1,10,10\nV,1,10,10\n")
    result = run(runner, "tomo", path)
    assert result.exit_code == 3


@pytest.mark.parametrize("rows, line", [
    (["H,1,10,10", "V,1,10,10", "D,1,10,10", "A,1,10,10", "R,1,10,10",
      "L,1,10,10", "H,3,10,10"], 8),
    (["phi1,1,10,10", "phi2,3,10,10"], 3),
])
def test_tomo_branch_outside_paths(runner, tmp_path, rows, line):
    path = tmp_path / "branches.csv"
    path.write_text("setting_label,branch,counts,exposure_s\n"
                    + "\n".join(rows) + "\n")
    result = run(runner, "tomo", path, "--mc-samples", 2)
    assert result.exit_code == 2
    assert f"line {line}" in result.output
