import json

import numpy as np
import pandas as pd
import pytest

from pyduality.duality import ideal_sweep, verify_all, simulated_sweep
from pyduality.config import ExperimentConfig
from pyduality.storage import (FigureDataError, fig2_frame, fig3_frame,
                               write_figure_data, read_figure_data,
                               verify_figure_data, save_dict_to_json,
                               load_dict_from_json, FIG2, FIG3, COLUMNS)

GRID = np.linspace(0, 45, 19)


@pytest.fixture(scope="module")
def records():
    return ideal_sweep(GRID)


@pytest.fixture(scope="module")
def simulated_records():
    config = ExperimentConfig(theta_start=15, theta_end=30, theta_steps=2,
                              mc_samples=5, seed=2)
    return simulated_sweep(config)


def test_frames(records):
    df = fig2_frame(records)
    assert list(df.columns) == COLUMNS[FIG2]
    assert len(df) == 19
    assert df["C_sim"].isna().all()
    assert np.allclose(df["sum"], df["C_ideal"] + df["H_ideal"])
    df = fig3_frame(records)
    assert list(df.columns) == COLUMNS[FIG3]
    assert np.allclose(df["quad_lhs"], 0.25)
    assert (df["quad_bound"] == 0.25).all()


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_write_and_read(records, out_dir, fmt):
    paths = write_figure_data(records, str(out_dir), fmt)
    assert [p.rsplit("/", 1)[-1] for p in paths] == \
        [f"fig2.{fmt}", f"fig3.{fmt}"]
    for path, figure in zip(paths, (FIG2, FIG3)):
        read, df = read_figure_data(path)
        assert read == figure
        assert len(df) == 19
        assert df["theta"].iloc[-1] == 45
        assert df[COLUMNS[figure][3]].isna().all()


def test_csv_layout(records, out_dir):
    path, _ = write_figure_data(records[:1], str(out_dir), "csv")
    with open(path) as f:
        lines = f.read().splitlines()
    assert lines[0] == ",".join(COLUMNS[FIG2])
    fields = lines[1].split(",")
    assert fields[3:7] == [""] * 4
    values = [float(fields[k]) for k in (0, 1, 2, 7, 8)]
    assert values == pytest.approx([0, 1, 0, 1, 1], abs=1e-9)


def test_json_layout(records, out_dir):
    _, path = write_figure_data(records[:2], str(out_dir), "json")
    with open(path) as f:
        data = json.load(f)
    assert data["schema_version"] == 1
    assert data["figure"] == FIG3
    assert data["columns"] == COLUMNS[FIG3]
    assert data["rows"][0][3] is None
    assert data["rows"][0][:3] == pytest.approx([0, 0.5, 0], abs=1e-9)


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_round_trip_verdicts(records, simulated_records, out_dir, fmt):
    for recs in (records, simulated_records):
        fig2, fig3 = write_figure_data(recs, str(out_dir), fmt)
        in_process = [v for r in recs for v in verify_all(r)]
        in_process += [v for r in recs if r.has_simulation
                       for v in verify_all(r, "simulated")]
        from_files = verify_figure_data(*read_figure_data(fig2)) + \
            verify_figure_data(*read_figure_data(fig3))
        key = (lambda v: (v.relation, v.source, v.theta))
        assert sorted(map(key, in_process)) == sorted(map(key, from_files))
        satisfied = {key(v): v.satisfied for v in in_process}
        for v in from_files:
            assert v.satisfied == satisfied[key(v)]


def test_byte_identical_output(records, tmp_path):
    a = write_figure_data(records, str(tmp_path / "a"), "json")
    b = write_figure_data(records, str(tmp_path / "b"), "json")
    for pa, pb in zip(a, b):
        with open(pa, "rb") as fa, open(pb, "rb") as fb:
            assert fa.read() == fb.read()


def test_violation_detected(records, out_dir):
    _, fig3 = write_figure_data(records[:1], str(out_dir), "csv")
    df = pd.read_csv(fig3)
    df.loc[0, "X_ideal"] = 0.6
    df.to_csv(fig3, index=False)
    verdicts = verify_figure_data(*read_figure_data(fig3))
    assert not verdicts[0].satisfied
    assert verdicts[0].lhs == pytest.approx(0.36)


def test_visibility_relation_rechecked(simulated_records, out_dir):
    _, fig3 = write_figure_data(simulated_records, str(out_dir), "csv")
    verdicts = verify_figure_data(*read_figure_data(fig3))
    gy = [v for v in verdicts if v.relation == "GY"]
    assert sorted(v.source for v in gy) == ["ideal", "ideal",
                                            "simulated", "simulated"]
    for v, r in zip([v for v in gy if v.source == "ideal"],
                    simulated_records):
        assert v.lhs == pytest.approx(r.ideal["V"] ** 2 + r.ideal["D"] ** 2,
                                      abs=1e-8)
        assert v.satisfied


def test_visibility_violation_detected(records, out_dir):
    _, fig3 = write_figure_data(records[:1], str(out_dir), "csv")
    df = pd.read_csv(fig3)
    df.loc[0, "P_ideal"] = 0.3
    df.to_csv(fig3, index=False)
    gy = [v for v in verify_figure_data(*read_figure_data(fig3))
          if v.relation == "GY"]
    assert len(gy) == 1
    assert gy[0].lhs == pytest.approx(1.36)
    assert not gy[0].satisfied


def test_visibility_relation_needs_two_paths(out_dir):
    _, fig3 = write_figure_data(ideal_sweep(GRID, n_paths=3),
                                str(out_dir), "csv")
    verdicts = verify_figure_data(*read_figure_data(fig3))
    assert len(verdicts) == len(GRID)
    assert all(v.relation == "quadratic" for v in verdicts)
    assert all(v.satisfied for v in verdicts)


@pytest.mark.parametrize("content, line", [
    ("", 1),
    ("a,b\n1,2\n", 1),
    (",".join(COLUMNS[FIG2]) + "\n", 2),
    (",".join(COLUMNS[FIG2]) + "\n0,1,0,,,,,1,1\n0,x,0,,,,,1,1\n", 3),
    (",".join(COLUMNS[FIG2]) + "\n0,1,0,,,,,1\n", 2),
    (",".join(COLUMNS[FIG2]) + "\n0,1,0,1,,,,1,1\n", 2),
    (",".join(COLUMNS[FIG2]) + "\n0,,0,,,,,1,1\n", 2),
])
def test_malformed_csv(tmp_path, content, line):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    with pytest.raises(FigureDataError) as e:
        read_figure_data(str(path))
    assert e.value.line == line


def test_malformed_json(tmp_path, records, out_dir):
    path = tmp_path / "bad.json"
    path.write_text("{\n  \"schema_version\": 1,\n  oops\n}\n")
    with pytest.raises(FigureDataError) as e:
        read_figure_data(str(path))
    assert e.value.line == 3
    path.write_text(json.dumps({"schema_version": 2}))
    with pytest.raises(FigureDataError):
        read_figure_data(str(path))
    _, fig3 = write_figure_data(records[:3], str(out_dir), "json")
    with open(fig3) as f:
        text = f.read()
    with open(fig3, "w") as f:
        f.write(text.replace("[2.5,", "[2.5, \"x\","))
    with pytest.raises(FigureDataError):
        read_figure_data(fig3)
    with pytest.raises(FigureDataError):
        read_figure_data(str(tmp_path / "missing.json"))


def test_json_helpers(tmp_path):
    path = str(tmp_path / "d.json")
    save_dict_to_json({"a": np.float64(1.5), "b": np.arange(2)}, path)
    assert load_dict_from_json(path) == {"a": 1.5, "b": [0, 1]}
