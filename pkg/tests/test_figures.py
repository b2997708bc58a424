"""Figure presets, emitters, and the command-line interface."""

import json
import subprocess
import sys

import numpy as np
import pytest

from gillum import CurveSet, SweepConfig, run_figure, to_csv, to_json, to_svg
from gillum.emit import emit
from gillum.figures import ConfigError, Curve, NumericalError


def small(figure, **kw):
    kw.setdefault("points", 12)
    return run_figure(SweepConfig(figure=figure, **kw))


def test_fig1_labels_and_ordering():
    cs = small("fig1")
    labels = [c.label for c in cs.curves]
    assert labels == ["Coh", "OB", "nOB", "PC", "OPA", "DH"]
    by = {c.label: c.y for c in cs.curves}
    assert np.all(by["OB"] >= by["nOB"] - 1e-9 * by["OB"])
    assert np.all(by["OB"] >= by["PC"] - 1e-9 * by["OB"])


def test_fig2_difference_curves():
    cs = small("fig2")
    assert [c.label for c in cs.curves] == ["OB-Coh", "PC-Coh"]
    by = {c.label: c.y for c in cs.curves}
    assert np.all(by["OB-Coh"] >= by["PC-Coh"] - 1e-9)


def test_fig2_gap_values_at_bright_signal():
    # a sweep whose first point sits exactly at N_S = 7
    cs = run_figure(SweepConfig(figure="fig2", points=2,
                                sweep_min=7.0, sweep_max=10.0))
    by = {c.label: c.y[0] for c in cs.curves}
    assert abs(by["OB-Coh"] - 376.0) <= 37.6
    assert abs(by["PC-Coh"] - 185.0) <= 18.5


def test_fig3_nonconstant_bound_dominates():
    cs = small("fig3", points=8)
    by = {c.label: c.y for c in cs.curves}
    for other in ("nOB", "PC", "OPA", "DH"):
        assert np.all(by["OB"] >= by[other] * (1 - 1e-9))


def test_fig4_coherent_outperforms_heterodyne_variants():
    cs = small("fig4", points=16)
    by = {c.label: c.y for c in cs.curves}
    for label in ("dHTD after BS", "separate HTD", "HD product"):
        assert np.all(by["Coh&HD"] > by[label])


def test_fig5a_bound_attainment():
    cs = small("fig5a", points=10)
    by = {c.label: c.y for c in cs.curves}
    for ns, ni in ((1, 1), (1, 2)):
        q = by[f"QCB N_S={ns:g} N_I={ni:g}"]
        o = by[f"O_off N_S={ns:g} N_I={ni:g}"]
        assert np.max(np.abs(o / q - 1)) <= 0.10


def test_fig5b_coherent_bound_on_top():
    cs = small("fig5b", points=8)
    by = {c.label: c.y for c in cs.curves}
    assert np.all(by["Coh QCB"] >= by["CCT QCB"] * (1 - 1e-9))


def test_s1_matches_closed_form():
    from gillum import ScenarioParams, optimal_beta_closed

    cs = small("s1", points=6)
    for x, y in zip(cs.curves[0].x, cs.curves[0].y):
        p = ScenarioParams(kappa=0.01, n_s=float(x), n_b=30.0)
        assert abs(y - optimal_beta_closed(p)) < 1e-12


def test_s2_emits_optimizer_curves():
    cs = small("s2", points=5)
    assert [c.label for c in cs.curves] == ["alpha", "beta"]
    assert np.all(cs.curves[0].y < 0)


def test_receiver_subset_selection():
    cs = small("fig1", receivers=("OB", "DH"))
    assert [c.label for c in cs.curves] == ["OB", "DH"]
    with pytest.raises(ConfigError):
        small("fig1", receivers=("never-heard-of-it",))


def test_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig(figure="fig9")
    with pytest.raises(ConfigError):
        SweepConfig(figure="fig1", points=1)
    with pytest.raises(ConfigError):
        SweepConfig(figure="fig1", sweep_min=2.0, sweep_max=1.0)


def test_curveset_rejects_empty_and_nonfinite():
    with pytest.raises(ConfigError):
        CurveSet("x", "y", ())
    bad = Curve("c", np.array([1.0, 2.0]), np.array([1.0, np.inf]))
    with pytest.raises(NumericalError):
        CurveSet("x", "y", (bad,))
    unsorted = Curve("c", np.array([2.0, 1.0]), np.array([1.0, 1.0]))
    with pytest.raises(ConfigError):
        CurveSet("x", "y", (unsorted,))


def test_emit_rejects_before_writing(tmp_path):
    target = tmp_path / "out.csv"
    with pytest.raises(ConfigError):
        emit(small("fig2", points=4), "nope", str(target))
    assert not target.exists()


def test_csv_round_trip(tmp_path):
    cs = small("fig1", points=10)
    path = tmp_path / "fig1.csv"
    emit(cs, "csv", str(path))
    rows = path.read_text().strip().split("\n")
    header = rows[0].split(",")
    assert header[0] == "x"
    data = np.array([[float(v) for v in row.split(",")] for row in rows[1:]])
    for k, curve in enumerate(cs.curves):
        assert header[k + 1] == curve.label
        assert np.max(np.abs(data[:, 0] - curve.x) / np.abs(curve.x)) < 1e-10
        assert np.max(np.abs(data[:, k + 1] - curve.y)
                      / np.maximum(np.abs(curve.y), 1e-300)) < 1e-10


def test_json_mirrors_curves(tmp_path):
    cs = small("fig5b", points=5)
    path = tmp_path / "c.json"
    emit(cs, "json", str(path))
    payload = json.loads(path.read_text())
    assert payload["x_label"] == cs.x_label
    assert [c["label"] for c in payload["curves"]] == [c.label for c in cs.curves]
    got = np.array(payload["curves"][0]["points"])
    assert np.max(np.abs(got[:, 1] - cs.curves[0].y)
                  / np.abs(cs.curves[0].y)) < 1e-10


def test_svg_structure():
    two_point = CurveSet("x", "y", (
        Curve("a", np.array([1.0, 2.0]), np.array([0.5, 1.5])),
        Curve("b", np.array([1.0, 2.0]), np.array([1.0, 2.0])),
    ))
    svg = to_svg(two_point)
    assert svg.count("<polyline") == 2
    first = svg.split("<polyline")[1].split('points="')[1].split('"')[0]
    assert len(first.split()) == 2  # two coordinate pairs per curve
    assert "</svg>" in svg and "width=\"800\"" in svg and "height=\"600\"" in svg


def test_emitters_deterministic():
    a = small("fig4", points=10)
    b = small("fig4", points=10)
    assert to_csv(a) == to_csv(b)
    assert to_json(a) == to_json(b)
    assert to_svg(a) == to_svg(b)


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([sys.executable, "-m", "gillum.cli", *args],
                          capture_output=True, text=True, env=full_env)


def test_cli_csv_stdout():
    res = run_cli("figure", "fig2", "--points", "5")
    assert res.returncode == 0
    lines = res.stdout.strip().split("\n")
    assert lines[0] == "x,OB-Coh,PC-Coh"
    assert len(lines) == 6


def test_cli_writes_files(tmp_path):
    out = tmp_path / "fig.svg"
    res = run_cli("figure", "s1", "--points", "4", "--format", "svg",
                  "--out", str(out))
    assert res.returncode == 0
    assert out.read_text().startswith("<svg")


def test_cli_exit_codes(tmp_path):
    assert run_cli("figure", "fig1", "--points", "1").returncode == 2
    assert run_cli("figure", "fig1", "--receivers", "XX",
                   "--points", "4").returncode == 2
    bad_cfg = tmp_path / "bad.cfg"
    bad_cfg.write_text("nonsense\n")
    assert run_cli("figure", "fig1", "--config", str(bad_cfg)).returncode == 2


def test_cli_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "opts.cfg"
    cfg.write_text("points=4\nkappa=0.02\nformat=json\n")
    res = run_cli("figure", "s1", "--config", str(cfg))
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert len(payload["curves"][0]["points"]) == 4
    # flags win over the file
    res2 = run_cli("figure", "s1", "--config", str(cfg), "--points", "3")
    assert len(json.loads(res2.stdout)["curves"][0]["points"]) == 3


def test_cli_threads_env_matches_serial():
    serial = run_cli("figure", "fig4", "--points", "6")
    threaded = run_cli("figure", "fig4", "--points", "6",
                       env={"GILLUM_THREADS": "4"})
    assert serial.returncode == threaded.returncode == 0
    assert serial.stdout == threaded.stdout


def test_cli_rejects_out_of_range_parameters():
    assert run_cli("figure", "fig1", "--kappa", "1.5",
                   "--points", "4").returncode == 2


def test_cli_numerical_failure_exit_code(monkeypatch, capsys):
    from gillum import cli as climod

    def explode(config):
        raise NumericalError("synthetic non-finite sweep value")

    monkeypatch.setattr(climod, "run_figure", explode)
    assert climod.main(["figure", "fig1", "--points", "4"]) == 3
