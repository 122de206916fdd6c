import json

import pytest
from click.testing import CliRunner

from curvelab import cli
from curvelab.serialize import CACHE_ENV


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args, **kwargs):
    return runner.invoke(cli.main, args, catch_exceptions=False, **kwargs)


def test_dist_text(runner):
    result = invoke(runner, ["farey", "dist", "2/5", "1/0"])
    assert result.exit_code == 0
    assert result.output == "3\n"


def test_dist_json(runner):
    result = invoke(runner, ["farey", "dist", "2/5", "1/0", "--format", "json"])
    data = json.loads(result.output)
    assert data == {"s": "2/5", "t": "1/0", "distance": 3}


def test_dist_bad_slope(runner):
    result = invoke(runner, ["farey", "dist", "nope", "1/0"])
    assert result.exit_code == cli.EXIT_IO_ERROR


def test_window_json_shape(runner):
    result = invoke(runner, ["farey", "window", "--height", "5"])
    data = json.loads(result.output)
    assert set(data) >= {"instance", "vertices", "edges"}
    assert len(data["vertices"]) == 40
    assert all(len(e) == 2 for e in data["edges"])


def test_window_dot(runner):
    result = invoke(runner, ["farey", "window", "--height", "3", "--format", "dot"])
    assert result.output.startswith("graph")
    assert "--" in result.output


def test_closure_sample_size(runner):
    result = invoke(
        runner,
        ["farey", "closure", "--power", "8", "--conj-len", "2"],
    )
    assert len(json.loads(result.output)) == 16


def test_displacement_minimum(runner):
    result = invoke(
        runner,
        ["farey", "displacement", "--power", "8", "--conj-len", "1",
         "--height", "30"],
    )
    report = json.loads(result.output)
    assert min(r["min"] for r in report) == 8


def test_s5_ball_sizes(runner):
    result = invoke(runner, ["s5", "ball", "--word-bound", "1"])
    data = json.loads(result.output)
    assert len(data["vertices"]) == 15
    assert len(data["edges"]) == 25


def test_s5_pentagons_count(runner):
    result = invoke(runner, ["s5", "pentagons", "--word-bound", "1"])
    assert json.loads(result.output)["count"] == 21


def test_s5_pentagons_needs_exactly_one_source(runner):
    assert invoke(runner, ["s5", "pentagons"]).exit_code == cli.EXIT_IO_ERROR


def test_s5_halftwist_detects_pair(runner):
    result = invoke(
        runner,
        ["s5", "halftwist", "--alpha", "0", "--beta", "2", "--word-bound", "2"],
    )
    assert len(json.loads(result.output)["detected"]) == 2


def test_arc2_classify(runner):
    result = invoke(
        runner,
        ["arc2", "classify", "0,0,1,0,1,0,1,0,1", "0,1,0,1,0,1,1,1,1",
         "0,1,1,1,1,1,0,1,2"],
    )
    assert json.loads(result.output)["kind"] == "case1"


def test_arc2_fill_pentagon_count(runner):
    result = invoke(
        runner,
        ["arc2", "fill", "0,0,1,0,1,0,1,0,1", "0,1,0,1,0,1,1,1,1",
         "2,1,1,1,1,1,0,3,2"],
    )
    assert len(json.loads(result.output)["pentagons"]) == 4


def test_arc2_rejects_malformed_key(runner):
    result = invoke(runner, ["arc2", "classify", "bad", "0,1", "0,2"])
    assert result.exit_code == cli.EXIT_IO_ERROR


def test_quotient_build_json(runner):
    result = invoke(
        runner,
        ["quotient", "build", "--height", "30", "--power", "8",
         "--conj-len", "1"],
    )
    data = json.loads(result.output)
    assert set(data) >= {"classes", "displacement", "vertices", "edges"}
    assert min(r["min"] for r in data["displacement"]) == 8


def test_verify_pass_exit_zero(runner):
    result = invoke(
        runner,
        ["verify", "--height", "30", "--power", "8", "--conj-len", "1",
         "--suites", "simplicial,lift"],
    )
    assert result.exit_code == 0
    assert "pass" in result.output


def test_verify_out_of_hypothesis_exit_zero(runner):
    result = invoke(
        runner,
        ["verify", "--height", "30", "--power", "1", "--conj-len", "1",
         "--suites", "simplicial"],
    )
    assert result.exit_code == 0
    assert "out-of-hypothesis" in result.output


def test_verify_unknown_suite(runner):
    result = invoke(runner, ["verify", "--suites", "bogus"])
    assert result.exit_code == cli.EXIT_IO_ERROR


def test_verify_suite_instance_mismatch(runner):
    result = invoke(runner, ["verify", "--instance", "farey",
                             "--suites", "relations"])
    assert result.exit_code == cli.EXIT_IO_ERROR


def test_verify_writes_artifacts(runner, tmp_path):
    out = tmp_path / "artifacts"
    result = invoke(
        runner,
        ["verify", "--instance", "s5", "--word-bound", "1",
         "--suites", "simplicial", "--out", str(out), "--format", "json"],
    )
    assert result.exit_code == 0
    names = {p.name for p in out.iterdir()}
    assert names == {"window.json", "quotient.json", "report-simplicial.json"}
    report = json.loads((out / "report-simplicial.json").read_text())
    assert report["status"] == "pass"


def test_cache_roundtrip_identical(runner, tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "cache"))
    args = ["farey", "window", "--height", "12"]
    first = invoke(runner, args).output
    assert list((tmp_path / "cache").glob("*.json"))
    second = invoke(runner, args).output
    assert first == second


def test_determinism_byte_identical(runner):
    args = ["verify", "--height", "30", "--power", "8", "--conj-len", "1",
            "--suites", "simplicial,ball2", "--format", "json"]
    assert invoke(runner, args).output == invoke(runner, args).output
