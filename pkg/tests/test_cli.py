import json
import math

import pytest

import hullprep.cli as cli
from hullprep.cli import (
    BENCH_CSV_HEADER,
    SCALING_CSV_HEADER,
    main,
    run_bench,
    run_scaling,
)
from hullprep.elimination import preprocess
from hullprep.geometry import Point2
from hullprep.hull import convex_hull
from hullprep.pointgen import read_points, write_points


def test_filter_three_point_file_passes_through(tmp_path, capsys):
    src = tmp_path / "in.points"
    dst = tmp_path / "out.points"
    pts = [Point2(0, 0), Point2(1, 0), Point2(0, 1)]
    write_points(src, pts)
    assert main(["filter", "--in", str(src), "--out", str(dst)]) == 0
    assert read_points(dst) == pts
    summary = json.loads(capsys.readouterr().out)
    assert summary["input_size"] == 3
    assert summary["retained_size"] == 3
    assert summary["per_corner_depth"] == {"TR": 0, "BR": 0, "BL": 0, "TL": 0}


def test_filter_generated_input(tmp_path, capsys):
    dst = tmp_path / "out.points"
    assert main(["filter", "--n", "500", "--seed", "42", "--out", str(dst)]) == 0
    summary = json.loads(capsys.readouterr().out)
    retained = read_points(dst)
    assert summary["retained_size"] == len(retained)
    assert summary["input_size"] == 500
    assert len(retained) < 100


def test_filter_respects_box(tmp_path, capsys):
    dst = tmp_path / "out.points"
    assert main(
        ["filter", "--n", "200", "--seed", "1", "--box=-2,-1,4,5", "--out", str(dst)]
    ) == 0
    capsys.readouterr()
    assert all(-2 <= p.x <= 4 and -1 <= p.y <= 5 for p in read_points(dst))


def test_filter_missing_input_file(tmp_path, capsys):
    ret = main(["filter", "--in", str(tmp_path / "nope.points"), "--out", str(tmp_path / "o")])
    assert ret == 2
    assert "error" in capsys.readouterr().err


def test_filter_requires_some_input(tmp_path, capsys):
    assert main(["filter", "--out", str(tmp_path / "o")]) == 2
    assert "error" in capsys.readouterr().err


def test_bad_box_is_usage_error(tmp_path, capsys):
    ret = main(["filter", "--n", "10", "--box", "1,2,3", "--out", str(tmp_path / "o")])
    assert ret == 2


def test_parse_error_exit_code(tmp_path, capsys):
    src = tmp_path / "bad.points"
    src.write_text("0,0\nnot,points\n", encoding="utf-8")
    assert main(["verify", "--in", str(src)]) == 2
    assert "bad.points:2" in capsys.readouterr().err


def test_verify_uniform_passes(capsys):
    assert main(["verify", "--n", "2000", "--seed", "7"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["equal"] is True
    assert out["retained_size"] >= out["hull_size"]


def test_verify_circle_keeps_everything(tmp_path, capsys):
    src = tmp_path / "circle.points"
    pts = [
        Point2(math.cos(2 * math.pi * k / 100), math.sin(2 * math.pi * k / 100))
        for k in range(100)
    ]
    write_points(src, pts)
    assert main(["verify", "--in", str(src)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["retained_size"] == 100


def test_verify_collinear_passes(tmp_path, capsys):
    src = tmp_path / "line.points"
    write_points(src, [Point2(0.5 * k, 0.25 * k) for k in range(50)])
    assert main(["verify", "--in", str(src)]) == 0
    assert json.loads(capsys.readouterr().out)["hull_size"] == 2


def test_verify_empty_input(tmp_path, capsys):
    src = tmp_path / "empty.points"
    src.write_text("# nothing\n", encoding="utf-8")
    assert main(["verify", "--in", str(src)]) == 0
    assert json.loads(capsys.readouterr().out)["equal"] is True


def test_verify_mismatch_writes_fixture(tmp_path, capsys, monkeypatch):
    def broken(points):
        res = preprocess(points)
        res.retained.discard(convex_hull(points).vertices[0])
        return res

    monkeypatch.setattr(cli, "preprocess", broken)
    ret = main(["verify", "--n", "60", "--seed", "3", "--fixture-dir", str(tmp_path)])
    assert ret == 1
    captured = capsys.readouterr()
    assert json.loads(captured.out)["equal"] is False
    fixtures = list(tmp_path.glob("hull_mismatch_*.points"))
    assert len(fixtures) == 1
    assert len(read_points(fixtures[0])) == 60
    assert "mismatch" in captured.err


def test_scaling_csv_svg_and_fit(tmp_path, capsys):
    out = tmp_path / "scaling.csv"
    ret = main(
        ["scaling", "--n-list", "256,1024,4096", "--trials", "5", "--seed", "9", "--out", str(out)]
    )
    assert ret == 0
    lines = out.read_text(encoding="utf-8").strip().split("\n")
    assert lines[0] == SCALING_CSV_HEADER
    assert len(lines) == 4
    svg = out.with_suffix(".svg")
    assert svg.exists()
    assert svg.read_text(encoding="utf-8").startswith("<svg")
    summary = json.loads(capsys.readouterr().out)
    assert summary["fit"]["slope"] > 0
    assert len(summary["rows"]) == 3


def _strip_column(csv_text, column):
    lines = csv_text.strip().split("\n")
    idx = lines[0].split(",").index(column)
    return ["," .join(v for i, v in enumerate(line.split(",")) if i != idx) for line in lines]


def test_scaling_deterministic_modulo_time(tmp_path, capsys):
    args = ["scaling", "--n-list", "512,2048", "--trials", "3", "--seed", "11"]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    a = _strip_column(out1.read_text(encoding="utf-8"), "mean_wall_time")
    b = _strip_column(out2.read_text(encoding="utf-8"), "mean_wall_time")
    assert a == b
    assert out1.with_suffix(".svg").read_bytes() == out2.with_suffix(".svg").read_bytes()


def test_scaling_single_trial_tiny_n(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["scaling", "--n-list", "4", "--trials", "1", "--seed", "0", "--out", str(out)]) == 0
    row = out.read_text(encoding="utf-8").strip().split("\n")[1].split(",")
    assert int(row[0]) == 4
    assert float(row[2]) <= 4.0


def test_bench_rows_and_ratios(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    ret = main(
        ["bench", "--n-list", "0,4096,8192", "--trials", "3", "--seed", "5", "--out", str(out)]
    )
    assert ret == 0
    lines = out.read_text(encoding="utf-8").strip().split("\n")
    assert lines[0] == BENCH_CSV_HEADER
    assert lines[1].startswith("0,")
    summary = json.loads(capsys.readouterr().out)
    assert [r["n"] for r in summary["rows"]] == [0, 4096, 8192]
    assert summary["doubling_ratios"][-1]["n_to"] == 8192


def test_bench_retained_counts_deterministic():
    rows1, _ = run_bench([1024, 2048], trials=2, seed=13)
    rows2, _ = run_bench([1024, 2048], trials=2, seed=13)
    assert [r.retained_size for r in rows1] == [r.retained_size for r in rows2]


def test_run_scaling_invariants():
    rows, fit = run_scaling([512, 1024], trials=4, seed=2)
    for row in rows:
        assert row.mean_retained <= row.n
        assert row.mean_retained >= row.hull_size_mean
    assert fit.relative_residual >= 0.0


def test_lemmas_requires_enough_trials(capsys):
    assert main(["lemmas", "--trials", "10"]) == 2
    assert "1000" in capsys.readouterr().err


def test_lemmas_small_run_csv(capsys):
    ret = main(
        ["lemmas", "--trials", "20000", "--count-n", "100", "--count-trials", "200",
         "--seed", "5"]
    )
    out = capsys.readouterr().out
    assert ret == 0
    lines = out.strip().split("\n")
    assert lines[0] == "experiment,trials,mean,variance,std_error,expected,z_score"
    assert len(lines) == 9  # three area reports + five count reports


def test_lemmas_json_format(capsys):
    ret = main(
        ["lemmas", "--trials", "20000", "--count-n", "100", "--count-trials", "200",
         "--seed", "5", "--format", "json"]
    )
    assert ret == 0
    reports = json.loads(capsys.readouterr().out)
    assert len(reports) == 8
    assert {r["experiment"] for r in reports} >= {"area_quadrilateral", "count_quadrilateral"}


def test_lemmas_out_file(tmp_path, capsys):
    out = tmp_path / "reports.csv"
    ret = main(
        ["lemmas", "--trials", "20000", "--count-n", "100", "--count-trials", "200",
         "--seed", "5", "--out", str(out)]
    )
    assert ret == 0
    assert out.read_text(encoding="utf-8").startswith("experiment,")


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
