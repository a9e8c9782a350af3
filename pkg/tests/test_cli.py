import json
from pathlib import Path

import pytest

from chordage.cli import analyze_graph, main, report_to_json
from chordage.edgelist import format_edge_list, read_edge_list
from chordage.families import cartesian_product, clique, corona, path

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_graph(tmp_path, g, name="g.edges"):
    p = tmp_path / name
    p.write_text(format_edge_list(g), encoding="utf-8")
    return str(p)


def test_analyze_k4(tmp_path, capsys):
    p = write_graph(tmp_path, clique(4))
    code, out, err = run(capsys, "analyze", p)
    assert code == 0
    report = json.loads(out)
    assert report["gamma"] == 1
    assert report["bondage"] == 2
    assert report["omega"] == 4
    assert "bondage=2" in err


def test_analyze_corona(tmp_path, capsys):
    p = write_graph(tmp_path, corona(clique(3), clique(1)))
    code, out, _ = run(capsys, "analyze", p)
    assert code == 0
    report = json.loads(out)
    assert report["gamma"] == 3
    assert report["bondage"] == 3


def test_analyze_c4_reports_hole(tmp_path, capsys):
    from chordage.families import cycle

    p = write_graph(tmp_path, cycle(4))
    code, out, _ = run(capsys, "analyze", p, "--emit-certificate")
    report = json.loads(out)
    assert code == 0
    assert report["is_chordal"] is False
    assert len(report["hole"]) == 4
    assert report["certificate"] == "skipped: not applicable"


def test_analyze_limit_skips_bondage(tmp_path, capsys):
    p = write_graph(tmp_path, clique(5))
    code, out, _ = run(capsys, "analyze", p, "--limit-bondage-m", "5")
    report = json.loads(out)
    assert code == 0
    assert report["bondage"] == "skipped: limit"
    assert "bondage_witness" not in report


def test_analyze_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.edges"
    p.write_text("not a graph\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2
    assert "line 1" in err


def test_analyze_certificate(tmp_path, capsys):
    p = write_graph(tmp_path, corona(clique(3), clique(1)))
    code, out, _ = run(capsys, "analyze", p, "--emit-certificate")
    report = json.loads(out)
    assert report["certificate"]["bound"] <= report["omega"]


def test_report_round_trips_bytes(tmp_path):
    report = analyze_graph(clique(4), {"path": "k4.edges"}, emit_certificate=True)
    text = report_to_json(report)
    assert report_to_json(json.loads(text)) == text


def test_golden_report():
    report = analyze_graph(clique(4), {"path": "k4.edges"})
    report.pop("timings_ms")
    golden = (DATA / "k4_report.json").read_text(encoding="utf-8")
    assert report_to_json(report) == golden


def test_generate_corona(tmp_path, capsys):
    out_path = tmp_path / "g.edges"
    code, _, _ = run(
        capsys, "generate", "corona", "--base", "clique:4", "-o", str(out_path)
    )
    assert code == 0
    assert read_edge_list(out_path) == corona(clique(4), clique(1))


def test_generate_cycle_stdout(capsys):
    code, out, _ = run(capsys, "generate", "cycle", "-n", "4")
    assert code == 0
    assert out == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_generate_random_chordal_idempotent(tmp_path, capsys):
    a = tmp_path / "a.edges"
    b = tmp_path / "b.edges"
    for target in (a, b):
        code, _, _ = run(
            capsys,
            "generate",
            "random-chordal",
            "-n", "12",
            "-d", "0.4",
            "--seed", "7",
            "-o", str(target),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_nested_spec(tmp_path, capsys):
    out_path = tmp_path / "g.edges"
    code, _, _ = run(
        capsys,
        "generate",
        "corona",
        "--base", "cartesian(path:2,path:3)",
        "-o", str(out_path),
    )
    assert code == 0
    expected = corona(cartesian_product(path(2), path(3)), clique(1))
    assert read_edge_list(out_path) == expected


def test_generate_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "generate", "cycle", "-n", "2")
    assert code == 2
    assert "cycle" in err


def test_verify_tightness(capsys):
    code, out, _ = run(capsys, "verify", "tightness")
    assert code == 0
    assert "4/4 passed" in out


def test_verify_quadrangulated(capsys):
    code, out, _ = run(capsys, "verify", "quadrangulated")
    assert code == 0
    assert "2/2 passed" in out


def test_verify_reproducible(capsys):
    code1, out1, _ = run(
        capsys, "verify", "tree-bound", "--count", "20", "--seed", "5"
    )
    code2, out2, _ = run(
        capsys, "verify", "tree-bound", "--count", "20", "--seed", "5"
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_n_range_flag(capsys):
    code, out, _ = run(
        capsys, "verify", "chordal-bound", "--count", "10", "--n-range", "4..8"
    )
    assert code == 0
    assert "10/10 passed" in out


def test_unknown_suite_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "nope")
    assert code == 2
