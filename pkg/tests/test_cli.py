"""Command-line behavior: outputs, exit codes, config merge, export."""

import json
import subprocess
import sys

import pytest

from sykgraphs.cli import run
from sykgraphs.graphs import ColoredGraph


def test_series_prints_coefficients_one_per_line(capsys):
    assert run(["series", "--q", "3", "--delta", "0", "--n", "4"]) == 0
    assert capsys.readouterr().out == "1 1\n2 3\n3 12\n4 55\n"


def test_series_general_doubles_delta_one(capsys):
    assert run(["series", "--q", "3", "--delta", "1", "--n", "4"]) == 0
    bip = capsys.readouterr().out
    assert run(["series", "--q", "3", "--delta", "1", "--n", "4", "--general"]) == 0
    gen = capsys.readouterr().out
    for line_b, line_g in zip(bip.splitlines(), gen.splitlines()):
        k_b, c_b = line_b.split()
        k_g, c_g = line_g.split()
        assert k_b == k_g
        assert int(c_g) == 2 * int(c_b)


def test_count_tsv_has_single_header_for_ranges(capsys):
    assert run(["count", "--q", "3", "--n-range", "1:3"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "n\tdelta\ttotal\tsyk\tmelonic"
    assert sum(1 for line in lines if line.startswith("n\t")) == 1
    assert "3\t4\t4\t3\t1" in lines


def test_count_json_one_object_per_n(capsys):
    assert run(["count", "--q", "3", "--n-range", "1:2", "--format", "json"]) == 0
    payloads = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [p["n"] for p in payloads] == [1, 2]
    assert payloads[1]["rows"]["2"]["total"] == 1


def test_count_rejects_unknown_format(capsys):
    assert run(["count", "--q", "3", "--n", "2", "--format", "yaml"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_kernels_catalog_json_and_dot(capsys):
    assert run(["kernels", "--q", "3", "--delta", "1"]) == 0
    catalog = json.loads(capsys.readouterr().out)
    assert len(catalog) == 21
    assert run(["kernels", "--q", "3", "--delta", "1", "--dominant"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 18
    assert run(["kernels", "--q", "3", "--delta", "1", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert "graph kernel_0 {" in dot
    assert "graph kernel_20 {" in dot


def test_sample_reports_json_and_is_deterministic(capsys):
    argv = ["sample", "--q", "3", "--delta", "1", "--n", "8", "--trials", "200",
            "--seed", "4"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    report = json.loads(first)
    assert report["trials"] == 200
    assert report["seed"] == 4
    assert 0.0 <= report["fraction_syk"] <= 1.0
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    assert run(argv + ["--parallelism", "2"]) == 0
    assert capsys.readouterr().out == first


def test_sample_shallow_skips_deep_certificates(capsys):
    argv = ["sample", "--q", "3", "--delta", "1", "--n", "8", "--trials", "100",
            "--shallow"]
    assert run(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["fraction_all_certificates"] is None
    assert report["fraction_residues_melonic"] is None


def test_sample_emit_writes_replayable_graphs(tmp_path, capsys):
    emit = tmp_path / "graphs"
    argv = ["sample", "--q", "3", "--delta", "1", "--n", "6", "--trials", "5",
            "--seed", "12", "--emit", str(emit)]
    assert run(argv) == 0
    capsys.readouterr()
    files = sorted(p.name for p in emit.iterdir())
    assert files == [f"sample_{i:06d}.json" for i in range(5)]
    g = ColoredGraph.from_json((emit / "sample_000000.json").read_text())
    assert g.n_pairs == 6
    dot_dir = tmp_path / "dots"
    argv = ["sample", "--q", "3", "--delta", "1", "--n", "6", "--trials", "2",
            "--seed", "12", "--emit", str(dot_dir), "--format", "dot"]
    assert run(argv) == 0
    capsys.readouterr()
    text = (dot_dir / "sample_000001.dot").read_text()
    assert text.startswith("graph")


def test_check_agrees_across_routes(capsys):
    assert run(["check", "--q", "3", "--delta", "1", "--n-range", "1:4"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[-1] == "4 1 243 243 OK"
    assert all(line.endswith(" OK") for line in lines)


def test_check_requires_delta(capsys):
    assert run(["check", "--q", "3", "--n", "3"]) == 2
    assert "--delta" in capsys.readouterr().err


def test_asymptotics_prints_two_floats(capsys):
    assert run(["asymptotics", "--q", "3", "--delta", "1", "--n", "60"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0].startswith("estimate ")
    assert lines[1].startswith("ratio ")
    ratio = float(lines[1].split()[1])
    assert 0.5 < ratio < 2.0


def test_size_refusals_exit_two(capsys):
    assert run(["count", "--q", "3", "--n", "12"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("refused:")
    assert "limit" in err


def test_config_file_provides_defaults_flags_win(tmp_path, capsys):
    cfg = tmp_path / "series.json"
    cfg.write_text(json.dumps({"q": 3, "delta": 0, "n": 3}))
    assert run(["series", "--config", str(cfg)]) == 0
    assert capsys.readouterr().out == "1 1\n2 3\n3 12\n"
    assert run(["series", "--config", str(cfg), "--n", "4"]) == 0
    assert capsys.readouterr().out == "1 1\n2 3\n3 12\n4 55\n"


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"q": 3, "wat": 1}))
    assert run(["series", "--config", str(cfg), "--delta", "0", "--n", "2"]) == 2
    assert "wat" in capsys.readouterr().err


def test_export_writes_file(tmp_path, capsys):
    out = tmp_path / "series.txt"
    argv = ["export", "--what", "series", "--q", "3", "--delta", "0", "--n", "4",
            "--out", str(out)]
    assert run(argv) == 0
    assert out.read_text() == "1 1\n2 3\n3 12\n4 55\n"
    assert run(["export", "--what", "series", "--q", "3", "--delta", "0",
                "--n", "4"]) == 2
    assert "--out" in capsys.readouterr().err
    assert run(["export", "--what", "nonsense", "--out", str(out)]) == 2


def test_bad_flags_exit_two(capsys):
    assert run(["series", "--bogus", "1"]) == 2
    assert run(["count", "--q", "3", "--n-range", "5:2"]) == 2
    assert run([]) == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sykgraphs.cli", "series", "--q", "3",
         "--delta", "0", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 1\n2 3\n"
