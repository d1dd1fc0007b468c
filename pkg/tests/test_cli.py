import json
import subprocess
import sys

from commbench.cli import main


def test_gen_cluster_eval_summary_pipeline(tmp_path, capsys):
    edge = tmp_path / "net.tsv"
    truth = tmp_path / "truth.tsv"
    pred = tmp_path / "pred.tsv"

    assert main([
        "gen", "--model", "gn", "--mu", "0.05", "--seed", "3",
        "--out", str(edge), "--truth", str(truth),
    ]) == 0
    assert edge.exists() and truth.exists()

    assert main([
        "cluster", "--algo", "louvain", "--in", str(edge), "--out", str(pred),
    ]) == 0

    assert main(["eval", "--truth", str(truth), "--pred", str(pred)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("nmi=")
    assert float(out.split("=")[1]) > 0.9

    assert main(["summary", "--in", str(edge)]) == 0
    line = capsys.readouterr().out.splitlines()[0]
    assert line.startswith("N=128 ")

    assert main(["summary", "--in", str(edge), "--json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["N"] == 128 and record["E"] > 0


def test_gen_nsc_with_sizes(tmp_path):
    edge = tmp_path / "nsc.tsv"
    truth = tmp_path / "nsc_truth.tsv"
    assert main([
        "gen", "--model", "nsc", "--k", "4", "--mu", "0.1",
        "--sizes", "30,40,50", "--out", str(edge), "--truth", str(truth),
    ]) == 0
    assert len(truth.read_text().splitlines()) == 120


def test_gen_usage_errors(tmp_path):
    assert main(["gen", "--model", "nsc", "--out", str(tmp_path / "x")]) == 1
    assert main(["gen", "--model", "lfr", "--out", str(tmp_path / "x")]) == 1
    assert main(["gen"]) == 1  # missing required --model/--out


def test_missing_input_is_data_error(tmp_path):
    assert main([
        "cluster", "--algo", "lp", "--in", str(tmp_path / "nope.tsv"),
        "--out", str(tmp_path / "o.tsv"),
    ]) == 2


def test_malformed_edge_file_is_data_error(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("1\t1\n")
    assert main([
        "cluster", "--algo", "lp", "--in", str(bad), "--out", str(tmp_path / "o.tsv"),
    ]) == 2


def test_sweep_command_writes_csv_and_plots(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "models": ["lfr"],
        "sizes": [300],
        "degrees": [5],
        "mixings": [0.2],
        "ranges": {"20-50": [20, 50]},
        "algorithms": ["louvain", "lp"],
        "instances": 2,
    }))
    out = tmp_path / "results.csv"
    plots = tmp_path / "plots"
    assert main(["sweep", "--spec", str(spec), "--out", str(out), "--plots", str(plots)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1 + 2 * 2
    assert list(plots.glob("*.svg"))


def test_sweep_partial_failure_exit_code(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "models": ["lfr"],
        "sizes": [50],
        "degrees": [10],
        "mixings": [0.2],
        "ranges": {"20-50": [20, 50]},
        "algorithms": ["lp"],
        "instances": 1,
    }))
    out = tmp_path / "results.csv"
    assert main(["sweep", "--spec", str(spec), "--out", str(out)]) == 3
    assert "error" in out.read_text()


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "commbench.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "gen" in proc.stdout and "sweep" in proc.stdout
