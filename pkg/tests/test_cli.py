import io
import json

from nclgraph import gen_cycle, to_edgelist_text
from nclgraph.cli import cli_dispatch


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli_dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_multipartite_edgelist(capsys):
    code, out, _ = run_cli(capsys, ["gen", "multipartite", "2", "2"])
    assert code == 0
    assert out == "4 4\n0 2\n0 3\n1 2\n1 3\n"


def test_gen_writes_identical_bytes_to_file(tmp_path, capsys):
    code, out, _ = run_cli(capsys, ["gen", "cycle", "5", "--format", "graph6"])
    assert code == 0
    target = tmp_path / "c5.g6"
    code = cli_dispatch(["gen", "cycle", "5", "--format", "graph6", "-o", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_text() == out


def test_gen_param_count_checked(capsys):
    code, _, err = run_cli(capsys, ["gen", "multipartite", "3"])
    assert code == 2
    assert "parameters" in err


def test_gen_unknown_family_usage_error(capsys):
    code, _, _ = run_cli(capsys, ["gen", "hypercube", "3"])
    assert code == 2


def test_gen_marking_transversal_flag(capsys):
    code, out, _ = run_cli(
        capsys, ["gen", "marking", "0", "5", "--transversals", "none"]
    )
    assert code == 0
    assert out == "4 3\n0 1\n0 3\n1 2\n"


def test_ncl_from_stdin_pipeline(capsys, monkeypatch):
    gen_code, graph_text, _ = run_cli(capsys, ["gen", "multipartite", "3", "2"])
    assert gen_code == 0
    code, out, _ = run_cli(capsys, ["ncl", "-"], stdin=graph_text, monkeypatch=monkeypatch)
    assert code == 0
    assert out == "6\n"


def test_ncl_reads_graph6(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["ncl", "-"], stdin="Cl\n", monkeypatch=monkeypatch)
    assert code == 0
    assert out == "4\n"


def test_ncl_certificate_json(capsys, monkeypatch):
    graph_text = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys, ["ncl", "-", "--certificate"], stdin=graph_text, monkeypatch=monkeypatch
    )
    assert code == 0
    data = json.loads(out)
    assert data == {
        "schema_version": 1,
        "ncl": 4,
        "certificate": {"b": [0, 1, 2, 3], "a": [3, 0, 1]},
    }


def test_ncl_naive_flag(capsys, monkeypatch):
    graph_text = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys, ["ncl", "-", "--naive"], stdin=graph_text, monkeypatch=monkeypatch
    )
    assert code == 0 and out == "4\n"
    code, _, err = run_cli(
        capsys,
        ["ncl", "-", "--naive", "--certificate"],
        stdin=graph_text,
        monkeypatch=monkeypatch,
    )
    assert code == 2 and "exact engine" in err


def test_ncl_empty_graph_note(capsys, monkeypatch):
    code, out, err = run_cli(
        capsys, ["ncl", "-"], stdin="0 0\n", monkeypatch=monkeypatch
    )
    assert code == 0
    assert out == "0\n"
    assert "empty graph" in err


def test_ncl_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("NCLGRAPH_NCL_CAP", "3")
    graph_text = to_edgelist_text(gen_cycle(4))
    code, _, err = run_cli(
        capsys, ["ncl", "-"], stdin=graph_text, monkeypatch=monkeypatch
    )
    assert code == 2
    assert "cap" in err


def test_invariants_text(capsys, monkeypatch):
    graph_text = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys, ["invariants", "-"], stdin=graph_text, monkeypatch=monkeypatch
    )
    assert code == 0
    assert "clique_number" in out and "2/3" in out


def test_invariants_json(capsys, monkeypatch):
    graph_text = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys, ["invariants", "-", "--json"], stdin=graph_text, monkeypatch=monkeypatch
    )
    assert code == 0
    data = json.loads(out)
    assert data == {
        "schema_version": 1,
        "vertex_count": 4,
        "edge_count": 4,
        "density": "2/3",
        "clique_number": 2,
        "chromatic_number": 2,
        "half_graph_height_general": 1,
        "half_graph_height_bipartite": 1,
    }


def test_obstruct_exit_codes(capsys, monkeypatch):
    c4 = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys,
        ["obstruct", "-", "--genus", "0", "--punctures", "5"],
        stdin=c4,
        monkeypatch=monkeypatch,
    )
    assert code == 1
    assert "verdict: obstructed" in out
    c5 = to_edgelist_text(gen_cycle(5))
    code, out, _ = run_cli(
        capsys,
        ["obstruct", "-", "--genus", "0", "--punctures", "5"],
        stdin=c5,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert "verdict: no_obstruction_found" in out


def test_obstruct_json_schema(capsys, monkeypatch):
    c4 = to_edgelist_text(gen_cycle(4))
    code, out, _ = run_cli(
        capsys,
        ["obstruct", "-", "--genus", "0", "--punctures", "5", "--all-tests", "--json"],
        stdin=c4,
        monkeypatch=monkeypatch,
    )
    assert code == 1
    data = json.loads(out)
    assert data["schema_version"] == 1
    assert data["verdict"] == "obstructed"
    assert [t["test_name"] for t in data["fired_tests"]][0] == "multipartite"


def test_surface_table(capsys):
    code, out, _ = run_cli(capsys, ["surface", "--genus", "2", "--punctures", "0"])
    assert code == 0
    assert "ncl_bound" in out and "6" in out
    assert "upper_density" in out and "1/2" in out


def test_surface_json(capsys):
    code, out, _ = run_cli(
        capsys, ["surface", "--genus", "0", "--punctures", "5", "--json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["ncl_bound"] == 4 and data["upper_density"] == "0"
    assert data["exceptional"] is True


def test_surface_rejects_low_complexity(capsys):
    code, _, err = run_cli(capsys, ["surface", "--genus", "0", "--punctures", "4"])
    assert code == 2
    assert "curve graph has no" in err


def test_verify_valid_and_tampered(tmp_path, capsys):
    graph_file = tmp_path / "c4.txt"
    graph_file.write_text(to_edgelist_text(gen_cycle(4)))
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(json.dumps({"b": [0, 1, 2, 3], "a": [3, 0, 1]}))
    code = cli_dispatch(["verify", str(graph_file), str(cert_file)])
    out = capsys.readouterr().out
    assert code == 0 and "valid" in out and "length 4" in out

    cert_file.write_text(json.dumps({"b": [0, 1, 2, 3], "a": [3, 0, 0]}))
    code = cli_dispatch(["verify", str(graph_file), str(cert_file)])
    out = capsys.readouterr().out
    assert code == 1
    assert "invalid certificate" in out and "escape" in out


def test_verify_accepts_wrapped_certificate(tmp_path, capsys):
    graph_file = tmp_path / "c4.txt"
    graph_file.write_text(to_edgelist_text(gen_cycle(4)))
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(
        json.dumps({"schema_version": 1, "ncl": 4, "certificate": {"b": [0, 1, 2, 3], "a": [3, 0, 1]}})
    )
    assert cli_dispatch(["verify", str(graph_file), str(cert_file)]) == 0
    capsys.readouterr()


def test_missing_file_is_exit_2(capsys):
    code, _, err = run_cli(capsys, ["ncl", "/nonexistent/graph.txt"])
    assert code == 2
    assert "error" in err


def test_unknown_subcommand_and_flag(capsys):
    assert run_cli(capsys, ["frobnicate"])[0] == 2
    assert run_cli(capsys, ["surface", "--genus", "2", "--punctures", "0", "--wat"])[0] == 2


def test_experiment_enumerate_deterministic(capsys):
    argv = [
        "experiment",
        "enumerate",
        "--n",
        "6",
        "--genus",
        "0",
        "--punctures",
        "5",
        "--samples",
        "50",
        "--seed",
        "3",
    ]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv + ["--workers", "2"])
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["total"] == 50


def test_experiment_exhaustive(capsys):
    argv = [
        "experiment",
        "enumerate",
        "--n",
        "4",
        "--genus",
        "0",
        "--punctures",
        "5",
    ]
    code, out, _ = run_cli(capsys, argv)
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 64
    assert data["passed_clique"] == 41
    assert data["fraction"] == "3/41"


def test_help_exits_zero(capsys):
    assert run_cli(capsys, ["--help"])[0] == 0
