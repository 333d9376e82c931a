"""Command-line interface: subcommands, exit codes, and certificate
round trips through an independent verify invocation."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from orthograph.cli import main
from orthograph.graphs import kneser, read_dimacs, write_dimacs


def run_cli(args):
    return main(list(args))


def test_gen_kneser_petersen(tmp_path, capsys):
    out = tmp_path / "g.dimacs"
    assert run_cli(["gen", "kneser", "5", "2", "-o", str(out)]) == 0
    g = read_dimacs(out.read_text())
    assert g.n == 10 and g.num_edges == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_gen_to_stdout(capsys):
    assert run_cli(["gen", "cycle", "5"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("p edge 5 5")


def test_gen_usage_errors(capsys):
    assert run_cli(["gen", "kneser", "5"]) == 2
    assert run_cli(["gen", "kneser", "five", "two"]) == 2
    assert run_cli(["gen", "kneser", "3", "2"]) == 2


def test_solve_chi_local_petersen_json(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text(write_dimacs(kneser(5, 2)))
    assert run_cli(["solve", "chi-local", str(g), "--json"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["schema"] == 1
    assert cert["param"] == "chi-local"
    assert cert["value"] == 3
    assert cert["exact"] is True
    assert cert["verified"] is True
    assert len(cert["witness"]["coloring"]) == 10


def test_solve_plain_output(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text(write_dimacs(kneser(5, 2)))
    assert run_cli(["solve", "chi", str(g)]) == 0
    assert capsys.readouterr().out.strip() == "chi = 3"


def test_solve_certificates_pass_verify(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
    for param, extra in [
        ("chi", []),
        ("chi-local", []),
        ("od", ["--field", "2"]),
        ("od-local", ["--field", "2"]),
        ("minrank", ["--field", "2"]),
    ]:
        cert = tmp_path / f"{param}.json"
        assert run_cli(["solve", param, str(g), *extra, "-o", str(cert)]) == 0
        capsys.readouterr()
        # verify runs as a separate process, sharing nothing with the solver
        proc = subprocess.run(
            [sys.executable, "-m", "orthograph.cli", "verify", str(cert), str(g)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert "verification ok" in proc.stdout


def test_verify_rejects_tampered_certificate(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
    cert_path = tmp_path / "cert.json"
    assert run_cli(["solve", "chi", str(g), "-o", str(cert_path)]) == 0
    cert = json.loads(cert_path.read_text())
    cert["value"] = 2
    cert_path.write_text(json.dumps(cert))
    assert run_cli(["verify", str(cert_path), str(g)]) == 1
    capsys.readouterr()


def test_solve_cap_exceeded_exit_code(tmp_path, capsys):
    edges = [(u, v) for u in range(1, 14) for v in range(u + 1, 14)]
    lines = [f"p edge 13 {len(edges)}"] + [f"e {u} {v}" for u, v in edges]
    g = tmp_path / "big.dimacs"
    g.write_text("\n".join(lines) + "\n")
    assert run_cli(["solve", "minrank", str(g), "--field", "2"]) == 3
    capsys.readouterr()


def test_solve_rejects_rational_field_for_search(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert run_cli(["solve", "minrank", str(g), "--field", "Q"]) == 2
    capsys.readouterr()


def test_reduce_writes_graph_and_roles(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    out = tmp_path / "g.dimacs"
    roles = tmp_path / "roles.json"
    assert run_cli(["reduce", str(cnf), "--stage", "G", "-o", str(out), "--roles", str(roles)]) == 0
    g = read_dimacs(out.read_text())
    assert g.n == 9
    payload = json.loads(roles.read_text())
    assert payload["roles"][0] == ["w"]
    assert payload["roles"][3] == ["literal", 1, True]
    assert run_cli(["reduce", str(cnf), "--stage", "Gprime", "-o", str(out)]) == 0
    assert read_dimacs(out.read_text()).n == 81
    assert run_cli(["reduce", str(cnf), "--stage", "Gk", "--k", "5", "-o", str(out)]) == 0
    assert read_dimacs(out.read_text()).n == 83


def test_reduce_gk_requires_k_at_least_four(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 1\n1 2 0\n")
    assert run_cli(["reduce", str(cnf), "--stage", "Gk", "--k", "3"]) == 2
    capsys.readouterr()


def test_index_code_json_and_verify(tmp_path, capsys):
    g = tmp_path / "g.dimacs"
    g.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
    out = tmp_path / "code.json"
    assert run_cli([
        "index-code", str(g), "--field", "2", "--method", "minrank",
        "--simulate", "50", "-o", str(out),
    ]) == 0
    payload = json.loads(out.read_text())
    assert payload["length"] == 3
    assert payload["simulation"] == {"trials": 50, "failures": 0, "length": 3}
    assert run_cli(["verify", str(out), str(g)]) == 0
    capsys.readouterr()


def test_index_code_deterministic_for_fixed_seed(tmp_path):
    g = tmp_path / "g.dimacs"
    g.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run_cli([
            "index-code", str(g), "--field", "5", "--method", "compress",
            "--seed", "3", "-o", str(out),
        ]) == 0
    assert a.read_text() == b.read_text()


def test_missing_file_is_usage_error(capsys):
    assert run_cli(["solve", "chi", "/nonexistent.dimacs"]) == 2
    capsys.readouterr()


def test_cli_entry_point_runs_as_module(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "orthograph.cli", "gen", "complete", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("p edge 3 3")
