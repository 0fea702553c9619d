"""Command line driver: parsing, reports, exit codes, determinism."""

import json

import pytest

from quotlat.cli import main


def run(capsys, args):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lattice_invariants(capsys):
    code, out, _ = run(capsys, ["lattice", "U^3 + E8(-1)^2", "--invariants"])
    assert code == 0
    assert "rank               22" in out
    assert "determinant        -1" in out
    assert "signature          (3, 19)" in out


def test_lattice_from_file(tmp_path, capsys):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"gram": [[0, 3], [3, 0]]}))
    code, out, _ = run(capsys, ["lattice", str(f), "--invariants"])
    assert code == 0
    assert "determinant        -9" in out


def test_snf_command(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps([[2, 4], [6, 8]]))
    code, out, _ = run(capsys, ["snf", str(f)])
    assert code == 0
    assert "elementary divisors [2, 4]" in out


def test_jordan_command(tmp_path, capsys):
    f = tmp_path / "phi.json"
    f.write_text(json.dumps([[0, -1], [1, -1]]))
    code, out, _ = run(capsys, ["jordan", "--matrix", str(f), "--prime", "3"])
    assert code == 0
    assert "p = 3, rank 2" in out
    assert "l_1 = 0  l_2 = 1  l_3 = 0" in out
    assert "invariant rank = 0" in out


def test_normality_default_route(capsys):
    code, out, _ = run(capsys, ["normality", "k3-sympl-7"])
    assert code == 0
    assert "H^2: Normal" in out
    assert "chain 3 >= 3 >= 2; parity holds" in out


def test_normality_single_criterion(capsys):
    code, out, _ = run(capsys, ["normality", "Y7", "--criterion", "simple"])
    assert code == 0
    assert "middle degree with l_1 = 1" in out


def test_normality_counterexample_matches_expectation(capsys):
    # a NotNormal verdict that the record declares is still a success
    code, out, _ = run(capsys, ["normality", "CE2"])
    assert code == 0
    assert "H^2: NotNormal" in out
    assert "alpha in [1, 1]" in out


def test_normality_unknown_scenario(capsys):
    code, _, err = run(capsys, ["normality", "nope"])
    assert code == 2
    assert err.startswith("error: ")


def test_quotient_fourfold(capsys):
    code, out, _ = run(capsys, ["quotient", "M11a"])
    assert code == 0
    assert "Fujiki constant    C = 33" in out
    assert "pushforward index  p^2" in out
    assert "[ 2   3  -8]" in out


def test_weight_command(capsys):
    code, out, _ = run(capsys, ["weight", "--exponents", "1", "1", "4", "4", "--prime", "5"])
    assert code == 0
    assert "weight 1" in out


def test_weight2d_command(capsys):
    code, out, _ = run(capsys, ["weight2d", "5", "2"])
    assert code == 0
    assert "weight 1" in out
    assert "HJ [3, 2]" in out


def test_hilb2_command(capsys):
    code, out, _ = run(capsys, ["hilb2"])
    assert code == 0
    assert "S-lattice determinant 160" in out


def test_verify_paper_all_rows(capsys):
    code, out, _ = run(capsys, ["verify-paper"])
    assert code == 0
    assert "18/18 rows pass" in out


def test_verify_paper_filter(capsys):
    code, out, _ = run(capsys, ["verify-paper", "--filter", "M11"])
    assert code == 0
    assert "2/2 rows pass" in out


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, ["verify-paper", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["rows"]) == 18
    assert all(row["passed"] for row in payload["rows"])


def test_verify_paper_deterministic(capsys):
    _, first, _ = run(capsys, ["verify-paper"])
    _, second, _ = run(capsys, ["verify-paper"])
    assert first == second


def test_verify_paper_no_match(capsys):
    code, _, err = run(capsys, ["verify-paper", "--filter", "nonsense"])
    assert code == 2
    assert "no catalog row matches" in err


def test_bad_matrix_file(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{\"rows\": 3}")
    code, _, err = run(capsys, ["snf", str(f)])
    assert code == 2
    assert err.startswith("error: ")
