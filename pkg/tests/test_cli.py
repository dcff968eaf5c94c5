import json

import pytest

from sonlap import GENERAL, SO4, TracePoly, lap_partition, Partition
from sonlap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_spectrum_so3_bound4(capsys):
    code, out, _ = run(capsys, "spectrum", "--target", "so3", "--bound", "4")
    assert code == 0
    values = [line.split("\t")[0] for line in out.strip().splitlines()]
    assert values == ["0", "-1", "-3", "-6", "-10"]


def test_spectrum_sphere_needs_n(capsys):
    code, _, err = run(capsys, "spectrum", "--target", "sphere", "--bound", "3")
    assert code == 2
    assert "requires --n" in err


def test_lap_empty_partition_is_zero(capsys):
    code, out, _ = run(capsys, "lap", "--mode", "generaln", "--partition", "0")
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_lap_json_round_trip(capsys):
    code, out, _ = run(capsys, "lap", "--mode", "generaln", "--partition", "2,1")
    assert code == 0
    pretty_line, json_line = out.strip().splitlines()
    assert "p_(2,1,0)" in pretty_line
    rebuilt = TracePoly.from_json_obj(json.loads(json_line), GENERAL)
    assert rebuilt == lap_partition(Partition.of(2, 1))


def test_lap_so4_mode(capsys):
    code, out, _ = run(capsys, "lap", "--mode", "so4", "--partition", "3")
    assert code == 0
    json_line = out.strip().splitlines()[1]
    rebuilt = TracePoly.from_json_obj(json.loads(json_line), SO4)
    from sonlap import lap, so4_pm_in_p1p2

    assert rebuilt == lap(so4_pm_in_p1p2(3))


def test_matrix_latex_so4_k4(capsys):
    code, out, _ = run(capsys, "matrix", "--mode", "so4", "--k", "4", "--format", "latex")
    assert code == 0
    flat = "".join(out.split())
    expected_rows = [
        r"p_0&0&0&1&1&0&0&0&0&8\\",
        r"p_1&0&-\frac{3}{2}&0&0&12&0&0&0&0\\",
        r"p_1^2&0&0&-3&-1&0&0&24&-4&-16\\",
        r"p_2&0&0&-1&-3&0&0&0&4&8\\",
        r"p_1^3&0&0&0&0&-\frac{9}{2}&0&0&0&0\\",
        r"p_1p_2&0&0&0&0&-3&-\frac{15}{2}&0&0&0\\",
        r"p_1^4&0&0&0&0&0&0&-6&1&2\\",
        r"p_1^2p_2&0&0&0&0&0&0&-6&-12&-6\\",
        r"p_2^2&0&0&0&0&0&0&0&-1&-8\\",
    ]
    for row in expected_rows:
        assert "".join(row.split()) in flat


def test_matrix_json_round_trip(capsys):
    code, out, _ = run(capsys, "matrix", "--mode", "so3", "--basis", "btrace", "--k", "3",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["basis"] == ["p_0", "p_1", "p_2", "p_3"]
    assert obj["entries"][0] == ["0", "0", "1", "3"]


def test_matrix_csv(capsys):
    code, out, _ = run(capsys, "matrix", "--mode", "so3", "--basis", "bprime", "--k", "2",
                       "--format", "csv")
    assert code == 0
    assert "row,col,value,exact" in out


def test_matrix_invalid_basis_combo(capsys):
    code, _, err = run(capsys, "matrix", "--mode", "so3", "--basis", "so4", "--k", "2")
    assert code == 2
    assert "--basis" in err


def test_characters_so3(capsys):
    code, out, _ = run(capsys, "characters", "--mode", "so3", "--k", "2")
    assert code == 0
    assert "eigenvalue -3" in out


def test_characters_so4_half_integers(capsys):
    code, out, _ = run(capsys, "characters", "--mode", "so4", "--j1", "3/2", "--j2", "1/2",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["eigenvalue"] == "-9/2"


def test_characters_so4_parity_rejected(capsys):
    code, _, err = run(capsys, "characters", "--mode", "so4", "--j1", "1/2", "--j2", "1")
    assert code == 2
    assert "integer" in err


def test_verify_identities_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n", "3",
                       "--samples", "4", "--seed", "9")
    assert code == 0
    reports = json.loads(out)
    assert all(r["pass"] for r in reports)


def test_verify_laplacian_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "laplacian", "--n", "3", "--k", "2",
                       "--samples", "4", "--seed", "9")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 4  # partitions of degree <= 2


def test_verify_gegenbauer_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gegenbauer", "--n", "4", "--k", "2",
                       "--samples", "4", "--seed", "9")
    assert code == 0


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "laplacian", "--n", "3", "--k", "2",
                       "--samples", "4", "--seed", "9", "--tol", "1e-30")
    assert code == 1


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "lap", "--mode", "bogus", "--partition", "1")
    assert code == 2
    code, _, _ = run(capsys, "nonsense")
    assert code == 2


def test_byte_determinism(capsys):
    args = ("verify", "--suite", "identities", "--n", "3", "--samples", "3", "--seed", "4")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    args = ("matrix", "--mode", "so4", "--k", "3", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SONLAP_SEED", "31415")
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n", "3", "--samples", "2")
    assert code == 0
    assert all(r["seed"] == 31415 for r in json.loads(out))
