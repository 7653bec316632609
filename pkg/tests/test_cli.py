import json

import pytest

from permlab import enumeration
from permlab.cli import DiskCache, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_total(capsys):
    code, out, _ = run_cli(capsys, "count", "--kind", "ballot", "--n", "6")
    assert (code, out.strip()) == (0, "225")


def test_count_cell(capsys):
    code, out, _ = run_cli(capsys, "count", "--kind", "ballot", "--n", "4",
                           "--d", "1", "--i", "3", "--j", "1")
    assert (code, out.strip()) == (0, "2")


def test_count_domain_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "count", "--kind", "ballot", "--n", "4",
                           "--i", "2", "--j", "2")
    assert code == 2
    assert "permlab" in err


def test_count_budget_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "count", "--kind", "ballot", "--n", "12")
    assert code == 2
    assert "budget" in err


def test_matrix_text(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--kind", "ballot", "--n", "3")
    assert (code, out.strip()) == (0, "0 1\n1 0")


def test_matrix_json(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--kind", "odd", "--n", "4",
                           "--d", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"kind": "odd", "n": 4, "d": 1, "entries": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}


def test_matrix_csv(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--kind", "ballot", "--n", "3",
                           "--format", "csv")
    assert out.splitlines()[0] == "i\\j,1,2"
    assert out.splitlines()[1:] == ["1,0,1", "2,1,0"]


def test_enumerate_ballot(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--kind", "ballot", "--n", "3")
    assert (code, out.splitlines()) == (0, ["1 2 3", "1 3 2", "2 3 1"])


def test_enumerate_odd(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--kind", "odd", "--n", "3")
    assert (code, out.splitlines()) == (0, ["(1)(2)(3)", "(1 2 3)", "(1 3 2)"])


def test_map_shift(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "T", "--kind", "linear",
                           "--i", "4", "--j", "6", "--perm", "3 8 2 5 4 9 6 7 1")
    assert (code, out.strip()) == (0, "3 8 2 6 4 5 9 7 1")


def test_map_shift_cyclic(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "T", "--kind", "cyclic",
                           "--i", "3", "--j", "9",
                           "--perm", "(1,6,8,2,10)(3,12,9,11,7,5,4)")
    assert (code, out.strip()) == (0, "(1 3 6 2 7)(4 12 10 9 8 11 5)")


def test_map_shift_inverse(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "Tinv", "--i", "4", "--j", "6",
                           "--perm", "3 8 2 6 4 5 9 7 1")
    assert (code, out.strip()) == (0, "3 8 2 5 4 9 6 7 1")


def test_map_flank_swap_and_back(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "f", "--i", "1", "--j", "3",
                           "--perm", "1 5 2 3 4")
    assert (code, out.strip()) == (0, "2 3 5 1 4")
    code, out, _ = run_cli(capsys, "map", "--op", "g", "--i", "1", "--j", "3",
                           "--perm", "2 3 5 1 4")
    assert (code, out.strip()) == (0, "1 5 2 3 4")


def test_map_phi(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "phi", "--i", "1", "--j", "3",
                           "--perm", "1 5 2 4 3")
    assert (code, out.strip()) == (0, "1 5 3 4 2")


def test_map_contract_and_inverse(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "contract", "--i", "1", "--j", "2",
                           "--perm", "1 5 2 3 4")
    assert (code, out.strip()) == (0, "1 2 3")
    code, out, _ = run_cli(capsys, "map", "--op", "contract", "--inverse",
                           "--i", "1", "--j", "2", "--perm", "1 2 3")
    assert (code, out.strip()) == (0, "1 5 2 3 4")


def test_map_flip(capsys):
    code, out, _ = run_cli(capsys, "map", "--op", "flip", "--kind", "cyclic",
                           "--perm", "(1 7 2 3 6 5 4)")
    assert (code, out.strip()) == (0, "(1 7 3 2 4 5 6)")


def test_map_errors(capsys):
    code, _, err = run_cli(capsys, "map", "--op", "T", "--i", "4", "--j", "6",
                           "--perm", "1 2 3")
    assert code == 2 and err
    code, _, err = run_cli(capsys, "map", "--op", "f", "--kind", "cyclic",
                           "--i", "1", "--j", "3", "--perm", "(1 5 2 3 4)")
    assert code == 2
    code, _, err = run_cli(capsys, "map", "--op", "T", "--perm", "1 5 2 3 4")
    assert code == 2  # missing --i/--j


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_text_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "toeplitz_B", "--max-n", "6")
    assert code == 0
    assert "toeplitz_B: PASS" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "symmetry_P", "--max-n", "6",
                           "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["check"] == "symmetry_P"
    assert obj["status"] == "pass"
    assert obj["counterexamples"] == []


def test_verify_fail_exit_1(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "prop43_words", "--max-n", "5")
    assert code == 1
    assert "FAIL" in out and "counterexample" in out


def test_verify_budget_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--check", "toeplitz_B", "--max-n", "11")
    assert code == 2 and "budget" in err


def test_verify_all_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "all", "--max-n", "5")
    lines = [line for line in out.splitlines() if ":" in line and "counterexample" not in line]
    assert len(lines) == 18
    # everything passes at this bound except the word-pair reduction check
    assert code == 1
    assert sum("FAIL" in line for line in lines) == 1


def test_disk_cache_round_trip(tmp_path):
    cache = DiskCache(tmp_path)
    table = enumeration.count_table("ballot", 5)
    cache.save(table)
    loaded = cache.load("ballot", 5)
    assert loaded == table
    assert cache.load("ballot", 6) is None


def test_disk_cache_rejects_corruption(tmp_path):
    cache = DiskCache(tmp_path)
    table = enumeration.count_table("ballot", 5)
    cache.save(table)
    path = cache._path("ballot", 5)
    blob = json.loads(path.read_text())
    blob["totals"][0] += 1  # tamper without fixing the checksum
    path.write_text(json.dumps(blob))
    assert cache.load("ballot", 5) is None
    path.write_text("not json at all")
    assert cache.load("ballot", 5) is None


def test_cache_dir_flag_writes_and_reuses(tmp_path, capsys):
    enumeration.clear_memo()
    code, first, _ = run_cli(capsys, "--cache-dir", str(tmp_path),
                             "count", "--kind", "ballot", "--n", "6")
    assert code == 0
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    enumeration.clear_memo()
    code, second, _ = run_cli(capsys, "--cache-dir", str(tmp_path),
                              "count", "--kind", "ballot", "--n", "6")
    assert code == 0
    assert first == second  # byte-identical on cache hit vs miss


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    enumeration.clear_memo()
    monkeypatch.setenv("PERMLAB_CACHE", str(tmp_path))
    code, out, _ = run_cli(capsys, "count", "--kind", "odd", "--n", "5")
    assert (code, out.strip()) == (0, "45")
    assert list(tmp_path.glob("odd-n5*.json"))
