import json
import subprocess
import sys

import pytest

from primroot import decompose_with_witnesses, is_primitive_root, pfield_polynomial_roots
from primroot.cli import main

from oracles import primes_below


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv, "--format", "json")
    return status, json.loads(out)


def test_find_text(capsys):
    status, out, _ = run(capsys, "find", "7")
    assert status == 0
    assert "primitive root of 7: 5" in out
    assert "order: 6 = 2^1*3^1" in out
    assert "witnesses: 6, 2" in out


def test_find_json(capsys):
    status, data = run_json(capsys, "find", "7")
    assert status == 0
    assert data == {
        "p": 7,
        "root": 5,
        "order": 6,
        "factors": [{"q": 2, "n": 1}, {"q": 3, "n": 1}],
        "witnesses": [6, 2],
    }


def test_find_json_round_trips_library_values(capsys):
    for p in primes_below(300):
        _, data = run_json(capsys, "find", str(p))
        res = decompose_with_witnesses(p)
        assert data["root"] == res.root.residue
        assert data["witnesses"] == [w.residue for w in res.witnesses]
        assert [(f["q"], f["n"]) for f in data["factors"]] == list(res.factors)
        prod = 1
        for w in data["witnesses"]:
            prod = prod * w % p
        assert prod == data["root"] % p


def test_find_composite(capsys):
    status, out, err = run(capsys, "find", "91")
    assert status == 2
    assert out == ""
    assert "smallest factor 7" in err


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "2", "7")
    assert status == 1 and "not a primitive root" in out
    status, out, _ = run(capsys, "verify", "3", "7")
    assert status == 0 and "3 is a primitive root of 7" in out


def test_verify_sweep_matches_oracle(capsys):
    for p in primes_below(62):
        for g in range(p):
            status, _, _ = run(capsys, "verify", str(g), str(p))
            assert status == (0 if is_primitive_root(g, p) else 1)


def test_verify_rejects_out_of_range_residue(capsys):
    status, _, err = run(capsys, "verify", "9", "7")
    assert status == 2 and "residue" in err


def test_order(capsys):
    status, out, _ = run(capsys, "order", "2", "7")
    assert status == 0
    assert "order of 2 mod 7: 3" in out and "trace: 2 4 1" in out
    status, data = run_json(capsys, "order", "3", "7")
    assert data["order"] == 6 and data["trace"] == [3, 2, 6, 4, 5, 1]
    status, _, _ = run(capsys, "order", "0", "7")
    assert status == 2


def test_witness(capsys):
    status, data = run_json(capsys, "witness", "2", "2", "13")
    assert status == 0 and data["witness"] == 5 and data["order"] == 4
    status, _, err = run(capsys, "witness", "2", "2", "7")
    assert status == 2 and "does not divide" in err
    status, _, _ = run(capsys, "witness", "4", "1", "13")
    assert status == 2


def test_roots(capsys):
    status, out, _ = run(capsys, "roots", "11", "2", "0", "1")
    assert status == 0
    assert "{3, 8}" in out and "count: 2" in out
    status, data = run_json(capsys, "roots", "7", "-1", "0", "0", "0", "0", "0", "1")
    assert data["roots"] == pfield_polynomial_roots([-1, 0, 0, 0, 0, 0, 1], 7) == [1, 2, 3, 4, 5, 6]
    assert data["count"] == 6
    status, _, _ = run(capsys, "roots", "7", "1", "7")
    assert status == 2


@pytest.mark.parametrize(
    "argv",
    [["find", "x"], ["find", "-3"], ["find", str(2**31)], ["verify", "2"], ["bogus"], [], ["find", "7", "--format", "xml"]],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_selftest_small_bound(capsys):
    status, data = run_json(capsys, "selftest", "--bound", "31")
    assert status == 0 and data["pass"] is True
    assert all(entry["pass"] for entry in data["properties"])
    status, out, _ = run(capsys, "selftest", "--bound", "31")
    assert "FAIL" not in out and out.count("PASS") == len(data["properties"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "primroot", "find", "13", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["root"] == 2
