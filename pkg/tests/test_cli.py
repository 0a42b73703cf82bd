import json

import pytest

from coinmard.cli import CSV_COLUMNS, main
from coinmard import matrix_io


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cert_17(capsys):
    code, out, _ = run(capsys, "cert", "17")
    assert code == 0
    assert "N=48" in out and "k=6" in out and "t=7" in out
    assert "4*18 + 4*14 = 128 = 2^7" in out


def test_cert_even_v_rejected(capsys):
    code, _, err = run(capsys, "cert", "16")
    assert code == 1
    assert "error" in err


def test_cert_json(capsys):
    code, out, _ = run(capsys, "cert", "19", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["g"] == 4 and obj["t"] == 6


def test_audit_csv(tmp_path, capsys):
    out_file = tmp_path / "audit.csv"
    code, out, _ = run(capsys, "audit", "--from", "9", "--to", "100", "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    v17 = [l for l in lines if l.startswith("17,")]
    assert len(v17) == 1 and v17[0].endswith("true")
    assert out.startswith("violations=") and "max_gap=" in out


def test_audit_header_golden(tmp_path, capsys):
    out_file = tmp_path / "a.csv"
    run(capsys, "audit", "--from", "9", "--to", "9", "--out", str(out_file))
    lines = out_file.read_text().splitlines()
    assert lines[0] == "v,residue,g,d,N,k,t,order_exponent,t_min,bound_claimed,bound_corrected,k_paper,t_paper,violates_claimed"
    assert len(lines) == 2  # header + single data row


def test_audit_deterministic(tmp_path, capsys):
    f1 = tmp_path / "1.csv"
    f2 = tmp_path / "2.csv"
    run(capsys, "audit", "--from", "9", "--to", "200", "--primes", "--out", str(f1))
    run(capsys, "audit", "--from", "9", "--to", "200", "--primes", "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_audit_bad_range(capsys):
    code, _, err = run(capsys, "audit", "--from", "100", "--to", "9")
    assert code == 1 and "error" in err


def test_construct_sylvester(tmp_path, capsys):
    out_file = tmp_path / "s4.had"
    code, out, _ = run(capsys, "construct", "sylvester", "4", "--out", str(out_file))
    assert code == 0
    assert "order=16" in out and "verify_ms=" in out
    n, rows = matrix_io.read_text(out_file)
    assert n == 16 and len(rows) == 16


def test_construct_paley(tmp_path, capsys):
    out_file = tmp_path / "p7.had"
    code, out, _ = run(capsys, "construct", "paley", "7", "--out", str(out_file))
    assert code == 0 and "order=8" in out


def test_construct_kronecker(tmp_path, capsys):
    a = tmp_path / "a.had"
    b = tmp_path / "b.had"
    c = tmp_path / "c.had"
    run(capsys, "construct", "paley", "3", "--out", str(a))
    run(capsys, "construct", "sylvester", "2", "--out", str(b))
    code, out, _ = run(capsys, "construct", "kronecker", str(a), str(b), "--out", str(c))
    assert code == 0 and "order=16" in out
    n, _ = matrix_io.read_text(c)
    assert n == 16


def test_construct_cap(capsys, monkeypatch):
    monkeypatch.setenv("COINMARD_MAX_ORDER", "8")
    code, _, err = run(capsys, "construct", "sylvester", "5")
    assert code == 3 and "cap" in err


def test_construct_bad_params(capsys):
    code, _, _ = run(capsys, "construct", "paley", "5")
    assert code == 1
    code, _, _ = run(capsys, "construct", "sylvester", "1", "2")
    assert code == 1


def test_construct_deterministic(tmp_path, capsys):
    f1 = tmp_path / "1.had"
    f2 = tmp_path / "2.had"
    run(capsys, "construct", "paley", "11", "--out", str(f1))
    run(capsys, "construct", "paley", "11", "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_verify_good_and_mutated(tmp_path, capsys):
    path = tmp_path / "s3.had"
    run(capsys, "construct", "sylvester", "3", "--out", str(path))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.strip() == "HADAMARD order=8"

    text = path.read_text()
    idx = text.index("+", text.index("\n") + 1)
    mutated = text[:idx] + "-" + text[idx + 1 :]
    path.write_text(mutated)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 2
    assert out.startswith("NOT HADAMARD violated at rows (")


def test_verify_ragged(tmp_path, capsys):
    path = tmp_path / "bad.had"
    path.write_text("2\n++\n+\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 1 and "line 3" in err


def test_mult_check_claimed(capsys):
    code, out, _ = run(capsys, "mult-check", "--model", "claimed", "--max", "200")
    assert code == 0
    assert out.strip().splitlines()[-1] == "violations=0"


def test_mult_check_corrected(capsys):
    code, out, _ = run(capsys, "mult-check", "--model", "corrected", "--max", "60")
    assert code == 0
    last = out.strip().splitlines()[-1]
    count = int(last.split("=")[1])
    violations = [l for l in out.splitlines() if l.startswith("violation p=")]
    assert len(violations) == count
    assert count > 0  # corrected model does not compose
    assert violations[0] == "violation p=19 q=19: 9 + 9 > 17"


def test_mult_check_below_domain(capsys):
    code, _, err = run(capsys, "mult-check", "--model", "claimed", "--max", "4")
    assert code == 1 and "error" in err
