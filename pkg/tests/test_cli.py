import json

import pytest

from bigrassmannian.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bn_all_methods(capsys):
    code, out, _ = run(capsys, "bn", "--n", "3", "--method", "all")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "OK"
    assert all("1 - 2*q + 2*q^3 - q^4" in line for line in lines[:-1])
    assert len(lines) == 5


def test_bn_single_method(capsys):
    code, out, _ = run(capsys, "bn", "--n", "4", "--method", "product")
    assert code == 0
    assert out.strip() == ("1 - 3*q + q^2 + 4*q^3 - 2*q^4 - 2*q^5 - 2*q^6"
                           " + 4*q^7 + q^8 - 3*q^9 + q^10")


def test_beta_output_format(capsys):
    code, out, _ = run(capsys, "beta", "--perm", "3412")
    assert code == 0
    assert out.strip() == "l=4 beta=8"


def test_reading_lists(capsys):
    code, out, _ = run(capsys, "reading", "--n", "3")
    assert code == 0
    assert out.strip() == "1 + 2*q + 2*q^3 + q^4"


def test_expand_weighted(capsys):
    code, out, _ = run(capsys, "expand", "--n", "2", "--weighted")
    assert code == 0
    assert out.strip() == "x1 + q*l*x2"


def test_bdet_matrix_file(tmp_path, capsys):
    path = tmp_path / "ones.txt"
    path.write_text("n=3\n1 ; 1 ; 1\n1 ; 1 ; 1\n1 ; 1 ; 1\n")
    for method in ("def", "deform", "condense"):
        code, out, _ = run(capsys, "bdet", "--matrix", str(path),
                           "--method", method)
        assert code == 0
        assert out.strip() == "1 - 2*q + 2*q^3 - q^4"


def test_bdet_missing_file(capsys):
    code, _, err = run(capsys, "bdet", "--matrix", "/nonexistent/m.txt")
    assert code == 2
    assert "error" in err


def test_verify_condensation_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "condensation",
                       "--n", "3", "--trials", "5", "--seed", "42")
    assert code == 0
    assert out.strip().splitlines()[-1] == "OK"
    assert "condensation identity" in out


def test_verify_named_suites_pass(capsys):
    for suite in ("beta", "signbalance", "bruhat"):
        code, out, _ = run(capsys, "verify", "--suite", suite,
                           "--max-n", "4", "--trials", "5")
        assert code == 0, out
        assert "FAIL" not in out


def test_verify_all_suites_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all",
                       "--max-n", "4", "--trials", "5")
    assert code == 0, out
    lines = out.strip().splitlines()
    assert lines[-1] == "OK"
    assert all(line.startswith("ok:") for line in lines[:-1])
    for suite in ("bn", "beta", "bruhat", "tournament", "vandermonde",
                  "condensation", "little-invariance", "lambda", "reading",
                  "signbalance"):
        assert f"[{suite}]" in out


def test_bound_violation_exits_2(capsys):
    code, _, err = run(capsys, "bn", "--n", "99", "--method", "sum")
    assert code == 2
    assert "bound" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["bn", "--method", "sum"])  # missing --n
    assert err.value.code == 2


def test_json_envelope(capsys):
    code, out, _ = run(capsys, "bn", "--n", "2", "--method", "all", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "bn"
    assert payload["ok"] is True
    assert payload["inputs"]["n"] == 2
    assert [r["value"] for r in payload["results"]] == ["1 - q"] * 4


def test_json_beta(capsys):
    code, out, _ = run(capsys, "beta", "--perm", "4321", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"] == [
        {"label": "l", "value": "6"}, {"label": "beta", "value": "10"}]


def test_deterministic_output(capsys):
    first = run(capsys, "verify", "--suite", "condensation", "--n", "3",
                "--trials", "3", "--seed", "7")
    second = run(capsys, "verify", "--suite", "condensation", "--n", "3",
                 "--trials", "3", "--seed", "7")
    assert first == second


def test_bench_reports_degree(capsys):
    code, out, _ = run(capsys, "bench", "--method", "bdet-condense", "--n", "6")
    assert code == 0
    assert "degree: 35" in out           # C(7,3) = 35
    assert "seconds:" in out


def test_bench_permanent_small(capsys):
    code, out, _ = run(capsys, "bench", "--method", "permanent", "--n", "6")
    assert code == 0
    assert "agreement: checked against definition at n=5" in out


def test_bench_def_capped(capsys):
    code, _, err = run(capsys, "bench", "--method", "bdet-def", "--n", "12")
    assert code == 2
    assert "capped" in err
