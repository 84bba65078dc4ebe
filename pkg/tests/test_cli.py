import json

import pytest

from pglspectra import cli
from pglspectra import numtheory as nt


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out), out


# --- basic commands -------------------------------------------------------------

def test_ppd_text(capsys):
    code, out, _ = run(capsys, "ppd", "7", "5")
    assert code == 0
    assert "2801" in out


def test_ppd_exception_text(capsys):
    code, out, _ = run(capsys, "ppd", "2", "6")
    assert code == 0
    assert "(none)" in out
    assert "a2n6" in out


def test_ppd_upto(capsys):
    code, out, _ = run(capsys, "ppd", "7", "5", "--upto")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 5
    assert lines[-1].split()[0] == "5"
    assert "2801" in lines[-1]


def test_ppd_above(capsys):
    code, out, _ = run(capsys, "ppd-above", "7", "5", "13")
    assert code == 0
    assert "true" in out
    assert "2801" in out
    code, out, _ = run(capsys, "ppd-above", "2", "6", "2")
    assert code == 0
    assert "false" in out


def test_factor_text(capsys):
    code, out, _ = run(capsys, "factor", "28398240")
    assert code == 0
    assert "2^5*3^2*5*13*37*41" in out


def test_mu_families(capsys):
    code, out, _ = run(capsys, "mu", "pgl2", "7", "1")
    assert code == 0 and "6 7 8" in out
    code, out, _ = run(capsys, "mu", "psl2", "3", "2")
    assert code == 0 and "3 4 5" in out
    code, out, _ = run(capsys, "mu", "sym", "3")
    assert code == 0 and "2 3" in out
    code, out, _ = run(capsys, "mu", "alt", "5")
    assert code == 0 and "2 3 5" in out
    code, out, _ = run(capsys, "mu", "metacyclic", "5", "8", "2")
    assert code == 0 and "8 10" in out
    code, out, _ = run(capsys, "mu", "f4psi", "1")
    assert code == 0 and "9 13 15 17 21" in out


def test_omega_includes_closure(capsys):
    code, out, _ = run(capsys, "omega", "pgl2", "3", "2")
    assert code == 0
    assert "omega: 1 2 3 4 5 8 10" in out


def test_graph_text_and_dot(capsys):
    code, out, _ = run(capsys, "graph", "pgl2", "7", "4")
    assert code == 0
    assert "components (t=2)" in out
    assert "2 3 5 1201; 7" in out
    code, dot, _ = run(capsys, "graph", "pgl2", "7", "1", "--dot")
    assert code == 0
    assert dot.startswith("graph primegraph {")
    assert '"2" -- "3";' in dot


def test_oracle_agreement(capsys):
    code, out, _ = run(capsys, "oracle", "pgl2", "3", "2")
    assert code == 0
    assert "matches closed form" in out and "yes" in out
    code, out, _ = run(capsys, "oracle", "gl2", "3", "1")
    assert code == 0
    assert "matches" not in out


def test_catalan(capsys):
    code, out, _ = run(capsys, "catalan", "10")
    assert code == 0
    assert "3^2 = 2^3 + 1" in out
    assert "[exceptional]" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 0
    assert "55/55 checks passed" in out
    code, out, _ = run(capsys, "verify", "lemma1", "--nmax", "8")
    assert code == 0
    assert "documented errata reported" in out
    code, out, _ = run(capsys, "verify", "pgl2", "7", "2")
    assert code == 0


def test_verify_failure_exits_1(capsys, monkeypatch):
    from pglspectra import verify as vf
    monkeypatch.setitem(vf.PPD_TABLE, (13, 3), frozenset({23}))
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 1
    assert "FAIL" in out


# --- usage and domain errors --------------------------------------------------------

def test_usage_errors_exit_2(capsys):
    assert run(capsys, "mu", "pgl2", "7")[0] == 2          # wrong arity
    assert run(capsys, "mu", "metacyclic", "5", "8")[0] == 2
    assert run(capsys, "verify", "pgl2", "7")[0] == 2
    assert run(capsys, "catalan", "4")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_domain_errors_exit_2(capsys):
    code, _, err = run(capsys, "mu", "pgl2", "4", "1")     # 4 not prime
    assert code == 2
    assert "prime" in err
    assert run(capsys, "mu", "metacyclic", "5", "3", "2")[0] == 2  # bad action


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_budget_exhaustion_exit_3(capsys):
    hard = 999999999999989 * 999998999999977
    code, out, err = run(capsys, "--budget", "100", "factor", str(hard))
    assert code == 3
    assert "budget exhausted" in err
    assert str(hard) in out  # partial result still printed
    nt.configure(budget=nt.DEFAULT_RHO_BUDGET)


def test_cap_exhaustion_exit_3(capsys):
    code, _, err = run(capsys, "--cap", "10", "oracle", "pgl2", "5", "2")
    assert code == 3
    assert "cap" in err.lower()


# --- machine-readable mode ------------------------------------------------------------

def test_json_schema_and_round_trip(capsys):
    code, doc, raw = run_json(capsys, "ppd", "7", "5")
    assert code == 0
    assert doc["schema_version"] == "1"
    assert doc["command"] == "ppd"
    assert doc["inputs"] == {"a": 7, "n": 5, "upto": False}
    assert doc["result"]["primitive_primes"] == [2801]
    assert doc["diagnostics"] == []
    # byte-identical re-render
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == raw


def test_json_round_trip_verify(capsys):
    code, doc, raw = run_json(capsys, "verify", "cases")
    assert code == 0
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == raw
    assert doc["result"]["ok"] is True
    assert doc["result"]["errata"] == 1


def test_json_and_text_verdicts_agree(capsys):
    json_code, doc, _ = run_json(capsys, "verify", "lemma1", "--nmax", "8")
    text_code, out, _ = run(capsys, "verify", "lemma1", "--nmax", "8")
    assert json_code == text_code == 0
    assert doc["result"]["ok"] is True
    assert "[ok]" in out
    json_code, doc, _ = run_json(capsys, "oracle", "psl2", "3", "2")
    text_code, out, _ = run(capsys, "oracle", "psl2", "3", "2")
    assert json_code == text_code == 0
    assert doc["result"]["matches_formula"] is True
    assert "yes" in out


def test_json_deterministic_across_runs(capsys):
    _, _, raw1 = run_json(capsys, "--seed", "1", "factor", "2402")
    _, _, raw2 = run_json(capsys, "--seed", "1", "factor", "2402")
    assert raw1 == raw2


def test_json_domain_error_document(capsys):
    code, out, err = run(capsys, "--json", "mu", "pgl2", "4", "1")
    assert code == 2
    doc = json.loads(out)
    assert doc["result"] is None
    assert any("domain error" in d for d in doc["diagnostics"])


def test_json_graph_payload(capsys):
    code, doc, _ = run_json(capsys, "graph", "pgl2", "7", "4")
    assert code == 0
    r = doc["result"]
    assert r["vertices"] == [2, 3, 5, 7, 1201]
    assert r["t"] == 2
    assert r["components"] == [[2, 3, 5, 1201], [7]]
    assert ([2, 3] in r["edges"]) and ([2, 1201] in r["edges"])
