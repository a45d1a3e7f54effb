import csv
import io
import json
import subprocess
import sys

import pytest

from cyclicup.cli import SCHEMA_VERSION, run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv)
    return code, json.loads(out) if out else None


def test_envelope(capsys):
    code, doc = as_json(capsys, "factor", "--ell", "2", "--p", "7")
    assert code == 0
    assert doc["schema_version"] == SCHEMA_VERSION and doc["status"] == "ok"
    assert doc["command"] == "factor" and "elapsed_s" in doc
    assert doc["config"]["p"] == 7 and doc["config"]["seed"] == 0
    assert isinstance(doc["anchor"], str) and doc["anchor"]


def test_factor_degrees(capsys):
    _, doc = as_json(capsys, "factor", "--ell", "2", "--p", "23")
    degs = sorted(len(f["coset"]) for f in doc["result"]["factors"])
    assert degs == [1, 11, 11]


def test_mu_both_agree(capsys):
    code, doc = as_json(capsys, "mu", "--p", "7")
    assert code == 0
    assert doc["result"]["mu"] == 7 and doc["result"]["agreement"] is True


def test_mu_bruteforce_budget(capsys):
    code, doc = as_json(capsys, "mu", "--p", "37", "--method", "bruteforce")
    assert code == 2 and doc["status"] == "budget_exhausted"


def test_primes(capsys):
    code, doc = as_json(capsys, "primes", "--predicate", "ord_half", "--max", "30")
    assert code == 0
    ps = [r["p"] for r in doc["result"]["primes"]]
    assert ps == [7, 17, 23]


def test_distance_qr(capsys):
    code, doc = as_json(capsys, "distance", "--p", "23", "--qr", "--method", "exact")
    assert code == 0
    assert doc["result"]["distance"]["d"] == 7 and doc["result"]["distance"]["exact"]


def test_distance_partial(capsys):
    code, doc = as_json(capsys, "distance", "--p", "71", "--qr", "--method", "exact")
    assert code == 2 and doc["status"] == "partial"


def test_good_code_rejects_bad_epsilon(capsys):
    code, _, err = invoke(capsys, "good-code", "--p", "23", "--epsilon", "0.3", "--delta", "0.2")
    assert code == 1 and "error" in err


def test_good_code_verify(capsys):
    code, doc = as_json(capsys, "good-code", "--p", "23", "--epsilon", "0.5", "--delta", "0.8", "--verify")
    assert code == 0
    res = doc["result"]
    assert res["mu"] == 19 and res["bound_check"]["holds"]
    assert res["bound_check"]["min_weight"] == res["distance"]["d"] == 8


def test_chebotarev_single_and_mismatch(capsys):
    code, doc = as_json(capsys, "chebotarev", "--p", "7", "--A", "0,1,3", "--B", "2,4,5")
    assert code == 0 and doc["result"]["nonzero"]
    code, _, _ = invoke(capsys, "chebotarev", "--p", "7", "--A", "0,1", "--B", "2")
    assert code == 1


def test_chebotarev_sweep(capsys):
    code, doc = as_json(capsys, "chebotarev", "--p", "5", "--exhaustive")
    assert code == 0 and doc["result"]["all_nonzero"] and doc["result"]["minors_checked"] == 251


def test_counterexamples(capsys):
    code, doc = as_json(capsys, "counterexample", "--kind", "trace", "--q", "2", "--p", "7")
    assert code == 0 and doc["result"]["mu"] == 7
    code, doc = as_json(capsys, "counterexample", "--kind", "mersenne", "--n", "5", "--k", "2")
    assert code == 0 and doc["result"]["mu"] == 23


def test_entropy_and_experiment(capsys):
    code, doc = as_json(capsys, "entropy", "--delta", "0.1", "--p", "101")
    assert code == 0
    code, doc = as_json(capsys, "experiment", "--kind", "weak-up", "--p", "23")
    assert code == 0 and doc["result"]["within_tenth_p"]


def test_qr_study(capsys):
    code, doc = as_json(capsys, "qr-study", "--p-max", "23")
    assert code == 0


@pytest.mark.parametrize("argv", [["mu", "--p", "8"], ["factor", "--ell", "4", "--p", "7"], ["bogus"],
                                  ["primes", "--predicate", "ord_half"]])
def test_invalid_input(capsys, argv):
    code, _, _ = invoke(capsys, *argv)
    assert code == 1


def test_csv(capsys):
    code, out, _ = invoke(capsys, "mu", "--p", "7", "--format", "csv")
    assert code == 0
    header = [l for l in out.splitlines() if l.startswith("# ")]
    assert header[0] == f'# schema_version="{SCHEMA_VERSION}"'
    body = "\n".join(l for l in out.splitlines() if not l.startswith("# "))
    rows = {r["key"]: r["value"] for r in csv.DictReader(io.StringIO(body))}
    assert rows["mu"] == "7"


@pytest.mark.parametrize("argv", [
    ["mu", "--p", "7"],
    ["chebotarev", "--p", "11", "--random", "500", "--seed", "9"],
    ["experiment", "--p", "23", "--eta", "0.5", "--samples", "300", "--seed", "4"],
])
def test_canonical_is_byte_identical(capsys, argv):
    _, a, _ = invoke(capsys, *argv, "--canonical")
    _, b, _ = invoke(capsys, *argv, "--canonical")
    assert a == b and "elapsed_s" not in a


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = invoke(capsys, "factor", "--ell", "2", "--p", "7", "-o", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["command"] == "factor"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclicup", "factor", "--ell", "3", "--p", "5", "--canonical"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["p"] == 5
