"""Acceptance criteria 1-12, each under its own wall-clock limit.

Run with ``pytest tests/test_acceptance.py``; one PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import json
import time
from contextlib import contextmanager

import pytest

from cyclicup.cli import run
from cyclicup.codes import (
    build_good_code_candidate,
    mds_check_r1,
    min_distance_exact,
    quadratic_residue_code,
    verify_good_bound,
)
from cyclicup.gf import build_extension, prime_field
from cyclicup.heuristics import entropy, sphere_size
from cyclicup.primes import ord_mod
from cyclicup.ring import factor_xp_minus_1, ideal_dim
from cyclicup.uncertainty import (
    chebotarev_sweep,
    donoho_stark_check,
    mersenne_counterexample,
    mu_bruteforce,
    mu_of,
    mu_via_ideals,
    trace_counterexample,
    up_equivalence_check,
    verify_char_p,
)


@contextmanager
def within(limit):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"


def cli_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.criterion(1, 1, "factorization of X^7 - 1 over F_2")
def test_criterion_01_factor(capsys):
    with within(1):
        code, out = cli_json(capsys, "factor", "--ell", "2", "--p", "7", "--canonical")
    assert code == 0
    polys = sorted(tuple(f["poly"]) for f in json.loads(out)["result"]["factors"])
    # constant term first; X - 1 = X + 1 over F_2
    assert polys == sorted([(1, 1), (1, 0, 1, 1), (1, 1, 0, 1)])


@pytest.mark.criterion(2, 120, "mu brute force equals mu via ideals")
def test_criterion_02_mu_oracles():
    cases = [(2, 1, 3), (2, 1, 5), (2, 1, 7), (2, 1, 11), (3, 1, 5), (3, 1, 7), (2, 3, 7)]
    with within(120):
        got = {c: (mu_bruteforce(*c), mu_via_ideals(*c)) for c in cases}
    for (ell, r, p), (a, b) in got.items():
        assert a.mu == b.mu and not a.upper_bound_only and not b.upper_bound_only
        if r == 1 and ord_mod(ell, p) == p - 1:
            assert a.mu == p + 1
    assert got[(2, 1, 7)][0].mu == 7


@pytest.mark.criterion(3, 60, "characteristic p gives mu = p + 1")
def test_criterion_03_char_p():
    with within(60):
        reps = [verify_char_p(p) for p in (2, 3, 5, 7)]
    for p, rep in zip((2, 3, 5, 7), reps):
        assert rep["mu"] == p + 1 and rep["holds"] and rep["checked"] == p**p - 1


@pytest.mark.criterion(4, 10, "trace counterexamples")
def test_criterion_04_trace():
    with within(10):
        small = trace_counterexample(2, 7)
        big = trace_counterexample(2, 17)
    assert small.mu == 7 <= 7
    assert big.mu <= 17 and big.details["certified_extension_bound"] == 17
    for rep, p in ((small, 7), (big, 17)):
        fact = factor_xp_minus_1(2, p)
        f = rep.witness
        assert f.weight + ideal_dim(f, fact) == rep.mu == mu_of(f, fact)
    # the base-field witness also lies in F_{2^8}[X]/(X^17 - 1) with the same mu
    E = build_extension(2, 8)
    assert mu_of(big.witness.embed(E), factor_xp_minus_1(E, 17)) == big.mu


@pytest.mark.criterion(5, 60, "Mersenne construction")
def test_criterion_05_mersenne():
    with within(60):
        reps = {(n, k): mersenne_counterexample(n, k) for n, k in ((3, 1), (5, 2), (7, 3), (13, 5))}
    for (n, k), rep in reps.items():
        d = rep.details
        p = 2**n - 1
        assert d["degree"] == 2**n - 2 ** (n - k) < p
        assert d["weight"] <= (n + 1) ** k
        assert d["dim"] == 2 ** (n - k) - 1
        assert rep.mu == d["weight"] + d["dim"]


@pytest.mark.criterion(6, 300, "Chebotarev minor sweep")
def test_criterion_06_chebotarev():
    with within(300):
        small = {p: chebotarev_sweep(p) for p in (2, 3, 5, 7)}
        big = chebotarev_sweep(11, exhaustive=False, random_minors=100_000, sizes=(1, 2, 10, 11), seed=0)
    for p, rep in small.items():
        assert rep.all_nonzero and rep.exhaustive
    # 3432 = C(14, 7) counts the empty minor; the nonempty ones are 3431
    assert small[7].minors_checked == 3431
    assert big.all_nonzero and big.first_failure is None
    assert big.minors_checked >= 100_000 + 121 + 3025 + 121 + 1


@pytest.mark.criterion(7, 30, "vanishing minor iff uncertainty failure")
def test_criterion_07_equivalence():
    with within(30):
        f8 = up_equivalence_check(7, build_extension(2, 3))
        f4 = up_equivalence_check(3, build_extension(2, 2))
    assert f8["vanishing"] > 0 and f8["constructed"]["violates"] and f8["consistent"]
    assert f4["vanishing"] == 0 and f4["mu_bruteforce"] == 4 and f4["consistent"]


@pytest.mark.criterion(8, 60, "Donoho-Stark support product")
def test_criterion_08_donoho_stark():
    with within(60):
        full = donoho_stark_check(build_extension(2, 3), 7)
        rand = donoho_stark_check(prime_field(2), 23, samples=10_000, seed=0)
    assert full["checked"] == 8**7 - 1 and full["violations"] == 0
    assert rand["checked"] >= 10_000 and rand["violations"] == 0


@pytest.mark.criterion(9, 120, "QR distances and MDS at (11, 5)")
def test_criterion_09_codes():
    with within(120):
        qr = {p: min_distance_exact(quadratic_residue_code(p)) for p in (7, 17, 23)}
        mds = mds_check_r1(11, 5)
    assert {p: (quadratic_residue_code(p).k, r.d) for p, r in qr.items()} == {7: (4, 3), 17: (9, 5), 23: (12, 7)}
    assert all(r.exact for r in qr.values())
    assert mds["all_mds"] and len(mds["rows"]) == 2**5 - 1


@pytest.mark.criterion(10, 120, "good-code pipeline at (2, 23, 0.5)")
def test_criterion_10_good_code():
    with within(120):
        rep = build_good_code_candidate(2, 23, 0.5)
        mu = mu_via_ideals(2, 1, 23)
        check = verify_good_bound(rep.code, mu.mu, 0.5)
    assert not mu.upper_bound_only
    assert check["holds"] and check["checked"] == 2**rep.code.k - 1
    assert mu.mu > check["delta"] * 23


@pytest.mark.criterion(11, 10, "entropy and sphere sandwich")
def test_criterion_11_entropy():
    with within(10):
        hp = entropy(0.1)[1]
        reps = [sphere_size(p, d) for p in (7, 23, 101) for d in (0.1, 0.2, 0.3, 0.4, 0.5)]
        s7 = sphere_size(7, 3 / 7)
    assert 0.46 <= hp <= 0.48
    for r in reps:
        if r.sandwich_applies:
            assert r.lower <= r.exact_count <= r.upper
    assert s7.exact_count == 63


SEEDED = [
    ["experiment", "--kind", "random-ideal", "--p", "23", "--eta", "0.5", "--samples", "2000", "--seed", "7"],
    ["experiment", "--kind", "weak-up", "--p", "23"],
    ["chebotarev", "--p", "11", "--random", "2000", "--seed", "3"],
    ["distance", "--p", "47", "--qr", "--method", "upper", "--trials", "5000", "--seed", "5"],
    ["mu", "--ell", "2", "--p", "11", "--method", "ideals"],
    ["good-code", "--ell", "2", "--p", "23", "--epsilon", "0.5", "--seed", "1"],
    ["qr-study", "--p-max", "47", "--seed", "2"],
]


@pytest.mark.criterion(12, 120, "seeded runs are byte-identical")
def test_criterion_12_determinism(capsys):
    with within(120):
        for argv in SEEDED:
            for fmt in ("json", "csv"):
                a = cli_json(capsys, *argv, "--canonical", "--format", fmt)
                b = cli_json(capsys, *argv, "--canonical", "--format", fmt)
                assert a == b and a[0] == 0, argv


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
