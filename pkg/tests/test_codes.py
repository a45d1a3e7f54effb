import itertools

import pytest

from cyclicup.codes import (
    CyclicCode,
    build_good_code_candidate,
    distance,
    mds_check_r1,
    min_distance_exact,
    min_distance_upper,
    quadratic_residue_code,
    verify_good_bound,
)
from cyclicup.ideals import BudgetExceeded, enumerate_ideals
from cyclicup.ring import RingElement, factor_xp_minus_1


def brute_distance(code):
    """Min weight of m(X) g(X) mod X^n - 1 over all nonzero messages, in plain Python."""
    F, n, g = code.field, code.n, code.generator
    best = None
    for msg in itertools.product(range(F.order), repeat=code.k):
        if not any(msg):
            continue
        word = [0] * n
        for i, m in enumerate(msg):
            if m:
                for j, c in enumerate(g):
                    word[(i + j) % n] = F.add(word[(i + j) % n], F.mul(m, c))
        w = sum(1 for x in word if x)
        best = w if best is None else min(best, w)
    return best


def ideals_of(ell, p):
    return [I for I in enumerate_ideals(factor_xp_minus_1(ell, p)) if I.dim]


@pytest.mark.parametrize("ell,p", [(2, 7), (2, 17), (3, 5), (3, 7), (2, 5), (5, 3), (11, 5)])
def test_exact_matches_brute_force(ell, p):
    for I in ideals_of(ell, p):
        code = CyclicCode.from_ideal(I)
        if ell**code.k > 1 << 16:
            continue
        res = min_distance_exact(code)
        assert res.exact and res.verify(code)
        assert res.d == brute_distance(code)
        assert res.d <= code.n - code.k + 1


def test_2_7_examples():
    fact = factor_xp_minus_1(2, 7)
    code = CyclicCode.from_generator([1, 1, 0, 1], fact)
    assert code.k == 4
    assert min_distance_exact(code).d == 3
    ones = CyclicCode.from_generator([1, 1], fact)
    assert (ones.k, min_distance_exact(ones).d) == (6, 2)
    rep = CyclicCode.from_generator([1, 1, 1, 1, 1, 1, 1], fact)
    res = min_distance_exact(rep)
    assert res.d == 7 and list(res.witness.coeffs) == [1] * 7


def test_zero_ideal_rejected():
    I = next(enumerate_ideals(factor_xp_minus_1(2, 7)))
    with pytest.raises(ValueError):
        CyclicCode.from_ideal(I)


def test_upper_bound_never_below_exact():
    for ell, p in ((2, 7), (2, 17), (3, 7), (2, 23)):
        for I in ideals_of(ell, p):
            code = CyclicCode.from_ideal(I)
            if ell**code.k > 1 << 16:
                continue
            exact = min_distance_exact(code)
            up = min_distance_upper(code, 50, seed=3)
            assert not up.exact and up.verify(code)
            assert up.d >= exact.d
            full = min_distance_upper(code, ell**code.k, seed=0)
            assert full.d == exact.d and not full.exact


def test_upper_2_7_dim4():
    code = CyclicCode.from_generator([1, 1, 0, 1], factor_xp_minus_1(2, 7))
    assert min_distance_upper(code, 100, seed=1).d <= 3


def test_upper_reproducible_large():
    fact = factor_xp_minus_1(2, 127)
    I = next(I for I in enumerate_ideals(fact) if I.dim == 14)
    code = CyclicCode.from_ideal(I)
    a = min_distance_upper(code, 10_000, seed=9)
    b = min_distance_upper(code, 10_000, seed=9)
    assert a == b and not a.exact and a.verify(code)


def test_budget_guard():
    code = quadratic_residue_code(71)
    with pytest.raises(BudgetExceeded):
        min_distance_exact(code, budget=1000)
    res = distance(code, budget=1000, trials=2000)
    assert not res.exact and res.verify(code)


def test_time_budget_partial():
    code = quadratic_residue_code(47)
    with pytest.raises(BudgetExceeded) as info:
        min_distance_exact(code, time_budget=0.0)
    assert info.value.partial is not None and not info.value.partial.exact


def test_parallel_matches_serial():
    code = quadratic_residue_code(23)
    assert min_distance_exact(code, jobs=3) == min_distance_exact(code, jobs=1)


@pytest.mark.parametrize("p,k,d", [(7, 4, 3), (17, 9, 5), (23, 12, 7)])
def test_qr_codes(p, k, d):
    code = quadratic_residue_code(p)
    assert len(code.generator) - 1 == (p - 1) // 2
    assert code.k == k
    res = min_distance_exact(code)
    assert res.d == d and res.verify(code)


def test_qr_rejects_nonresidue():
    with pytest.raises(ValueError):
        quadratic_residue_code(11)


def test_mds_11_5():
    rep = mds_check_r1(11, 5)
    assert rep["all_mds"]
    assert len(rep["rows"]) == 31
    assert {r["d"] for r in rep["rows"] if r["k"] == 3} == {3}
    assert {r["d"] for r in rep["rows"] if r["k"] == 5} == {1}
    assert {r["d"] for r in rep["rows"] if r["k"] == 1} == {5}
    with pytest.raises(ValueError):
        mds_check_r1(2, 7)


def test_good_code_examples():
    rep = build_good_code_candidate(2, 7, 0.6)
    assert (rep.k, rep.distance.d) == (4, 3)
    with pytest.raises(ValueError):
        build_good_code_candidate(2, 11, 0.5)
    rep = build_good_code_candidate(2, 23, 0.5)
    assert rep.k == 11 and rep.distance.exact and rep.distance.d == 8
    with pytest.raises(ValueError):
        build_good_code_candidate(2, 23, 0.5, delta=0.4)


def test_good_bound_2_23():
    rep = build_good_code_candidate(2, 23, 0.5)
    check = verify_good_bound(rep.code, 19, 0.5)
    assert check["holds"] and check["checked"] == 2**11 - 1


def test_encode_roundtrip():
    code = quadratic_residue_code(17)
    msg = [1, 0, 1, 1, 0, 0, 1, 0, 1]
    w = code.encode(msg)
    assert code.contains(w)
    assert code.message_of(w) == msg
    assert not code.contains(RingElement.monomial(code.field, 17, 0))


def test_json_fields():
    code = quadratic_residue_code(7)
    out = min_distance_exact(code).to_json(code)
    assert {"n", "k", "d", "exact", "witness", "rate", "relative_distance", "elapsed_s", "enumerated"} <= set(out)
    assert isinstance(out["witness"], str)
