import math

import pytest

from cyclicup.heuristics import (
    entropy,
    expected_intersection,
    qr_distance_study,
    random_ideal_experiment,
    sphere_size,
    weak_up_expectation,
)


def test_entropy_values():
    h, hp = entropy(0.5)
    assert h == pytest.approx(math.log(2)) and hp == pytest.approx(1.0)
    assert entropy(0.1)[1] == pytest.approx(0.468996, abs=1e-6)
    for d in (0.01, 0.2, 0.37):
        assert entropy(d)[0] == pytest.approx(entropy(1 - d)[0])
    with pytest.raises(ValueError):
        entropy(0)
    with pytest.raises(ValueError):
        entropy(1)


@pytest.mark.parametrize("p,delta,count", [(7, 3 / 7, 63), (7, 1 / 7, 7), (11, 2 / 11, 66), (5, 0.1, 0)])
def test_sphere_counts(p, delta, count):
    rep = sphere_size(p, delta)
    assert rep.exact_count == count
    assert rep.exact_count == sum(math.comb(p, j) for j in range(1, rep.radius + 1))


@pytest.mark.parametrize("p", [7, 23, 101, 409])
@pytest.mark.parametrize("delta", [0.05, 0.1, 0.3, 0.45])
def test_sandwich(p, delta):
    rep = sphere_size(p, delta)
    if rep.sandwich_applies:
        assert rep.lower <= rep.exact_count <= rep.upper


def test_rate_gap_shrinks():
    gaps = [abs(sphere_size(p, 0.1).rate_gap) for p in (101, 1009, 10007)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3 + math.log2(10007) / 10007


def test_sphere_json_big_ints():
    out = sphere_size(409, 0.3).to_json()
    assert isinstance(out["exact_count"], str) and int(out["exact_count"]) > 2**64


def test_expected_intersection():
    assert expected_intersection(100, 0.5, 0.1) == pytest.approx(100 * (entropy(0.1)[1] - 0.5))
    with pytest.raises(ValueError):
        expected_intersection(100, 1.0, 0.1)


def test_experiment_reproducible():
    a = random_ideal_experiment(23, 0.5, 0.2, 500, seed=3)
    b = random_ideal_experiment(23, 0.5, 0.2, 500, seed=3)
    assert a.to_json() == b.to_json()
    assert a.dim == 12 and a.min_weight == 7
    assert a.verdict == (a.min_weight > 0.2 * 23)


def test_experiment_p7():
    rep = random_ideal_experiment(7, 0.57, 0.3, 0, seed=0)
    assert rep.dim == 4 and rep.min_weight == 3 and rep.low_confidence


def test_experiment_rejects_composite():
    with pytest.raises(ValueError):
        random_ideal_experiment(15, 0.5, 0.1, 10)


@pytest.mark.parametrize("p", [7, 17, 23])
def test_weak_up_raw_counts(p):
    out = weak_up_expectation(p)
    assert out["ideal_dim"] == (p + 1) // 2
    assert int(out["multiples"]) == 2 ** ((p + 1) // 2)
    assert int(out["sphere"]) == sphere_size(p, 0.1).exact_count
    assert out["predicted_exponent"] == pytest.approx(p * (entropy(0.1)[1] - 0.5))


def test_weak_up_exponents():
    assert weak_up_expectation(7)["exponent"] is None
    out = weak_up_expectation(23)
    assert out["exponent"] == pytest.approx(12 + math.log2(23 + math.comb(23, 2)) - 23)
    assert out["within_tenth_p"]
    # the exact counts at p = 17 sit more than 0.1 p away from the entropy estimate
    assert not weak_up_expectation(17)["within_tenth_p"]


def test_weak_up_rejects_wrong_order():
    with pytest.raises(ValueError):
        weak_up_expectation(11)


def test_qr_study():
    rows = qr_distance_study(47)
    assert [(r["p"], r["k"], r["d"]) for r in rows] == [(7, 4, 3), (17, 9, 5), (23, 12, 7), (41, 21, 9), (47, 24, 11)]
    assert all(r["exact"] for r in rows)
