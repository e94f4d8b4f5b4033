import numpy as np
import pytest

from divbound.distributions import STRICT
from divbound.kernel import ArgumentError
from divbound.verify import (
    SUITE_NAMES,
    random_problem,
    random_strict_pair,
    run_verify,
)


def test_all_suites_pass_small_run():
    results = run_verify(trials=60, seed=7)
    assert [r.suite for r in results] == list(SUITE_NAMES)
    for r in results:
        assert r.ok, (r.suite, r.first_failure)
        assert r.checks > 0


def test_deterministic_given_seed():
    a = run_verify(trials=40, seed=11)
    b = run_verify(trials=40, seed=11)
    assert a == b


def test_different_seeds_differ():
    a = run_verify(trials=40, seed=11)
    b = run_verify(trials=40, seed=12)
    assert any(x.worst != y.worst for x, y in zip(a, b))


def test_corruption_hook_detected():
    results = run_verify(trials=5, seed=3, corrupt=True)
    by_name = {r.suite: r for r in results}
    for suite in ("eq7_chain", "eq39_chain"):
        assert by_name[suite].failures >= 1
        assert by_name[suite].first_failure is not None


def test_bad_arguments():
    with pytest.raises(ArgumentError):
        run_verify(trials=0, seed=1)
    with pytest.raises(ArgumentError):
        run_verify(trials=10, seed=1, n_max=1)


def test_random_strict_pair_is_valid():
    rng = np.random.default_rng(0)
    P, Q = random_strict_pair(rng, 8)
    assert P.n == Q.n == 8
    assert P.mode == STRICT
    assert float(P.probs.min()) > 0.0


def test_random_problem_is_valid():
    rng = np.random.default_rng(0)
    prob = random_problem(rng, 5)
    assert prob.k == 5
    assert 0.05 <= prob.p1 <= 0.95
    assert prob.p1 + prob.p2 == pytest.approx(1.0, abs=1e-15)
