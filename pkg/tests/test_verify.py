import json
import random

import pytest

from qchar import verify
from qchar.lweight import ONE


@pytest.mark.parametrize("name", sorted(verify.CHECKS))
def test_each_check_passes(name):
    (report,) = verify.run_checks([name], max_rank=4, samples=30)
    assert report.passed, report.counterexample
    assert report.cases > 0 and report.counterexample is None
    json.loads(report.to_json())


def test_suites_cover_every_check():
    assert set(verify.SUITES["all"]) == set(verify.CHECKS)
    for names in verify.SUITES.values():
        assert set(names) <= set(verify.CHECKS)
    with pytest.raises(KeyError):
        verify.run_suite("nope")


def test_coverage_manifest_points_at_real_checks():
    assert verify.COVERAGE
    assert set(verify.COVERAGE.values()) <= set(verify.CHECKS)


def test_reports_are_reproducible():
    a = [r.to_dict(timing=False) for r in verify.run_suite("braid", max_rank=4, samples=20, seed=3)]
    b = [r.to_dict(timing=False) for r in verify.run_suite("braid", max_rank=4, samples=20, seed=3)]
    assert a == b
    assert "elapsed" not in a[0] and "elapsed" in verify.verify_counts(3).to_dict()


def test_random_lweight_is_seeded():
    xs = [verify.random_lweight(random.Random(7), 4) for _ in range(2)]
    assert xs[0] == xs[1]
    rng = random.Random(1)
    for _ in range(200):
        x = verify.random_lweight(rng, 4)
        assert all(1 <= j <= 4 and -5 <= k <= 5 for j, k, _ in x.triples())


def test_root_systems_iteration():
    names = [rs.name for rs in verify.root_systems(3)]
    # rank first, then type
    assert names == ["A1", "A2", "B2", "C2", "A3", "B3", "C3", "D3"]
    assert [rs.name for rs in verify.root_systems(5, ("D",), {"D": 4})] == ["D4", "D5"]


def test_failure_yields_first_counterexample(monkeypatch):
    real = verify.ladder

    def broken(ctx, p, case, **kw):
        step = real(ctx, p, case, **kw)
        return type(step)(step.lhs, ONE, step.node, step.exponent, step.coordinate)

    monkeypatch.setattr(verify, "ladder", broken)
    report = verify.verify_ladders(4)
    assert not report.passed and report.cases == 1
    # rank-first order: B2 is the first system with a ladder step
    assert report.counterexample["type"] == "B2"
    json.loads(report.to_json())
