import pytest

from trivial_limits.survey import DEFAULT_CURVES, INVARIANTS, default_curve, run_survey, trial_rng


def test_default_curves_are_valid():
    for g in DEFAULT_CURVES:
        c = default_curve(g)
        assert c.g == g and c.p == 101


def test_trial_rng_is_keyed():
    a = trial_rng(42, 0, 1, 2).integers(0, 10**9)
    assert a == trial_rng(42, 0, 1, 2).integers(0, 10**9)
    assert a != trial_rng(42, 0, 1, 3).integers(0, 10**9)


@pytest.mark.parametrize("name", list(INVARIANTS))
def test_each_invariant_small_sweep(name):
    report = run_survey(seed=3, trials=4, invariants=[name])
    assert report["total_violations"] == 0
    assert [r["genus"] for r in report["rows"]] == [2, 3, 4]


def test_workers_do_not_change_report():
    a = run_survey(seed=5, trials=2, genera=(2,), workers=1)
    b = run_survey(seed=5, trials=2, genera=(2,), workers=2)
    assert a == b


def test_unknown_invariant():
    with pytest.raises(ValueError):
        run_survey(invariants=["nope"])
