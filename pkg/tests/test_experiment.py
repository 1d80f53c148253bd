import pytest

from rainbowsigma.experiment import ConfigError, derive_seed, instances, run_experiment
from rainbowsigma.report import format_records, strip_timing


def test_empty_config():
    assert run_experiment({"generators": []}) == ([], True)


def test_product_expansion():
    inst = instances({"generators": [{"family": "random", "n": [20, 30], "sigma2": [4, 6],
                                      "count": 2}]})
    assert len(inst) == 8
    assert inst[0] == {"family": "random", "n": 20, "sigma2": 4}


def test_example2_sweep():
    recs, ok = run_experiment({"seed": 3, "tasks": ["rc"],
                               "generators": [{"family": "example2", "delta": 3,
                                               "m": [0, 1, 2, 3]}]})
    assert ok and len(recs) == 4
    assert all(dict(r)["bound_minus_diameter"] == "8/1" for r in recs)
    assert all(dict(r)["verified"] == "true" for r in recs)


def test_dense_rvc_within_statement_bound():
    recs, ok = run_experiment({"seed": 5, "tasks": ["rvc"],
                               "generators": [{"family": "random", "n": 70, "sigma2": 30,
                                               "count": 3}]})
    assert ok
    for r in map(dict, recs):
        assert r["branch"] == "stage3"
        assert r["within_bound"] == "true"


def test_errors_recorded_not_raised():
    recs, ok = run_experiment({"tasks": ["rc", "domsets"],
                               "generators": [{"family": "random", "n": 5, "sigma2": 10},
                                              {"family": "cycle", "n": 9}]})
    assert not ok
    assert dict(recs[0])["task"] == "generate" and "error" in dict(recs[0])
    assert any(dict(r).get("kind") == "domset-stage1" for r in recs[1:])


def test_bad_task_and_family():
    with pytest.raises(ConfigError):
        run_experiment({"tasks": ["paint"]})
    recs, ok = run_experiment({"generators": [{"family": "nope"}]})
    assert not ok


def test_parallel_matches_serial():
    cfg = {"seed": 11, "tasks": ["rc", "rvc", "sparsify"],
           "generators": [{"family": "random", "n": [25, 40], "sigma2": [6, 12], "count": 2}]}
    serial, _ = run_experiment(cfg, jobs=1)
    parallel, _ = run_experiment(cfg, jobs=3)
    assert strip_timing(format_records(serial)) == strip_timing(format_records(parallel))


def test_seed_derivation():
    assert derive_seed(1, 0) == derive_seed(1, 0)
    assert derive_seed(1, 0) != derive_seed(1, 1) != derive_seed(2, 1)
