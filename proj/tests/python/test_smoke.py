import math

import pytest

import zooopt


def test_catalogs():
    assert len(zooopt.benchmark_catalog()) == 21
    assert zooopt.engineering_catalog() == ["CBD", "CBHD", "GTD", "IBD", "RCB", "SRD"]
    assert "rastrigin" in zooopt.base_function_tags()


def test_base_function_minima():
    assert zooopt.base_function("rastrigin", [0.0] * 5) == 0.0
    assert zooopt.base_function("rosenbrock", [1.0] * 5) == 0.0
    assert abs(zooopt.base_function("ackley", [0.0] * 5)) < 1e-12


def test_benchmark_problem():
    p = zooopt.make_catalog_problem("cec2022-f1", 10)
    assert p.dim == 10
    assert p.known_bias == 300.0
    assert p.lower == [-100.0] * 10
    # No sampled value below the bias, and evaluation is pure.
    v = p.objective([7.0] * 10)
    assert v >= 300.0 - 1e-9
    assert p.objective([7.0] * 10) == v


def test_rotation_orthogonality():
    m = zooopt.random_rotation(6, 11)
    for i in range(6):
        for j in range(6):
            dot = sum(m[k][i] * m[k][j] for k in range(6))
            assert abs(dot - (1.0 if i == j else 0.0)) < 1e-9


def test_zso_run_contracts():
    p = zooopt.make_catalog_problem("cec2022-f1", 10)
    r = zooopt.zso_run(p, max_fe=4000, schedule="gauss", population=30, seed=5)
    assert r["fe_used"] == 30 + 2 * 30 * r["generations"]
    assert r["fe_used"] <= 4000
    bests = [b for _, b in r["trace"]]
    assert all(b1 >= b2 for b1, b2 in zip(bests, bests[1:]))
    assert bests[-1] == r["best_fitness"]

    again = zooopt.zso_run(p, max_fe=4000, schedule="gauss", population=30, seed=5)
    assert again["best_position"] == r["best_position"]

    rnd = zooopt.random_search_run(p, max_fe=4000, seed=5)
    assert r["best_fitness"] < rnd["best_fitness"]


def test_baselines_run():
    p = zooopt.make_catalog_problem("cec2022-f1", 10)
    for runner in (zooopt.pso_run, zooopt.de_run):
        r = runner(p, max_fe=2000, population=20, seed=3)
        assert r["fe_used"] <= 2000
        assert len(r["best_position"]) == 10


def test_engineering_problems():
    gtd = zooopt.make_engineering("GTD")
    assert gtd.dim == 4
    assert gtd.num_constraints == 0
    value = gtd.objective([49.0, 19.0, 16.0, 43.0])
    assert abs(value - 2.700857e-12) <= 1e-15

    best, teeth = zooopt.gear_train_grid_minimum()
    assert abs(best - 2.700857e-12) <= 1e-15
    assert len(teeth) == 4

    srd = zooopt.make_engineering("SRD")
    assert srd.dim == 7
    assert srd.num_constraints == 11
    out = srd.evaluate([3.5, 0.7, 17.0, 7.3, 7.8, 3.35, 5.29])
    assert out["fitness"] == out["objective"] + srd.penalty_weight * out["violation_sum"]


def test_statistics():
    u, p = zooopt.mann_whitney_u([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    assert u == 0.0
    assert abs(p - 0.1) <= 0.05

    adjusted = zooopt.holm_adjust([0.01, 0.04, 0.03])
    assert adjusted == pytest.approx([0.03, 0.06, 0.06])

    assert zooopt.significance_mark([1.0, 2.0], [5.0, 6.0], 0.5) == "≈"
    assert zooopt.significance_mark([1.0, 2.0], [5.0, 6.0], 0.01) == "+"

    assert zooopt.average_ranks([[5.0], [5.0], [9.0]]) == [1.5, 1.5, 3.0]


def test_error_types():
    with pytest.raises(zooopt.ZooConfigError):
        zooopt.make_engineering("nope")
    gtd = zooopt.make_engineering("GTD")
    with pytest.raises(zooopt.ZooConfigError):
        zooopt.zso_run(gtd, max_fe=10, population=100, seed=1)


def test_sphere_quality():
    p = zooopt.make_benchmark("elliptic", 10, seed=4, bias=0.0)
    r = zooopt.zso_run(p, max_fe=10000, schedule="gauss", population=30, seed=7)
    rnd = zooopt.random_search_run(p, max_fe=10000, seed=7)
    assert math.isfinite(r["best_fitness"])
    assert r["best_fitness"] < rnd["best_fitness"] / 10.0
