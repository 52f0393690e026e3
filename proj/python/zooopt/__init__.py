"""Zoological Search Optimization: optimizers, benchmark suites, statistics."""

from zooopt._core import (
    BudgetExhausted,
    Problem,
    ZooConfigError,
    average_ranks,
    base_function,
    base_function_tags,
    benchmark_catalog,
    de_run,
    engineering_catalog,
    gear_train_grid_minimum,
    holm_adjust,
    make_benchmark,
    make_catalog_problem,
    make_engineering,
    mann_whitney_u,
    pso_run,
    random_rotation,
    random_search_run,
    significance_mark,
    zso_run,
)

__all__ = [
    "BudgetExhausted",
    "Problem",
    "ZooConfigError",
    "average_ranks",
    "base_function",
    "base_function_tags",
    "benchmark_catalog",
    "de_run",
    "engineering_catalog",
    "gear_train_grid_minimum",
    "holm_adjust",
    "make_benchmark",
    "make_catalog_problem",
    "make_engineering",
    "mann_whitney_u",
    "pso_run",
    "random_rotation",
    "random_search_run",
    "significance_mark",
    "zso_run",
]
