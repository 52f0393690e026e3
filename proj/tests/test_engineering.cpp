#include <doctest.h>

#include <cmath>

#include "zoo/engineering.hpp"

using namespace zoo;

TEST_CASE("penalized fitness") {
    CHECK(penalized_fitness(7.5, std::vector<double>{-1.0, -0.5}, 1e8) == 7.5);
    CHECK(penalized_fitness(5.0, std::vector<double>{2.0, -1.0}, 1e8) ==
          doctest::Approx(5.0 + 2e8));
    CHECK(penalized_fitness(0.0, std::vector<double>{}, 1e8) == 0.0);
    CHECK_THROWS_AS(penalized_fitness(1.0, std::vector<double>{1.0}, 0.0), std::invalid_argument);

    SUBCASE("raising any single violation raises the penalty") {
        std::vector<double> v{0.5, 1.5, 0.0};
        const double before = penalized_fitness(1.0, v, 10.0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto bumped = v;
            bumped[i] += 0.25;
            CHECK(penalized_fitness(1.0, bumped, 10.0) > before);
        }
    }
}

TEST_CASE("the six problems match their documented dimensions and constraint counts") {
    const struct {
        const char* name;
        std::size_t dim;
        std::size_t constraints;
    } expected[] = {
        {"CBD", 5, 1}, {"CBHD", 4, 6}, {"GTD", 4, 0},
        {"IBD", 4, 2}, {"RCB", 3, 2},  {"SRD", 7, 11},
    };
    for (const auto& row : expected) {
        Problem p = make_engineering(row.name);
        INFO(row.name);
        CHECK(p.dim == row.dim);
        CHECK(p.constraints.size() == row.constraints);
        CHECK(p.bounds.dim() == row.dim);
        CHECK(p.penalty_weight == 1e8);
    }
    CHECK_THROWS_AS(make_engineering("XYZ"), ConfigError);
    CHECK(engineering_catalog().size() == 6);
}

TEST_CASE("gear train objective and its grid oracle") {
    Problem gtd = make_engineering("GTD");
    const std::vector<double> x{49.0, 19.0, 16.0, 43.0};
    const double value = gtd.objective(x);
    CHECK(std::fabs(value - 2.700857e-12) <= 1e-15);

    SUBCASE("rounding happens inside the objective") {
        const std::vector<double> off{49.4, 18.6, 16.2, 42.8};
        CHECK(gtd.objective(off) == value);
    }
    SUBCASE("the exhaustive grid minimum equals the frozen constant") {
        const auto best = gear_train_grid_minimum();
        CHECK(std::fabs(best.value - 2.700857e-12) <= 1e-15);
        // One of the symmetric optima; the ratio must match exactly.
        const double ratio = static_cast<double>(best.teeth[1] * best.teeth[2]) /
                             static_cast<double>(best.teeth[0] * best.teeth[3]);
        CHECK(ratio == doctest::Approx(304.0 / 2107.0));
    }
}

TEST_CASE("violation reports") {
    SUBCASE("an unconstrained problem is always feasible with an empty report") {
        Problem gtd = make_engineering("GTD");
        auto report = violation_report(gtd, std::vector<double>{30.0, 30.0, 30.0, 30.0});
        CHECK(report.feasible);
        CHECK(report.per_constraint.empty());
    }
    SUBCASE("a point violating exactly one constraint has exactly one positive entry") {
        Problem ibd = make_engineering("IBD");
        // Full-size section: area over the limit, stress far below it.
        auto report = violation_report(ibd, std::vector<double>{50.0, 80.0, 5.0, 5.0});
        REQUIRE(report.per_constraint.size() == 2);
        CHECK_FALSE(report.feasible);
        CHECK(report.per_constraint[0] > 0.0);
        CHECK(report.per_constraint[1] == 0.0);
    }
    SUBCASE("the literature optimum of CBD is feasible") {
        Problem cbd = make_engineering("CBD");
        // Slightly relaxed from the reported optimum so the active constraint
        // sits strictly inside the feasible side.
        const std::vector<double> x{6.022, 5.314, 4.499, 3.505, 2.155};
        auto report = violation_report(cbd, x);
        CHECK(report.feasible);
        CHECK(cbd.objective(x) == doctest::Approx(1.34).epsilon(0.01));
    }
}

TEST_CASE("pathological inputs map to +inf fitness instead of aborting") {
    Problem cbhd = make_engineering("CBHD");
    // length < depth makes the objective denominator take sqrt of a negative.
    EvaluationBudget budget(2);
    auto ind = evaluate(cbhd, std::vector<double>{1.0, 50.0, 10.0, 2.0}, budget);
    CHECK(std::isinf(ind.fitness));
    CHECK(ind.fitness > 0.0);
}
