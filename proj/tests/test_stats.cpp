#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zoo/stats.hpp"

using namespace zoo;

namespace {

// Independent enumeration oracle: exact two-sided p over all C(n, n1)
// assignments of the combined values to the first group.
double exact_two_sided_p(const SampleSet& a, const SampleSet& b) {
    std::vector<double> combined = a;
    combined.insert(combined.end(), b.begin(), b.end());
    const std::size_t n = combined.size(), n1 = a.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return combined[x] < combined[y]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && combined[order[j + 1]] == combined[order[i]]) ++j;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = 0.5 * double(i + j) + 1.0;
        i = j + 1;
    }

    double u_obs = 0.0;
    for (std::size_t k = 0; k < n1; ++k) u_obs += ranks[k];
    u_obs -= 0.5 * double(n1) * double(n1 + 1);

    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n1), true);
    std::sort(pick.begin(), pick.end());  // lowest permutation for next_permutation sweep
    std::uint64_t total = 0, le = 0, ge = 0;
    do {
        double rank_sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (pick[k]) rank_sum += ranks[k];
        }
        const double u = rank_sum - 0.5 * double(n1) * double(n1 + 1);
        ++total;
        if (u <= u_obs + 1e-9) ++le;
        if (u >= u_obs - 1e-9) ++ge;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return std::min(1.0, 2.0 * double(std::min(le, ge)) / double(total));
}

}  // namespace

TEST_CASE("mann-whitney u on the pinned examples") {
    SUBCASE("identical multisets are indistinguishable") {
        SampleSet a{3.0, 1.0, 2.0, 2.5};
        auto r = mann_whitney_u(a, a);
        CHECK(r.p >= 0.99);
    }
    SUBCASE("complete separation at n = 3 + 3") {
        SampleSet a{1.0, 2.0, 3.0}, b{4.0, 5.0, 6.0};
        auto r = mann_whitney_u(a, b);
        CHECK(r.u == 0.0);
        // Exact enumeration gives 0.1; the approximation path must be within 0.05.
        CHECK(std::fabs(r.p - 0.1) <= 0.05);
        CHECK(exact_two_sided_p(a, b) == doctest::Approx(0.1));
    }
    SUBCASE("full ties use midranks") {
        SampleSet a{1.0, 2.0, 3.0, 4.0}, b{1.0, 2.0, 3.0, 4.0};
        auto r = mann_whitney_u(a, b);
        CHECK(r.u == doctest::Approx(8.0));
        CHECK(r.p >= 0.99);
    }
    SUBCASE("significance is symmetric in the sample order") {
        RngStream rng(77);
        for (int t = 0; t < 100; ++t) {
            SampleSet a(2 + rng.uniform_int(6)), b(2 + rng.uniform_int(6));
            for (auto& v : a) v = rng.uniform(0.0, 10.0);
            for (auto& v : b) v = rng.uniform(2.0, 12.0);
            CHECK(mann_whitney_u(a, b).p == doctest::Approx(mann_whitney_u(b, a).p));
        }
    }
    SUBCASE("invalid samples are rejected") {
        CHECK_THROWS_AS(mann_whitney_u(SampleSet{1.0}, SampleSet{1.0, 2.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(mann_whitney_u(SampleSet{1.0, std::nan("")}, SampleSet{1.0, 2.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("p-values track the enumeration oracle at small sizes") {
    RngStream rng(2025);

    SUBCASE("the tiny-sample path reproduces exact enumeration, ties included") {
        for (std::size_t n1 = 2; n1 <= 3; ++n1) {
            const std::size_t n2 = 5 - n1;
            for (int t = 0; t < 40; ++t) {
                SampleSet a(n1), b(n2);
                for (auto& v : a) v = double(rng.uniform_int(4));
                for (auto& v : b) v = double(rng.uniform_int(4));
                const double oracle = exact_two_sided_p(a, b);
                const double ours = mann_whitney_u(a, b).p;
                INFO("n1=", n1, " a0=", a[0], " b0=", b[0]);
                CHECK(ours == doctest::Approx(oracle));
            }
        }
    }
    SUBCASE("the approximation stays within 0.05 of exact on untied data") {
        for (std::size_t n1 = 2; n1 <= 6; ++n1) {
            for (std::size_t n2 = std::max<std::size_t>(n1, 6 - n1); n2 <= 6; ++n2) {
                for (int t = 0; t < 25; ++t) {
                    SampleSet a(n1), b(n2);
                    for (auto& v : a) v = rng.uniform(0.0, 1.0);
                    for (auto& v : b) v = rng.uniform(0.0, 1.0);
                    const double oracle = exact_two_sided_p(a, b);
                    const double ours = mann_whitney_u(a, b).p;
                    INFO("n1=", n1, " n2=", n2, " oracle=", oracle, " ours=", ours);
                    CHECK(std::fabs(ours - oracle) <= 0.05);
                }
            }
        }
    }
}

TEST_CASE("holm step-down adjustment") {
    CHECK(holm_adjust({0.01, 0.04, 0.03}) == std::vector<double>{0.03, 0.06, 0.06});
    CHECK(holm_adjust({0.2}) == std::vector<double>{0.2});
    CHECK(holm_adjust({0.5, 0.9}) == std::vector<double>{1.0, 1.0});
    CHECK(holm_adjust({}).empty());
    CHECK_THROWS_AS(holm_adjust({0.0, 0.5}), std::invalid_argument);

    SUBCASE("adjusted values dominate the raw ones and are sorted-monotone") {
        RngStream rng(5);
        for (int t = 0; t < 100; ++t) {
            std::vector<double> p(1 + rng.uniform_int(8));
            for (auto& v : p) v = rng.uniform(1e-6, 1.0);
            auto adj = holm_adjust(p);
            std::vector<std::size_t> order(p.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
            double prev = 0.0;
            for (std::size_t k = 0; k < order.size(); ++k) {
                CHECK(adj[order[k]] >= p[order[k]]);
                CHECK(adj[order[k]] >= prev);
                CHECK(adj[order[k]] <= 1.0);
                prev = adj[order[k]];
            }
        }
    }
}

TEST_CASE("significance marks") {
    SampleSet low{1.0, 2.0, 3.0}, high{4.0, 5.0, 6.0};
    CHECK(significance_mark(low, high, 0.5) == Mark::Approx);
    CHECK(significance_mark(low, high, 0.001) == Mark::Plus);
    CHECK(significance_mark(high, low, 0.001) == Mark::Minus);
    CHECK(significance_mark(low, low, 0.001) == Mark::Approx);
    CHECK(std::string(mark_symbol(Mark::Plus)) == "+");

    SUBCASE("marks are invariant under strictly increasing transforms") {
        RngStream rng(31);
        for (int t = 0; t < 50; ++t) {
            SampleSet a(12), b(12);
            for (auto& v : a) v = rng.uniform(0.0, 4.0);
            for (auto& v : b) v = rng.uniform(1.0, 5.0);
            const double p = mann_whitney_u(a, b).p;
            auto mark = significance_mark(a, b, p);

            auto transform = [](SampleSet s) {
                for (auto& v : s) v = std::exp(v) + 3.0 * v;
                return s;
            };
            SampleSet ta = transform(a), tb = transform(b);
            const double tp = mann_whitney_u(ta, tb).p;
            CHECK(tp == doctest::Approx(p));
            CHECK(significance_mark(ta, tb, tp) == mark);
        }
    }
}

TEST_CASE("average ranks") {
    CHECK(average_ranks({{1.0}, {2.0}}) == std::vector<double>{1.0, 2.0});
    CHECK(average_ranks({{5.0}, {5.0}, {9.0}}) == std::vector<double>{1.5, 1.5, 3.0});

    SUBCASE("permuting the algorithms permutes the output") {
        std::vector<std::vector<double>> means = {{3.0, 1.0}, {2.0, 2.0}, {1.0, 3.0}};
        auto r = average_ranks(means);
        std::vector<std::vector<double>> swapped = {means[2], means[1], means[0]};
        auto s = average_ranks(swapped);
        CHECK(r[0] == s[2]);
        CHECK(r[1] == s[1]);
        CHECK(r[2] == s[0]);
    }
    SUBCASE("per-problem ranks sum to a(a+1)/2 and land in [1, a]") {
        RngStream rng(8);
        const std::size_t a = 5;
        for (int t = 0; t < 50; ++t) {
            std::vector<std::vector<double>> means(a, std::vector<double>(1));
            for (auto& row : means) row[0] = double(rng.uniform_int(4));
            auto ranks = average_ranks(means);
            const double sum = std::accumulate(ranks.begin(), ranks.end(), 0.0);
            CHECK(sum == doctest::Approx(0.5 * a * (a + 1)));
            for (double r : ranks) {
                CHECK(r >= 1.0);
                CHECK(r <= double(a));
            }
        }
    }
}

TEST_CASE("comparison tables") {
    // Two algorithms with identical samples across three problems.
    SampleSet s{3.0, 1.0, 2.0, 4.0, 2.5};
    std::vector<std::vector<SampleSet>> samples = {{s, s, s}, {s, s, s}};
    auto table = build_comparison(samples, {"ref", "twin"}, {"p1", "p2", "p3"}, 0);
    CHECK(table.tallies[1].approx == 3);
    CHECK(table.tallies[1].plus + table.tallies[1].approx + table.tallies[1].minus == 3);
    CHECK(table.average_rank[0] == table.average_rank[1]);
    CHECK_FALSE(table.cells[0][0].raw_p.has_value());
    REQUIRE(table.cells[1][0].adjusted_p.has_value());
    CHECK(*table.cells[1][0].adjusted_p >= 0.99);

    SUBCASE("a strictly dominating reference collects a plus on every problem") {
        SampleSet lo{1.0, 2.0, 3.0, 1.5, 2.5, 1.2, 2.2, 3.1, 1.7, 2.8};
        SampleSet hi{11.0, 12.0, 13.0, 11.5, 12.5, 11.2, 12.2, 13.1, 11.7, 12.8};
        std::vector<std::vector<SampleSet>> dom = {{lo, lo, lo, lo}, {hi, hi, hi, hi}};
        auto t = build_comparison(dom, {"ref", "weak"}, {"p1", "p2", "p3", "p4"}, 0);
        CHECK(t.tallies[1].plus == 4);
        CHECK(t.average_rank[0] == 1.0);
        CHECK(t.average_rank[1] == 2.0);
    }

    SUBCASE("unequal trial counts are rejected with a name") {
        std::vector<std::vector<SampleSet>> bad = {{s}, {SampleSet{1.0, 2.0}}};
        try {
            build_comparison(bad, {"ref", "short"}, {"p1"}, 0);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string what = e.what();
            CHECK(what.find("p1") != std::string::npos);
            CHECK(what.find("short") != std::string::npos);
        }
    }
    SUBCASE("a lone algorithm cannot be compared") {
        std::vector<std::vector<SampleSet>> lone = {{s}};
        CHECK_THROWS_AS(build_comparison(lone, {"only"}, {"p1"}, 0), ConfigError);
    }
}
