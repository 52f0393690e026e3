#include "zoo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zoo {

namespace {

void validate_sample(const SampleSet& s, const char* what) {
    if (s.size() < 2) throw std::invalid_argument(std::string(what) + ": need at least 2 values");
    for (double v : s) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) + ": non-finite value");
        }
    }
}

/// Midranks (1-based, ties averaged) of the given values.
std::vector<double> midranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double u_from_rank_sum(double rank_sum, std::size_t n1) {
    return rank_sum - 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);
}

double normal_two_sided_p(double z) { return std::erfc(z / std::sqrt(2.0)); }

/// Exact two-sided p over all assignments of the combined values to groups.
double exact_enumeration_p(const std::vector<double>& ranks, std::size_t n1, double u_obs) {
    const std::size_t n = ranks.size();
    std::vector<std::size_t> pick(n1);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    std::uint64_t total = 0, le = 0, ge = 0;
    constexpr double kEps = 1e-9;
    while (true) {
        double rank_sum = 0.0;
        for (std::size_t idx : pick) rank_sum += ranks[idx];
        const double u = u_from_rank_sum(rank_sum, n1);
        ++total;
        if (u <= u_obs + kEps) ++le;
        if (u >= u_obs - kEps) ++ge;
        // next combination
        std::size_t i = n1;
        while (i > 0) {
            --i;
            if (pick[i] != i + n - n1) {
                ++pick[i];
                for (std::size_t j = i + 1; j < n1; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) {
                const double p =
                    2.0 * static_cast<double>(std::min(le, ge)) / static_cast<double>(total);
                return std::min(1.0, p);
            }
        }
    }
}

double sample_mean(const SampleSet& s) {
    return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
}

double sample_stddev(const SampleSet& s) {
    if (s.size() < 2) return 0.0;
    const double mu = sample_mean(s);
    double ss = 0.0;
    for (double v : s) ss += (v - mu) * (v - mu);
    return std::sqrt(ss / static_cast<double>(s.size() - 1));
}

}  // namespace

MannWhitneyResult mann_whitney_u(const SampleSet& a, const SampleSet& b) {
    validate_sample(a, "mann_whitney_u: first sample");
    validate_sample(b, "mann_whitney_u: second sample");

    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<double> combined;
    combined.reserve(n);
    combined.insert(combined.end(), a.begin(), a.end());
    combined.insert(combined.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(combined);

    double rank_sum = 0.0;
    for (std::size_t i = 0; i < n1; ++i) rank_sum += ranks[i];

    MannWhitneyResult result;
    result.u = u_from_rank_sum(rank_sum, n1);

    if (n <= 5) {
        // The normal approximation is too coarse below six values total.
        result.p = std::max(exact_enumeration_p(ranks, n1, result.u), 1e-300);
        return result;
    }

    // Tie-corrected variance of U under the null.
    double tie_term = 0.0;
    {
        std::vector<double> sorted = combined;
        std::sort(sorted.begin(), sorted.end());
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
            const double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
    }
    const double nn = static_cast<double>(n);
    const double variance = (static_cast<double>(n1) * static_cast<double>(n2) / 12.0) *
                            ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
    if (variance <= 0.0) {
        result.p = 1.0;  // every value identical across both sets
        return result;
    }

    const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n2);
    const double z = std::max(0.0, std::fabs(result.u - mu) - 0.5) / std::sqrt(variance);
    result.p = std::min(1.0, std::max(normal_two_sided_p(z), 1e-300));
    return result;
}

std::vector<double> holm_adjust(const std::vector<double>& p) {
    const std::size_t m = p.size();
    if (m == 0) return {};
    for (double v : p) {
        if (!(v > 0.0) || v > 1.0) {
            throw std::invalid_argument("holm_adjust: p-values must lie in (0, 1]");
        }
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });

    std::vector<double> adjusted(m);
    double running_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double scaled = p[order[i]] * static_cast<double>(m - i);
        running_max = std::max(running_max, std::min(1.0, scaled));
        adjusted[order[i]] = running_max;
    }
    return adjusted;
}

const char* mark_symbol(Mark mark) {
    switch (mark) {
        case Mark::Plus: return "+";
        case Mark::Approx: return "≈";
        case Mark::Minus: return "-";
    }
    return "?";
}

double median(SampleSet values) {
    if (values.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    return 0.5 * (values[(k - 1) / 2] + values[k / 2]);
}

Mark significance_mark(const SampleSet& reference, const SampleSet& other, double adjusted_p,
                       double alpha) {
    if (adjusted_p >= alpha) return Mark::Approx;
    const double med_ref = median(reference);
    const double med_other = median(other);
    if (med_other > med_ref) return Mark::Plus;   // reference better under minimization
    if (med_other < med_ref) return Mark::Minus;
    return Mark::Approx;
}

std::vector<double> average_ranks(const std::vector<std::vector<double>>& means) {
    const std::size_t a = means.size();
    if (a == 0) return {};
    const std::size_t p = means[0].size();
    for (const auto& row : means) {
        if (row.size() != p) throw std::invalid_argument("average_ranks: ragged means matrix");
        for (double v : row) {
            if (!std::isfinite(v)) throw std::invalid_argument("average_ranks: non-finite mean");
        }
    }
    if (p == 0) return std::vector<double>(a, 0.0);

    std::vector<double> totals(a, 0.0);
    std::vector<double> column(a);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < a; ++i) column[i] = means[i][j];
        const std::vector<double> ranks = midranks(column);
        for (std::size_t i = 0; i < a; ++i) totals[i] += ranks[i];
    }
    for (auto& t : totals) t /= static_cast<double>(p);
    return totals;
}

ComparisonTable build_comparison(const std::vector<std::vector<SampleSet>>& samples,
                                 const std::vector<std::string>& algorithms,
                                 const std::vector<std::string>& problems, std::size_t reference,
                                 double alpha) {
    const std::size_t a = algorithms.size();
    const std::size_t p = problems.size();
    if (samples.size() != a) throw std::invalid_argument("build_comparison: samples/algorithms mismatch");
    if (a < 2) throw ConfigError("build_comparison: need at least two algorithms");
    if (reference >= a) throw std::invalid_argument("build_comparison: bad reference index");
    for (const auto& row : samples) {
        if (row.size() != p) throw std::invalid_argument("build_comparison: samples/problems mismatch");
    }
    for (std::size_t j = 0; j < p; ++j) {
        const std::size_t trials = samples[reference][j].size();
        for (std::size_t i = 0; i < a; ++i) {
            if (samples[i][j].size() != trials) {
                throw ConfigError("unequal trial counts for problem " + problems[j] +
                                  ", algorithm " + algorithms[i]);
            }
        }
    }

    ComparisonTable table;
    table.algorithms = algorithms;
    table.problems = problems;
    table.reference = reference;
    table.cells.assign(a, std::vector<ComparisonCell>(p));
    table.tallies.assign(a, MarkTally{});

    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            table.cells[i][j].mean = sample_mean(samples[i][j]);
            table.cells[i][j].stddev = sample_stddev(samples[i][j]);
        }
    }

    // Holm family: the reference-vs-other tests of one problem.
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<double> raw;
        std::vector<std::size_t> who;
        for (std::size_t i = 0; i < a; ++i) {
            if (i == reference) continue;
            raw.push_back(mann_whitney_u(samples[reference][j], samples[i][j]).p);
            who.push_back(i);
        }
        const std::vector<double> adjusted = holm_adjust(raw);
        for (std::size_t k = 0; k < who.size(); ++k) {
            auto& cell = table.cells[who[k]][j];
            cell.raw_p = raw[k];
            cell.adjusted_p = adjusted[k];
            const Mark mark =
                significance_mark(samples[reference][j], samples[who[k]][j], adjusted[k], alpha);
            cell.mark = mark;
            auto& tally = table.tallies[who[k]];
            if (mark == Mark::Plus) ++tally.plus;
            else if (mark == Mark::Approx) ++tally.approx;
            else ++tally.minus;
        }
    }

    std::vector<std::vector<double>> means(a, std::vector<double>(p));
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < p; ++j) means[i][j] = table.cells[i][j].mean;
    }
    table.average_rank = average_ranks(means);
    return table;
}

}  // namespace zoo
