#include "zoo/benchmarks.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>

namespace zoo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double sq(double v) { return v * v; }

double elliptic(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s += std::pow(1.0e6, static_cast<double>(i) / (n - 1.0)) * sq(z[i]);
    }
    return s;
}

double bent_cigar(std::span<const double> z) {
    double s = sq(z[0]);
    for (std::size_t i = 1; i < z.size(); ++i) s += 1.0e6 * sq(z[i]);
    return s;
}

double discus(std::span<const double> z) {
    double s = 1.0e6 * sq(z[0]);
    for (std::size_t i = 1; i < z.size(); ++i) s += sq(z[i]);
    return s;
}

double rosenbrock(std::span<const double> z) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        s += 100.0 * sq(sq(z[i]) - z[i + 1]) + sq(z[i] - 1.0);
    }
    return s;
}

double ackley(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double v : z) {
        sum_sq += sq(v);
        sum_cos += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 + kE;
}

double weierstrass(std::span<const double> z) {
    constexpr double a = 0.5, b = 3.0;
    constexpr int k_max = 20;
    double s = 0.0;
    for (double v : z) {
        double ak = 1.0, bk = 1.0;
        for (int k = 0; k <= k_max; ++k) {
            s += ak * std::cos(2.0 * kPi * bk * (v + 0.5));
            ak *= a;
            bk *= b;
        }
    }
    double base = 0.0;
    {
        double ak = 1.0, bk = 1.0;
        for (int k = 0; k <= k_max; ++k) {
            base += ak * std::cos(kPi * bk);
            ak *= a;
            bk *= b;
        }
    }
    return s - static_cast<double>(z.size()) * base;
}

double griewank(std::span<const double> z) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s += sq(z[i]);
        p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + s / 4000.0 - p;
}

double rastrigin(std::span<const double> z) {
    double s = 0.0;
    for (double v : z) s += sq(v) - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

// Modified Schwefel; the internal offset puts the minimizer at the origin.
double schwefel(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double s = 0.0;
    for (double v : z) {
        double w = v + 4.209687462275036e2;
        if (w > 500.0) {
            s -= (500.0 - std::fmod(w, 500.0)) *
                 std::sin(std::sqrt(std::fabs(500.0 - std::fmod(w, 500.0))));
            s += sq(w - 500.0) / (10000.0 * n);
        } else if (w < -500.0) {
            s -= (std::fmod(std::fabs(w), 500.0) - 500.0) *
                 std::sin(std::sqrt(std::fabs(std::fmod(std::fabs(w), 500.0) - 500.0)));
            s += sq(w + 500.0) / (10000.0 * n);
        } else {
            s -= w * std::sin(std::sqrt(std::fabs(w)));
        }
    }
    return 4.189828872724338e2 * n + s;
}

double katsuura(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    const double exponent = 10.0 / std::pow(n, 1.2);
    double prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        double inner = 0.0;
        double two_j = 2.0;
        for (int j = 1; j <= 32; ++j) {
            double t = two_j * z[i];
            inner += std::fabs(t - std::round(t)) / two_j;
            two_j *= 2.0;
        }
        prod *= std::pow(1.0 + static_cast<double>(i + 1) * inner, exponent);
    }
    const double scale = 10.0 / (n * n);
    return scale * prod - scale;
}

double happycat(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double r2 = 0.0, sum = 0.0;
    for (double v : z) {
        r2 += sq(v);
        sum += v;
    }
    return std::pow(std::fabs(r2 - n), 0.25) + (0.5 * r2 + sum) / n + 0.5;
}

double hgbat(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double r2 = 0.0, sum = 0.0;
    for (double v : z) {
        r2 += sq(v);
        sum += v;
    }
    return std::sqrt(std::fabs(sq(r2) - sq(sum))) + (0.5 * r2 + sum) / n + 0.5;
}

double griewank_rosenbrock(std::span<const double> z) {
    const std::size_t n = z.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = z[i];
        double b = z[(i + 1) % n];
        double t = 100.0 * sq(sq(a) - b) + sq(a - 1.0);
        s += sq(t) / 4000.0 - std::cos(t) + 1.0;
    }
    return s;
}

double schaffer_f6(std::span<const double> z) {
    const std::size_t n = z.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = sq(z[i]) + sq(z[(i + 1) % n]);
        double num = sq(std::sin(std::sqrt(a))) - 0.5;
        double den = sq(1.0 + 0.001 * a);
        s += 0.5 + num / den;
    }
    return s;
}

double zakharov(std::span<const double> z) {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s1 += sq(z[i]);
        s2 += 0.5 * static_cast<double>(i + 1) * z[i];
    }
    return s1 + sq(s2) + sq(sq(s2));
}

double levy(std::span<const double> z) {
    const std::size_t n = z.size();
    auto w = [&](std::size_t i) { return 1.0 + z[i] / 4.0; };
    double s = sq(std::sin(kPi * w(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double wi = w(i);
        s += sq(wi - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * wi + 1.0)));
    }
    double wn = w(n - 1);
    s += sq(wn - 1.0) * (1.0 + sq(std::sin(2.0 * kPi * wn)));
    return s;
}

struct BaseInfo {
    const char* tag;
    double (*fn)(std::span<const double>);
    double shrink;     // standard CEC shrink rate applied before rotation
    double minimizer;  // base minimizer is minimizer * ones
};

constexpr std::size_t kBaseCount = 16;

const std::array<BaseInfo, kBaseCount>& base_table() {
    static const std::array<BaseInfo, kBaseCount> table = {{
        {"elliptic", elliptic, 1.0, 0.0},
        {"bent-cigar", bent_cigar, 1.0, 0.0},
        {"discus", discus, 1.0, 0.0},
        {"rosenbrock", rosenbrock, 2.048 / 100.0, 1.0},
        {"ackley", ackley, 1.0, 0.0},
        {"weierstrass", weierstrass, 0.5 / 100.0, 0.0},
        {"griewank", griewank, 600.0 / 100.0, 0.0},
        {"rastrigin", rastrigin, 5.12 / 100.0, 0.0},
        {"schwefel", schwefel, 1000.0 / 100.0, 0.0},
        {"katsuura", katsuura, 5.0 / 100.0, 0.0},
        {"happycat", happycat, 5.0 / 100.0, -1.0},
        {"hgbat", hgbat, 5.0 / 100.0, -1.0},
        {"expanded-griewank-rosenbrock", griewank_rosenbrock, 5.0 / 100.0, 1.0},
        {"expanded-schaffer-f6", schaffer_f6, 1.0, 0.0},
        {"zakharov", zakharov, 1.0, 0.0},
        {"levy", levy, 1.0, 0.0},
    }};
    return table;
}

const BaseInfo& info_of(BaseFunction id) { return base_table()[static_cast<std::size_t>(id)]; }

// FNV-1a, used to derive stable per-(tag, dim) instance seeds.
std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct CatalogEntry {
    const char* tag;
    BaseFunction fn;
    double bias;
};

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"cec2014-f1", BaseFunction::Elliptic, 100.0},
        {"cec2014-f2", BaseFunction::BentCigar, 200.0},
        {"cec2014-f3", BaseFunction::Discus, 300.0},
        {"cec2014-f4", BaseFunction::Rosenbrock, 400.0},
        {"cec2014-f5", BaseFunction::Ackley, 500.0},
        {"cec2014-f6", BaseFunction::Weierstrass, 600.0},
        {"cec2014-f7", BaseFunction::Griewank, 700.0},
        {"cec2014-f8", BaseFunction::Rastrigin, 800.0},
        {"cec2014-f9", BaseFunction::Rastrigin, 900.0},
        {"cec2014-f10", BaseFunction::Schwefel, 1000.0},
        {"cec2014-f11", BaseFunction::Schwefel, 1100.0},
        {"cec2014-f12", BaseFunction::Katsuura, 1200.0},
        {"cec2014-f13", BaseFunction::HappyCat, 1300.0},
        {"cec2014-f14", BaseFunction::Hgbat, 1400.0},
        {"cec2014-f15", BaseFunction::GriewankRosenbrock, 1500.0},
        {"cec2014-f16", BaseFunction::SchafferF6, 1600.0},
        {"cec2022-f1", BaseFunction::Zakharov, 300.0},
        {"cec2022-f2", BaseFunction::Rosenbrock, 400.0},
        {"cec2022-f3", BaseFunction::SchafferF6, 600.0},
        {"cec2022-f4", BaseFunction::Rastrigin, 800.0},
        {"cec2022-f5", BaseFunction::Levy, 900.0},
    };
    return entries;
}

}  // namespace

double base_function(BaseFunction id, std::span<const double> z) {
    if (z.size() < 2) throw std::invalid_argument("base_function: dimension must be at least 2");
    for (double v : z) {
        if (!std::isfinite(v)) throw std::invalid_argument("base_function: non-finite input");
    }
    return info_of(id).fn(z);
}

const std::vector<std::string>& base_function_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& info : base_table()) out.emplace_back(info.tag);
        return out;
    }();
    return tags;
}

BaseFunction base_function_from_tag(std::string_view tag) {
    const auto& table = base_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (tag == table[i].tag) return static_cast<BaseFunction>(i);
    }
    throw ConfigError("unknown base function tag: " + std::string(tag));
}

std::string_view base_function_tag(BaseFunction id) { return info_of(id).tag; }

double base_minimizer_offset(BaseFunction id) { return info_of(id).minimizer; }

std::vector<double> random_rotation(std::size_t d, std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("random_rotation: dimension must be positive");
    RngStream rng(seed);
    Eigen::MatrixXd a(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = rng.normal();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::VectorXd r_diag = qr.matrixQR().diagonal();
    for (std::size_t j = 0; j < d; ++j) {
        if (r_diag(static_cast<Eigen::Index>(j)) < 0.0) q.col(static_cast<Eigen::Index>(j)) *= -1.0;
    }
    std::vector<double> out(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out[i * d + j] = q(i, j);
    }
    return out;
}

BenchmarkInstance make_benchmark_instance(BaseFunction id, std::size_t d, std::uint64_t seed,
                                          double bias, bool rotated) {
    if (d < 2) throw ConfigError("make_benchmark: dimension must be at least 2");
    const BaseInfo& info = info_of(id);

    RngStream rng(seed);
    auto shift = std::make_shared<std::vector<double>>(d);
    for (auto& o : *shift) o = rng.uniform(-80.0, 80.0);

    std::shared_ptr<std::vector<double>> rotation;
    if (rotated) {
        rotation = std::make_shared<std::vector<double>>(random_rotation(d, splitmix(seed)));
    }

    const double shrink = info.shrink;
    const double offset = info.minimizer;
    auto fn = info.fn;

    Problem problem;
    problem.name = std::string(info.tag) + "-d" + std::to_string(d);
    problem.dim = d;
    problem.bounds = Bounds::cube(d, -100.0, 100.0);
    problem.known_bias = bias;
    problem.objective = [shift, rotation, shrink, offset, fn, bias,
                         d](std::span<const double> x) -> double {
        std::vector<double> y(d);
        for (std::size_t i = 0; i < d; ++i) y[i] = shrink * (x[i] - (*shift)[i]);
        std::vector<double> z(d);
        if (rotation) {
            using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
            Eigen::Map<const RowMajor> m(rotation->data(), static_cast<Eigen::Index>(d),
                                         static_cast<Eigen::Index>(d));
            Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(d));
            Eigen::Map<Eigen::VectorXd> zv(z.data(), static_cast<Eigen::Index>(d));
            zv = m * yv;
        } else {
            z = y;
        }
        if (offset != 0.0) {
            for (auto& v : z) v += offset;
        }
        return fn(z) + bias;
    };

    BenchmarkInstance instance;
    instance.problem = std::move(problem);
    instance.shift = *shift;
    if (rotation) instance.rotation = *rotation;
    return instance;
}

Problem make_benchmark(BaseFunction id, std::size_t d, std::uint64_t seed, double bias,
                       bool rotated) {
    return make_benchmark_instance(id, d, seed, bias, rotated).problem;
}

Problem make_benchmark(std::string_view tag, std::size_t d, std::uint64_t seed, double bias,
                       bool rotated) {
    return make_benchmark(base_function_from_tag(tag), d, seed, bias, rotated);
}

const std::vector<std::string>& benchmark_catalog() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& e : catalog_entries()) out.emplace_back(e.tag);
        return out;
    }();
    return tags;
}

bool is_benchmark_tag(std::string_view tag) {
    for (const auto& e : catalog_entries()) {
        if (tag == e.tag) return true;
    }
    return false;
}

BenchmarkInstance make_catalog_instance(std::string_view tag, std::size_t dim) {
    for (const auto& e : catalog_entries()) {
        if (tag == e.tag) {
            const std::uint64_t instance_seed = splitmix(fnv1a(tag) + dim);
            BenchmarkInstance instance = make_benchmark_instance(e.fn, dim, instance_seed, e.bias);
            instance.problem.name = std::string(tag);
            return instance;
        }
    }
    throw ConfigError("unknown benchmark tag: " + std::string(tag));
}

Problem make_catalog_problem(std::string_view tag, std::size_t dim) {
    return make_catalog_instance(tag, dim).problem;
}

std::pair<BaseFunction, double> catalog_entry(std::string_view tag) {
    for (const auto& e : catalog_entries()) {
        if (tag == e.tag) return {e.fn, e.bias};
    }
    throw ConfigError("unknown benchmark tag: " + std::string(tag));
}

}  // namespace zoo
