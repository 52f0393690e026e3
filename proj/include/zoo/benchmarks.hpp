#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zoo/core.hpp"

namespace zoo {

/// Base test functions underlying the synthetic suite, in their standard CEC
/// forms. Each has a known minimizer with value 0.
enum class BaseFunction {
    Elliptic,
    BentCigar,
    Discus,
    Rosenbrock,
    Ackley,
    Weierstrass,
    Griewank,
    Rastrigin,
    Schwefel,
    Katsuura,
    HappyCat,
    Hgbat,
    GriewankRosenbrock,
    SchafferF6,
    Zakharov,
    Levy,
};

/// Value of the bare base function at z (no shift, rotation, or bias).
double base_function(BaseFunction id, std::span<const double> z);

/// String tags accepted wherever a BaseFunction is named ("elliptic", ...).
const std::vector<std::string>& base_function_tags();
BaseFunction base_function_from_tag(std::string_view tag);
std::string_view base_function_tag(BaseFunction id);

/// The base minimizer is offset * ones; base(minimizer) == 0.
double base_minimizer_offset(BaseFunction id);

/// Random d x d orthogonal matrix (row-major), unique per seed: a seeded
/// standard-normal matrix run through Householder QR with the R diagonal
/// sign-normalized to be positive.
std::vector<double> random_rotation(std::size_t d, std::uint64_t seed);

/// Synthetic benchmark instance on [-100, 100]^d:
///   f(x) = base(M * scale * (x - o) + offset * ones) + bias
/// with o drawn uniform in [-80, 80]^d, M a seeded random rotation (identity
/// when rotated is false), and scale/offset the standard CEC shrink rate and
/// base-minimizer offset of the function. f(o) == bias by construction.
struct BenchmarkInstance {
    Problem problem;
    std::vector<double> shift;     // o
    std::vector<double> rotation;  // row-major d x d; empty when not rotated
};
BenchmarkInstance make_benchmark_instance(BaseFunction id, std::size_t d, std::uint64_t seed,
                                          double bias, bool rotated = true);
Problem make_benchmark(BaseFunction id, std::size_t d, std::uint64_t seed, double bias,
                       bool rotated = true);
Problem make_benchmark(std::string_view tag, std::size_t d, std::uint64_t seed, double bias,
                       bool rotated = true);

/// Catalog tags addressable from the CLI: "cec2014-f1".."cec2014-f16" and
/// "cec2022-f1".."cec2022-f5", with the documented bias per function.
const std::vector<std::string>& benchmark_catalog();
bool is_benchmark_tag(std::string_view tag);

/// Instance for a catalog tag at a given dimension. The shift and rotation
/// seed derives only from (tag, dim), so an instance is fixed across trials
/// and configs, like an official data file.
Problem make_catalog_problem(std::string_view tag, std::size_t dim);
BenchmarkInstance make_catalog_instance(std::string_view tag, std::size_t dim);

/// Base function and documented bias behind a catalog tag.
std::pair<BaseFunction, double> catalog_entry(std::string_view tag);

}  // namespace zoo
