#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace gmstd {

enum class Predicate { mstd, gen_mstd };

std::string_view to_string(Predicate p);
/// "mstd", "gen4" (or "gen_mstd"); throws SetError otherwise.
Predicate parse_predicate(std::string_view text);

struct DensityEstimate {
  std::int64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  /// Half-width of the normal-approximation 95% interval. When hits is 0
  /// or equals samples it falls back to 3/samples (rule of three).
  double ci95 = 0.0;
  std::uint64_t seed = 0;
};

/// Random subsets of [1, n] keep each element with probability p. Samples
/// are drawn in fixed blocks, each seeded from (seed, block index), so the
/// result does not depend on `workers` (0 = hardware concurrency).
DensityEstimate mc_density(std::int64_t n, std::uint64_t samples, Predicate predicate, double p,
                           std::uint64_t seed, unsigned workers = 0);

/// Probability that a uniform subset of [1, n] is a P_{floor(alpha n)}-set.
DensityEstimate mc_pn_probability(std::int64_t n, double alpha, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers = 0);

/// Parameters of sum_{k=n0}^{floor(r/4)} 2^{-ak} (1 - 2^{-bk})^{r/(ck)}.
struct BoundParams {
  long double a = 2.0L;
  long double b = 1.5L;
  long double c = 1.5L;
  std::int64_t r = 0;
  std::int64_t n0 = 1;
};

/// Evaluates the sum in long double with compensated summation. Once the
/// terms are decreasing, terms below 1e-30 of the running total are dropped.
long double lower_bound_sum(const BoundParams& params);

/// Relaxed-construction parameters: a = 2 alpha(f), b = c = 1/2.
BoundParams relaxed_bound_params(int f, std::int64_t r, std::int64_t n0);

/// alpha(f) = (-2/f) log2((2^{f/2} - 1) / 2^{f/2}).
long double alpha_of_f(int f);
/// 2 alpha(f) / b.
long double exponent_of_f(int f, long double b);

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace gmstd
