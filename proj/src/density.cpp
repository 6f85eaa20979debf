#include "gmstd/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include "gmstd/classify.hpp"
#include "gmstd/int_set.hpp"

namespace gmstd {

namespace {

constexpr std::uint64_t kBlock = 4096;

using SubsetTest = std::function<bool(const IntSet&)>;

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

IntSet draw_subset(std::int64_t n, double p, std::mt19937_64& rng,
                   std::vector<std::uint64_t>& words) {
  const auto bits = static_cast<std::size_t>(n);
  words.assign((bits + 63) / 64, 0);
  if (p == 0.5) {
    for (auto& w : words) {
      w = rng();
    }
    if (bits % 64 != 0) {
      words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    }
  } else {
    std::bernoulli_distribution keep(p);
    for (std::size_t i = 0; i < bits; ++i) {
      if (keep(rng)) {
        words[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return IntSet::from_bits(1, words);
}

DensityEstimate run_sampler(std::int64_t n, std::uint64_t samples, double p, std::uint64_t seed,
                            unsigned workers, const SubsetTest& test) {
  if (n < 1) {
    throw SetError("sampler: n must be positive");
  }
  if (samples < 1) {
    throw SetError("sampler: need at least one sample");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw SetError("sampler: p must lie in (0, 1)");
  }
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::vector<std::uint64_t> hits(workers, 0);
  const auto work = [&](unsigned id) {
    std::vector<std::uint64_t> words;
    std::uint64_t local = 0;
    for (std::uint64_t b = id; b < blocks; b += workers) {
      auto rng = block_rng(seed, b);
      const std::uint64_t count = std::min(kBlock, samples - b * kBlock);
      for (std::uint64_t i = 0; i < count; ++i) {
        const IntSet a = draw_subset(n, p, rng, words);
        if (!a.empty() && test(a)) {
          ++local;
        }
      }
    }
    hits[id] = local;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) {
      pool.emplace_back(work, id);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  DensityEstimate e;
  e.n = n;
  e.samples = samples;
  for (const auto h : hits) {
    e.hits += h;
  }
  e.seed = seed;
  const double total = static_cast<double>(samples);
  e.estimate = static_cast<double>(e.hits) / total;
  if (e.hits == 0 || e.hits == samples) {
    e.ci95 = 3.0 / total;
  } else {
    e.ci95 = 1.96 * std::sqrt(e.estimate * (1.0 - e.estimate) / total);
  }
  return e;
}

}  // namespace

std::string_view to_string(Predicate p) { return p == Predicate::mstd ? "mstd" : "gen4"; }

Predicate parse_predicate(std::string_view text) {
  if (text == "mstd") {
    return Predicate::mstd;
  }
  if (text == "gen4" || text == "gen_mstd") {
    return Predicate::gen_mstd;
  }
  throw SetError("unknown predicate '" + std::string(text) + "' (expected mstd or gen4)");
}

DensityEstimate mc_density(std::int64_t n, std::uint64_t samples, Predicate predicate, double p,
                           std::uint64_t seed, unsigned workers) {
  SubsetTest test;
  if (predicate == Predicate::mstd) {
    test = [](const IntSet& a) { return is_mstd(a); };
  } else {
    test = [](const IntSet& a) { return generalized_balance(a).delta > 0; };
  }
  return run_sampler(n, samples, p, seed, workers, test);
}

DensityEstimate mc_pn_probability(std::int64_t n, double alpha, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw SetError("mc_pn_probability: alpha must lie in (0, 1]");
  }
  const auto fringe = static_cast<std::int64_t>(std::floor(alpha * static_cast<double>(n)));
  return run_sampler(n, samples, 0.5, seed, workers,
                     [fringe](const IntSet& a) { return is_pn_set(a, fringe); });
}

long double lower_bound_sum(const BoundParams& params) {
  const auto& [a, b, c, r, n0] = params;
  if (!(a > 0 && b > 0 && c > 0)) {
    throw SetError("lower_bound_sum: a, b, c must be positive");
  }
  const std::int64_t last = r / 4;
  if (n0 < 1 || n0 > last) {
    throw SetError("lower_bound_sum: empty summation range");
  }
  long double total = 0.0L;
  long double carry = 0.0L;
  long double previous = 0.0L;
  for (std::int64_t k = n0; k <= last; ++k) {
    const auto kk = static_cast<long double>(k);
    const long double exponent = static_cast<long double>(r) / (c * kk);
    const long double term = std::exp2(-a * kk) * std::exp(exponent * std::log1p(-std::exp2(-b * kk)));
    // Kahan step.
    const long double y = term - carry;
    const long double t = total + y;
    carry = (t - total) - y;
    total = t;
    if (k > n0 && term < previous && term < 1e-30L * total) {
      break;
    }
    previous = term;
  }
  return total;
}

BoundParams relaxed_bound_params(int f, std::int64_t r, std::int64_t n0) {
  return BoundParams{2.0L * alpha_of_f(f), 0.5L, 0.5L, r, n0};
}

long double alpha_of_f(int f) {
  if (f < 2 || f % 2 != 0) {
    throw SetError("alpha_of_f: f must be even and >= 2");
  }
  // log2(1 - 2^{-f/2}) via log1p keeps precision for large f.
  const long double half = static_cast<long double>(f) / 2.0L;
  return (-2.0L / static_cast<long double>(f)) * std::log1p(-std::exp2(-half)) / std::log(2.0L);
}

long double exponent_of_f(int f, long double b) {
  if (!(b > 0)) {
    throw SetError("exponent_of_f: b must be positive");
  }
  return 2.0L * alpha_of_f(f) / b;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw SetError("loglog_slope: need at least two paired points");
  }
  const auto count = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= count;
  my /= count;
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace gmstd
