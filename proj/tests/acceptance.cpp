// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmstd/classify.hpp"
#include "gmstd/density.hpp"
#include "gmstd/families.hpp"
#include "gmstd/int_set.hpp"
#include "gmstd/prover.hpp"
#include "gmstd/witness.hpp"
#include "oracle.hpp"

using gmstd::IntSet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_ms;  // 0: no runtime limit
  std::function<Outcome()> run;
};

oracle::Set as_std(const IntSet& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

const IntSet kSeed40{6, 7, 9, 10, 13, 32, 35, 36, 38, 39, 40};
const IntSet kSeed84{1, 2, 4, 5, 8, 27, 30, 31, 33, 34, 35, 50, 51, 53, 54, 57, 76, 79, 80, 82, 83, 84};

Outcome seed_exactness() {
  const auto r = gmstd::generalized_balance(kSeed40);
  const auto b = oracle::balance(as_std(kSeed40));
  const bool ok = r.size_plus == 136 && r.size_minus == 135 && b.four == 136 && b.diff == 135;
  return {ok, "|4A| = " + std::to_string(r.size_plus) + ", |2A-2A| = " + std::to_string(r.size_minus) +
                  " (enumeration " + std::to_string(b.four) + " / " + std::to_string(b.diff) + ")"};
}

Outcome n42_exactness() {
  const IntSet four = gmstd::fold(kSeed84, gmstd::kFourFold);
  const IntSet diff = gmstd::fold(kSeed84, gmstd::kTwoMinusTwo);
  const IntSet want_four = gmstd::set_difference(IntSet::interval(4, 336), IntSet{27});
  const IntSet want_diff = gmstd::set_difference(IntSet::interval(-166, 166), IntSet{-141, 141});
  const bool pn4 = gmstd::is_pn4_set(kSeed84, 42);
  const bool ok = four == want_four && diff == want_diff && pn4;
  return {ok, "4A = " + gmstd::to_compact_string(four) + ", 2A-2A = " + gmstd::to_compact_string(diff) +
                  ", P_42^4 " + (pn4 ? "yes" : "no")};
}

Outcome sx_sweep() {
  int bad = 0;
  int enumerated = 0;
  std::string first_bad;
  for (std::int64_t x = -100; x <= 100; ++x) {
    const auto w = gmstd::construct_sx(x);
    bool ok = w.verified_delta == x && gmstd::generalized_balance(w.set).delta == x;
    // Tuple enumeration is affordable for the smaller witnesses.
    if (std::abs(x) <= 16) {
      ok = ok && oracle::balance(as_std(w.set)).delta() == x;
      ++enumerated;
    }
    if (!ok) {
      if (bad++ == 0) {
        first_bad = std::to_string(x);
      }
    }
  }
  return {bad == 0, "201 targets, " + std::to_string(bad) + " mismatches" +
                        (bad != 0 ? " (first x = " + first_bad + ")" : "") + ", " +
                        std::to_string(enumerated) + " also checked by enumeration"};
}

Outcome full_o_suite() {
  const auto fringe = gmstd::FringePair::split(kSeed84, 42);
  const auto base = gmstd::generalized_balance(kSeed84);
  gmstd::Rng rng(22);
  std::uniform_int_distribution<std::int64_t> k_pick(42, 120);
  std::uniform_int_distribution<std::int64_t> blocks_pick(1, 12);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t k = k_pick(rng);
    std::uniform_int_distribution<std::int64_t> block_pick(1, (3 * k - 2) / 2);
    const std::int64_t block = block_pick(rng);
    const std::int64_t m = block * blocks_pick(rng);
    const IntSet middle = gmstd::sample_blocked_subset(42 + k + 1, 42 + k + m, block, rng);
    const auto c = gmstd::construct_full_o(fringe, k, m, middle);
    const auto grow = static_cast<std::size_t>(4 * (2 * k + m));
    const bool ok = gmstd::is_pn4_set(c.set, 42) && c.balance.delta == 1 &&
                    c.balance.size_plus == base.size_plus + grow &&
                    c.balance.size_minus == base.size_minus + grow;
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "200 constructions, " + std::to_string(failures) +
                             " failing P_42^4, delta = +1 or the 4(2k+m) growth"};
}

Outcome relaxed_suite() {
  const auto fringe = gmstd::FringePair::split(kSeed84, 42);
  const auto base = gmstd::generalized_balance(kSeed84);
  gmstd::Rng rng(16);
  // The O interior [lo+16, hi-1] is sampled in blocks of 8, so k = 17 + 8t.
  std::uniform_int_distribution<std::int64_t> t_pick(4, 12);
  std::uniform_int_distribution<std::int64_t> blocks_pick(1, 12);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t k = 17 + 8 * t_pick(rng);
    const std::int64_t m = 8 * blocks_pick(rng);
    const gmstd::FamilyParams p{42, k, m, 16};
    const IntSet o1 = gmstd::sample_o_block(p.o1_lo(), p.o1_hi(), p.f, rng);
    const IntSet o2 = gmstd::sample_o_block(p.o2_lo(), p.o2_hi(), p.f, rng);
    const IntSet middle = gmstd::sample_blocked_subset(p.middle_lo(), p.middle_hi(), 8, rng);
    const bool valid = gmstd::validate_O(o1, p.o1_lo(), p.o1_hi(), p.f) &&
                       gmstd::validate_O(o2, p.o2_lo(), p.o2_hi(), p.f) &&
                       gmstd::max_missing_run(middle, p.middle_lo(), p.middle_hi()) < k;
    const auto c = gmstd::construct_relaxed(fringe, p, o1, o2, middle);
    const bool ok = valid && gmstd::is_pn4_set(c.set, 42) && c.balance.delta == base.delta;
    failures += ok ? 0 : 1;
  }
  return {failures == 0,
          "100 constructions (f = 16), " + std::to_string(failures) + " failing P_42^4 or delta"};
}

Outcome prover_desk() {
  gmstd::ProverOptions one;
  one.span_bound = 24;
  gmstd::ProverOptions eight = one;
  eight.workers = 8;
  const auto a = gmstd::prove_min_span(one);
  const auto b = gmstd::prove_min_span(eight);
  const auto span30 = gmstd::verify_witness(IntSet{1, 2, 3, 5, 9, 24, 28, 30, 31});
  const bool ok = a.status == gmstd::ProofStatus::no_witness &&
                  b.status == gmstd::ProofStatus::no_witness && a.sets_examined == b.sets_examined &&
                  a.raw_sets == (std::uint64_t{1} << 24) && span30.delta > 0;
  return {ok, "span <= 24: " + std::to_string(a.sets_examined) + " canonical sets, no witness (1 and 8 " +
                  "workers agree); span-30 set: " + std::to_string(span30.size_plus) + " / " +
                  std::to_string(span30.size_minus)};
}

Outcome replication_identity() {
  const IntSet r = gmstd::translate(gmstd::replicate_shift(kSeed40, 49), -5);
  return {r == kSeed84, "(A + {0,49}) - 5 = " + gmstd::to_list_string(r)};
}

Outcome mc_density() {
  const std::uint64_t seed = 20240611;
  const auto e = gmstd::mc_density(100, 10'000'000, gmstd::Predicate::mstd, 0.5, seed);
  const bool ok = e.estimate >= 3.0e-4 && e.estimate <= 6.0e-4;
  return {ok, "estimate " + fmt("%.4e", e.estimate) + " +/- " + fmt("%.1e", e.ci95) + " (" +
                  std::to_string(e.hits) + " hits, seed " + std::to_string(seed) + "), band [3.0e-4, 6.0e-4]"};
}

Outcome exponents() {
  const long double got = gmstd::exponent_of_f(16, 1.5L);
  const long double want = std::log2(256.0L / 255.0L) / 6.0L;
  const long double rel = std::fabs(got - want) / want;
  bool decreasing = true;
  bool small = true;
  long double previous = gmstd::exponent_of_f(2, 0.5L);
  for (int f = 4; f <= 256; f += 2) {
    const long double e = gmstd::exponent_of_f(f, 0.5L);
    decreasing = decreasing && e < previous;
    small = small && (f < 64 || e < 1e-3L);
    previous = e;
  }
  const bool ok = rel < 5e-13L && decreasing && small;
  return {ok, "exponent(16, 3/2) = " + fmt("%.15g", static_cast<double>(got)) + " (rel. err " +
                  fmt("%.1e", static_cast<double>(rel)) + "); f = 2..256 decreasing " +
                  (decreasing ? "yes" : "no") + "; exponent(64, 1/2) = " +
                  fmt("%.3e", static_cast<double>(gmstd::exponent_of_f(64, 0.5L)))};
}

Outcome counting_oracle() {
  int mismatches = 0;
  int bound_checks = 0;
  int bound_failures = 0;
  for (int m = 1; m <= 18; ++m) {
    // Longest missing run of every subset, then a cumulative tally per g.
    std::vector<std::uint64_t> by_run(static_cast<std::size_t>(m) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      int run = 0;
      int worst = 0;
      for (int i = 0; i < m; ++i) {
        run = ((mask >> i) & 1U) != 0 ? 0 : run + 1;
        worst = std::max(worst, run);
      }
      ++by_run[static_cast<std::size_t>(worst)];
    }
    std::uint64_t below = 0;
    for (int g = 1; g <= m; ++g) {
      below += by_run[static_cast<std::size_t>(g - 1)];
      const gmstd::BigInt count = gmstd::count_gap_bounded_subsets(m, g);
      mismatches += count == below ? 0 : 1;
      if (const auto bound = gmstd::block_bound(m, g)) {
        ++bound_checks;
        bound_failures += count >= *bound ? 0 : 1;
      }
    }
  }
  return {mismatches == 0 && bound_failures == 0,
          "171 (m, g) pairs, " + std::to_string(mismatches) + " mismatches; block bound checked at " +
              std::to_string(bound_checks) + " pairs, " + std::to_string(bound_failures) + " violations"};
}

Outcome bound_slope() {
  const std::vector<double> rs{200, 400, 800, 1600};
  std::vector<double> ys;
  for (const double r : rs) {
    ys.push_back(static_cast<double>(gmstd::lower_bound_sum({2.0L, 1.5L, 1.5L, static_cast<std::int64_t>(r), 1})));
  }
  const double slope = gmstd::loglog_slope(rs, ys);
  const double target = -4.0 / 3.0;
  const bool ok = std::fabs(slope - target) <= 0.15;
  return {ok, "slope " + fmt("%.4f", slope) + " (n0 = 1), target -1.3333 +/- 0.15"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criterion numbers");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "seed-set exactness", 10, seed_exactness},
      {2, "n=42 set exactness", 10, n42_exactness},
      {3, "S_x sweep over [-100, 100]", 60'000, sx_sweep},
      {4, "interval-O construction suite", 120'000, full_o_suite},
      {5, "relaxed construction suite", 120'000, relaxed_suite},
      {6, "exhaustive span <= 24", 30 * 60'000, prover_desk},
      {7, "replication identity", 0, replication_identity},
      {8, "Monte Carlo MSTD density", 10 * 60'000, mc_density},
      {9, "exponent formulas", 0, exponents},
      {10, "counting oracle", 60'000, counting_oracle},
      {11, "lower-bound log-log slope", 0, bound_slope},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) {
      continue;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.1f ms", ms);
    if (c.limit_ms > 0) {
      timing += fmt(", limit %.0f ms", c.limit_ms);
      if (ms >= c.limit_ms) {
        o.pass = false;
        o.detail += "; over time limit";
      }
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, only.empty() ? criteria.size() : only.size());
  return failed == 0 ? 0 : 1;
}
