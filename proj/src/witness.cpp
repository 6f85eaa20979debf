#include "gmstd/witness.hpp"

namespace gmstd {

namespace {

constexpr std::int64_t kReplicationStep = 137;

WitnessRecord finish(std::int64_t x, IntSet set, WitnessRule rule) {
  const BalanceReport report = generalized_balance(set);
  if (report.delta != x) {
    throw VerificationError("S_" + std::to_string(x) + " (" + std::string(to_string(rule)) +
                            ") has |4S| = " + std::to_string(report.size_plus) +
                            ", |2S-2S| = " + std::to_string(report.size_minus));
  }
  return WitnessRecord{x, std::move(set), report, report.delta, rule};
}

}  // namespace

std::string_view to_string(WitnessRule rule) {
  switch (rule) {
    case WitnessRule::negative:
      return "negative";
    case WitnessRule::zero:
      return "zero";
    case WitnessRule::replicated:
      return "4k+1";
    case WitnessRule::drop_137:
      return "4k:drop137";
    case WitnessRule::drop_29:
      return "4k:drop29";
    case WitnessRule::drop_33:
      return "4k-1:drop33";
    case WitnessRule::drop_34:
      return "4k-6:drop34";
    case WitnessRule::random_search:
      return "random";
  }
  return "unknown";
}

IntSet s1_set() { return IntSet{0, 1, 3, 4, 7, 26, 29, 30, 32, 33, 34}; }

IntSet replicated_s1(std::int64_t k) {
  if (k < 0) {
    throw SetError("replicated_s1: negative k");
  }
  std::vector<IntSet::value_type> shifts;
  for (std::int64_t i = 0; i <= k; ++i) {
    shifts.push_back(kReplicationStep * i);
  }
  return sumset(s1_set(), IntSet::from_elements(shifts));
}

WitnessRecord construct_sx(std::int64_t x) {
  if (x < 0) {
    const std::int64_t a = -x;
    return finish(x, set_union(IntSet::interval(1, a + 2), IntSet{2 * a + 3}),
                  WitnessRule::negative);
  }
  if (x == 0) {
    return finish(0, IntSet{0}, WitnessRule::zero);
  }
  switch (x % 4) {
    case 1:
      return finish(x, replicated_s1((x - 1) / 4), WitnessRule::replicated);
    case 0: {
      const std::int64_t k = x / 4;
      // Dropping 137 only works once three or more copies follow S_1; for
      // k = 1, 2 it gives -6 and 5. Dropping 29 gives 4k for every k >= 1.
      if (k >= 3) {
        return finish(x, set_difference(replicated_s1(k), IntSet{137}), WitnessRule::drop_137);
      }
      return finish(x, set_difference(replicated_s1(k), IntSet{29}), WitnessRule::drop_29);
    }
    case 3:
      return finish(x, set_difference(replicated_s1((x + 1) / 4), IntSet{33}),
                    WitnessRule::drop_33);
    default:
      return finish(x, set_difference(replicated_s1((x + 6) / 4), IntSet{34}),
                    WitnessRule::drop_34);
  }
}

const std::vector<SeedEntry>& seed_catalog() {
  static const std::vector<SeedEntry> catalog = [] {
    std::vector<SeedEntry> c;
    c.push_back({"seed40", "random subset of [1,40] with |4A| = 136 > 135 = |2A-2A|",
                 IntSet{6, 7, 9, 10, 13, 32, 35, 36, 38, 39, 40}, 136, 135});
    c.push_back({"seed84",
                 "seed40 + {0,49} shifted to start at 1; P_42^4 with 4A = [4,336] \\ {27}",
                 IntSet{1, 2, 4, 5, 8, 27, 30, 31, 33, 34, 35,
                        50, 51, 53, 54, 57, 76, 79, 80, 82, 83, 84},
                 332, 331});
    c.push_back({"span30", "generalized MSTD set of the minimum possible span 30",
                 IntSet{1, 2, 3, 5, 9, 24, 28, 30, 31}, 120, 119});
    c.push_back({"s1", "base of the S_x family, delta 1", s1_set(), 136, 135});
    return c;
  }();
  return catalog;
}

std::optional<SeedEntry> find_seed(std::string_view name) {
  for (const auto& entry : seed_catalog()) {
    if (entry.name == name) {
      return entry;
    }
  }
  return std::nullopt;
}

IntSet replicate_shift(const IntSet& a, std::int64_t shift) {
  if (a.empty()) {
    throw SetError("replicate_shift: empty set");
  }
  if (shift < 1) {
    throw SetError("replicate_shift: shift must be positive");
  }
  return sumset(a, IntSet{0, shift});
}

std::vector<ReplicationRow> scan_replicate(const IntSet& a, std::int64_t from, std::int64_t to) {
  if (from < 1 || from > to) {
    throw SetError("scan_replicate: need 1 <= from <= to");
  }
  std::vector<ReplicationRow> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t s = from; s <= to; ++s) {
    const BalanceReport r = generalized_balance(replicate_shift(a, s));
    rows.push_back({s, r, r.delta > 0});
  }
  return rows;
}

std::vector<WitnessRecord> random_seed_search(std::int64_t hi, double p, std::uint64_t trials,
                                              Rng& rng) {
  if (hi < 1) {
    throw SetError("random_seed_search: hi must be positive");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw SetError("random_seed_search: p must lie in (0, 1)");
  }
  std::bernoulli_distribution keep(p);
  std::vector<WitnessRecord> found;
  std::vector<IntSet::value_type> pick;
  for (std::uint64_t t = 0; t < trials; ++t) {
    pick.clear();
    for (std::int64_t x = 1; x <= hi; ++x) {
      if (keep(rng)) {
        pick.push_back(x);
      }
    }
    if (pick.empty()) {
      continue;
    }
    IntSet a = IntSet::from_elements(pick);
    const BalanceReport r = generalized_balance(a);
    if (r.delta > 0) {
      found.push_back(finish(r.delta, std::move(a), WitnessRule::random_search));
    }
  }
  return found;
}

}  // namespace gmstd
