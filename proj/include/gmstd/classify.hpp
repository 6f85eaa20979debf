#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gmstd/int_set.hpp"

namespace gmstd {

enum class Dominance { sum, difference, balanced };

std::string_view to_string(Dominance d);

/// Sizes of two folds of the same set. `dominant` follows the sign of delta.
struct BalanceReport {
  std::size_t size_plus = 0;
  std::size_t size_minus = 0;
  std::int64_t delta = 0;
  Dominance dominant = Dominance::balanced;

  friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

BalanceReport make_report(std::size_t size_plus, std::size_t size_minus);

BalanceReport compare_folds(const IntSet& a, FoldSpec plus_spec, FoldSpec minus_spec);

/// |4A| against |2A - 2A|.
inline BalanceReport generalized_balance(const IntSet& a) {
  return compare_folds(a, kFourFold, kTwoMinusTwo);
}

/// |A + A| > |A - A|.
bool is_mstd(const IntSet& a);

/// A + A ⊇ [2a+n, 2b-n] and A - A ⊇ [-(b-a)+n, (b-a)-n] with a = min A,
/// b = max A. Empty target intervals count as contained.
bool is_pn_set(const IntSet& a, std::int64_t n);

/// 4A ⊇ [4a+n, 4b-n] and 2A-2A ⊇ [-2(b-a)+n, 2(b-a)-n].
bool is_pn4_set(const IntSet& a, std::int64_t n);

/// Same test on folds the caller already has.
bool is_pn4_from_folds(const IntSet& a, const IntSet& four_fold, const IntSet& two_minus_two,
                       std::int64_t n);

struct FringeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> present;
  std::vector<std::int64_t> absent;
};

/// The first and last n possible values of one fold.
struct FoldFringe {
  FoldSpec spec{4, 0};
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  std::size_t size = 0;
  FringeWindow low;
  FringeWindow high;
  bool middle_full = false;
};

struct FringeProfile {
  std::int64_t n = 0;
  FoldFringe sums;         // 4A
  FoldFringe differences;  // 2A - 2A
  bool pn4 = false;
};

FringeProfile fringe_profile(const IntSet& a, std::int64_t n);

}  // namespace gmstd
