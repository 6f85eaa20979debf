#include "gmstd/classify.hpp"

#include <algorithm>

namespace gmstd {

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::sum:
      return "sum";
    case Dominance::difference:
      return "difference";
    case Dominance::balanced:
      return "balanced";
  }
  return "balanced";
}

BalanceReport make_report(std::size_t size_plus, std::size_t size_minus) {
  BalanceReport r;
  r.size_plus = size_plus;
  r.size_minus = size_minus;
  r.delta = static_cast<std::int64_t>(size_plus) - static_cast<std::int64_t>(size_minus);
  r.dominant = r.delta > 0 ? Dominance::sum
               : r.delta < 0 ? Dominance::difference
                             : Dominance::balanced;
  return r;
}

BalanceReport compare_folds(const IntSet& a, FoldSpec plus_spec, FoldSpec minus_spec) {
  if (a.empty()) {
    throw SetError("compare_folds: empty set");
  }
  // 4A and 2A-2A share the 2A intermediate.
  if (plus_spec == kFourFold && minus_spec == kTwoMinusTwo) {
    const IntSet two = sumset(a, a);
    return make_report(sumset(two, two).size(), sumset(two, negate(two)).size());
  }
  return make_report(fold(a, plus_spec).size(), fold(a, minus_spec).size());
}

bool is_mstd(const IntSet& a) {
  return compare_folds(a, kSumset, kDifferenceSet).delta > 0;
}

bool is_pn_set(const IntSet& a, std::int64_t n) {
  if (a.empty()) {
    throw SetError("is_pn_set: empty set");
  }
  if (n < 0) {
    throw SetError("is_pn_set: negative n");
  }
  const std::int64_t lo = a.min();
  const std::int64_t hi = a.max();
  const std::int64_t w = hi - lo;
  if (!contains_interval(sumset(a, a), 2 * lo + n, 2 * hi - n)) {
    return false;
  }
  return contains_interval(sumset(a, negate(a)), -w + n, w - n);
}

bool is_pn4_from_folds(const IntSet& a, const IntSet& four_fold, const IntSet& two_minus_two,
                       std::int64_t n) {
  const std::int64_t lo = a.min();
  const std::int64_t hi = a.max();
  const std::int64_t w = hi - lo;
  return contains_interval(four_fold, 4 * lo + n, 4 * hi - n) &&
         contains_interval(two_minus_two, -2 * w + n, 2 * w - n);
}

bool is_pn4_set(const IntSet& a, std::int64_t n) {
  if (a.empty()) {
    throw SetError("is_pn4_set: empty set");
  }
  if (n < 0) {
    throw SetError("is_pn4_set: negative n");
  }
  const IntSet two = sumset(a, a);
  return is_pn4_from_folds(a, sumset(two, two), sumset(two, negate(two)), n);
}

namespace {

FringeWindow scan_window(const IntSet& fold_set, std::int64_t lo, std::int64_t hi) {
  FringeWindow w;
  w.lo = lo;
  w.hi = hi;
  for (std::int64_t x = lo; x <= hi; ++x) {
    (fold_set.contains(x) ? w.present : w.absent).push_back(x);
  }
  return w;
}

FoldFringe profile_fold(const IntSet& fold_set, FoldSpec spec, std::int64_t range_lo,
                        std::int64_t range_hi, std::int64_t n) {
  FoldFringe f{spec, range_lo, range_hi, fold_set.size(), {}, {}, false};
  // The two windows may overlap when n is large; each is clipped to the range.
  f.low = scan_window(fold_set, range_lo, std::min(range_hi, range_lo + n - 1));
  f.high = scan_window(fold_set, std::max(range_lo, range_hi - n + 1), range_hi);
  f.middle_full = contains_interval(fold_set, range_lo + n, range_hi - n);
  return f;
}

}  // namespace

FringeProfile fringe_profile(const IntSet& a, std::int64_t n) {
  if (a.empty()) {
    throw SetError("fringe_profile: empty set");
  }
  if (n < 0) {
    throw SetError("fringe_profile: negative n");
  }
  const IntSet two = sumset(a, a);
  const IntSet four = sumset(two, two);
  const IntSet diff = sumset(two, negate(two));
  const std::int64_t w = a.max() - a.min();
  FringeProfile p;
  p.n = n;
  p.sums = profile_fold(four, kFourFold, 4 * a.min(), 4 * a.max(), n);
  p.differences = profile_fold(diff, kTwoMinusTwo, -2 * w, 2 * w, n);
  p.pn4 = p.sums.middle_full && p.differences.middle_full;
  return p;
}

}  // namespace gmstd
