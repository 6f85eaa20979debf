#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gmstd/classify.hpp"
#include "gmstd/int_set.hpp"

namespace gmstd {

using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

/// Which piece of a construction was rejected.
enum class Component { fringe, params, left, right, o1, o2, middle };

std::string_view to_string(Component c);

class ConstructionError : public SetError {
 public:
  ConstructionError(Component component, const std::string& what)
      : SetError(std::string(to_string(component)) + ": " + what), component_(component) {}

  Component component() const noexcept { return component_; }

 private:
  Component component_;
};

/// A = L ∪ R with L ⊆ [1, n] holding 1 and R ⊆ [n+1, 2n] holding 2n.
struct FringePair {
  IntSet left;
  IntSet right;
  std::int64_t n = 0;

  /// Splits A ⊆ [1, 2n] at n. Requires 1, 2n ∈ A and that A is P_n^4.
  static FringePair split(const IntSet& a, std::int64_t n);

  IntSet combined() const { return set_union(left, right); }
};

/// Window lengths for A' = L ∪ F1 ∪ O1 ∪ M ∪ O2 ∪ F2 ∪ R'. f = 0 gives the
/// unrelaxed layout with full O blocks.
struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t f = 0;

  std::int64_t width() const { return 2 * n + 2 * f + 2 * k + m; }
  /// Shift applied to R.
  std::int64_t inserted_width() const { return 2 * f + 2 * k + m; }

  std::int64_t o1_lo() const { return n + f + 1; }
  std::int64_t o1_hi() const { return n + f + k; }
  std::int64_t middle_lo() const { return n + f + k + 1; }
  std::int64_t middle_hi() const { return n + f + k + m; }
  std::int64_t o2_lo() const { return n + f + k + m + 1; }
  std::int64_t o2_hi() const { return n + f + 2 * k + m; }
};

/// Constructed set plus the fold sizes that certified it.
struct Construction {
  IntSet set;
  BalanceReport balance;
  BalanceReport base_balance;
  bool pn4 = false;
};

/// A' = L ∪ M ∪ (R + m) with M ⊆ [n+1, n+m]. No P_n^4 guarantee; the
/// returned `pn4` flag reports whether A' happens to be one.
Construction insert_middle(const FringePair& fringe, const IntSet& middle, std::int64_t m);

/// A' = L ∪ [n+1, n+k] ∪ M ∪ [n+k+m+1, n+2k+m] ∪ (R + 2k + m).
///
/// Requires k >= n and M ⊆ [n+k+1, n+k+m] with no missing run of length
/// 3k-2 or more. The result is re-checked: it must be P_n^4 and keep the
/// base set's |4A| - |2A-2A|, otherwise VerificationError is thrown.
Construction construct_full_o(const FringePair& fringe, std::int64_t k, std::int64_t m,
                              const IntSet& middle);

/// Relaxed layout with full F blocks of length f around validated O blocks
/// and a middle without missing runs of length k. Same post-checks as
/// construct_full_o.
Construction construct_relaxed(const FringePair& fringe, const FamilyParams& params,
                               const IntSet& o1, const IntSet& o2, const IntSet& middle);

/// O ⊆ [lo, hi] holds [lo, lo+f-1] and hi, has no missing run of length f,
/// and O + O covers [2lo, 2hi].
bool validate_O(const IntSet& o, std::int64_t lo, std::int64_t hi, std::int64_t f);

/// Uniform nonempty subset of every consecutive block of [lo, hi]. The
/// block length must divide the window length.
IntSet sample_blocked_subset(std::int64_t lo, std::int64_t hi, std::int64_t block, Rng& rng);

/// Random O block for the relaxed layout: [lo, lo+f-1] and hi forced, the
/// interior [lo+f, hi-1] block-sampled with blocks of f/2. Resamples until
/// validate_O passes (at most `attempts` draws).
IntSet sample_o_block(std::int64_t lo, std::int64_t hi, std::int64_t f, Rng& rng,
                      int attempts = 1000);

/// Number of subsets of [1, m] with no missing run of length >= g.
BigInt count_gap_bounded_subsets(std::int64_t m, std::int64_t g);

/// (2^{g/2} - 1)^{m/(g/2)}, defined when g is even and g/2 divides m.
std::optional<BigInt> block_bound(std::int64_t m, std::int64_t g);

}  // namespace gmstd
