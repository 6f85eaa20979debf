#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmstd/classify.hpp"
#include "gmstd/families.hpp"
#include "gmstd/int_set.hpp"

namespace gmstd {

/// Which branch of the S_x construction produced a witness.
enum class WitnessRule {
  negative,            // [1, |x|+2] ∪ {2|x|+3}
  zero,                // {0}
  replicated,          // S_1 + {0, 137, ..., 137k}, x = 4k+1
  drop_137,            // S_{4k+1} \ {137}, x = 4k with k >= 3
  drop_29,             // S_{4k+1} \ {29}, x = 4k with k in {1, 2}
  drop_33,             // S_{4k+1} \ {33}, x = 4k-1
  drop_34,             // S_{4k+1} \ {34}, x = 4k-6
  random_search,
};

std::string_view to_string(WitnessRule rule);

struct WitnessRecord {
  std::int64_t x = 0;
  IntSet set;
  BalanceReport balance;
  std::int64_t verified_delta = 0;
  WitnessRule rule = WitnessRule::zero;
};

/// Base witness with |4S| = 136 and |2S-2S| = 135.
IntSet s1_set();
/// S_1 + {0, 137, 274, ..., 137k}.
IntSet replicated_s1(std::int64_t k);

/// A set whose |4S| - |2S-2S| equals x. The folds are recomputed before
/// returning; a mismatch throws VerificationError with both sizes.
WitnessRecord construct_sx(std::int64_t x);

struct SeedEntry {
  std::string name;
  std::string description;
  IntSet set;
  std::size_t size_plus = 0;   // |4A|
  std::size_t size_minus = 0;  // |2A - 2A|
};

/// seed40, seed84, span30 and s1.
const std::vector<SeedEntry>& seed_catalog();
std::optional<SeedEntry> find_seed(std::string_view name);

/// A + {0, a}.
IntSet replicate_shift(const IntSet& a, std::int64_t shift);

struct ReplicationRow {
  std::int64_t shift = 0;
  BalanceReport balance;
  bool preserved = false;  // delta > 0
};

std::vector<ReplicationRow> scan_replicate(const IntSet& a, std::int64_t from, std::int64_t to);

/// Draws `trials` subsets of [1, hi] (each element kept with probability p)
/// and returns the ones with |4A| > |2A-2A|, each re-verified.
std::vector<WitnessRecord> random_seed_search(std::int64_t hi, double p, std::uint64_t trials,
                                              Rng& rng);

}  // namespace gmstd
