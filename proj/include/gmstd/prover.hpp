#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "gmstd/classify.hpp"
#include "gmstd/int_set.hpp"

namespace gmstd {

/// Largest span the exhaustive search handles; 4A then fits in 128 bits.
inline constexpr int kMaxProverSpan = 31;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Translate to min 1, then take the lexicographically smaller of the set
/// and its mirror image inside the same hull.
IntSet canonical_form(const IntSet& a);

/// Full fold computation through the general IntSet path.
BalanceReport verify_witness(const IntSet& a);

namespace kernel {

/// Bit e-1 set for every element e of a set with min 1; bit 0 must be set.
using SpanMask = std::uint32_t;

struct FoldCounts {
  int four = 0;  // |4A|
  int diff = 0;  // |2A - 2A|
};

FoldCounts fold_counts(SpanMask mask);

/// Mirror image of a mask inside [0, bit_width - 1].
SpanMask reflect(SpanMask mask);

/// Same rule as canonical_form, on masks.
bool is_canonical(SpanMask mask);

SpanMask mask_of(const IntSet& a);
IntSet set_of(SpanMask mask);

}  // namespace kernel

/// Persistent state of an interrupted search. `cursor` counts enumeration
/// indices already covered; `witnesses` holds canonical witnesses only.
struct SearchCheckpoint {
  static constexpr int kFormatVersion = 1;

  int format_version = kFormatVersion;
  int span_bound = 0;
  std::uint64_t chunk_size = 0;
  std::uint64_t cursor = 0;
  std::uint64_t sets_examined = 0;
  std::vector<IntSet> witnesses;
};

void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp);
/// Parses and validates the file; every stored witness is re-verified.
SearchCheckpoint load_checkpoint(const std::filesystem::path& path);

struct ProverOptions {
  int span_bound = 0;
  unsigned workers = 1;
  std::filesystem::path checkpoint;  // empty: no checkpoint file
  bool resume = false;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 20;
  /// Stop (with a saved checkpoint) after this many rounds; 0 = no limit.
  std::uint64_t max_rounds = 0;
  const std::atomic<bool>* stop = nullptr;
};

enum class ProofStatus { no_witness, witnesses_found, interrupted };

struct ProofResult {
  ProofStatus status = ProofStatus::no_witness;
  int span_bound = 0;
  std::uint64_t cursor = 0;
  std::uint64_t cursor_end = 0;     // 2^span_bound
  std::uint64_t sets_examined = 0;  // canonical sets evaluated
  std::uint64_t raw_sets = 0;       // enumeration indices covered
  /// Every subset of [1, span_bound+1] containing 1 with |4A| > |2A-2A|,
  /// mirror images included, sorted.
  std::vector<IntSet> witnesses;
};

/// Exhaustive search over subsets of [1, span_bound+1] containing 1, i.e.
/// every set of span <= span_bound up to translation. Deterministic for any
/// worker count.
ProofResult prove_min_span(const ProverOptions& options);

}  // namespace gmstd
