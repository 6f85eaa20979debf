#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmstd {

/// Raised when an operand violates a precondition (empty set, bad window,
/// malformed literal).
class SetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object fails a self-check. Signals a bug or a
/// false hypothesis, never bad user input.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The expression pA - qA: `plus` copies of A added, `minus` copies
/// subtracted.
struct FoldSpec {
  int plus = 1;
  int minus = 0;

  constexpr FoldSpec(int plus_copies, int minus_copies)
      : plus(plus_copies), minus(minus_copies) {
    if (plus < 0 || minus < 0 || plus + minus < 1) {
      throw SetError("fold needs nonnegative counts with plus+minus >= 1");
    }
  }

  friend constexpr bool operator==(const FoldSpec&, const FoldSpec&) = default;
};

inline constexpr FoldSpec kFourFold{4, 0};       // 4A
inline constexpr FoldSpec kTwoMinusTwo{2, 2};    // 2A - 2A
inline constexpr FoldSpec kSumset{2, 0};         // A + A
inline constexpr FoldSpec kDifferenceSet{1, 1};  // A - A

/// Finite set of integers stored as a bit vector anchored at its minimum.
///
/// Bit i of the vector stands for the integer min() + i. For a nonempty set
/// bit 0 and bit extent()-1 are always set, so min and max are O(1).
/// Values are immutable once built.
class IntSet {
 public:
  using value_type = std::int64_t;

  IntSet() = default;
  IntSet(std::initializer_list<value_type> elements);

  /// Elements in any order; duplicates are merged.
  static IntSet from_elements(std::span<const value_type> elements);
  /// [lo, hi]; empty when lo > hi.
  static IntSet interval(value_type lo, value_type hi);
  /// Bit i of `words` marks the integer `base + i`. Leading and trailing
  /// zero bits are trimmed.
  static IntSet from_bits(value_type base, std::vector<std::uint64_t> words);

  bool empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }
  value_type min() const;
  value_type max() const;
  /// max - min + 1, or 0 when empty.
  std::size_t extent() const noexcept { return extent_; }
  bool contains(value_type x) const noexcept;

  std::vector<value_type> elements() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(offset_ + static_cast<value_type>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  value_type offset() const noexcept { return offset_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const IntSet& a, const IntSet& b) noexcept {
    return a.size_ == b.size_ && a.offset_ == b.offset_ && a.words_ == b.words_;
  }

 private:
  void normalize();

  value_type offset_ = 0;
  std::size_t extent_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Arithmetic. Every operation here rejects empty operands with SetError.

IntSet sumset(const IntSet& a, const IntSet& b);
/// plus*A - minus*A, built by doubling: 4A = 2A + 2A, 2A-2A = 2A + (-2A).
IntSet fold(const IntSet& a, FoldSpec spec);
IntSet negate(const IntSet& a);
IntSet translate(const IntSet& a, IntSet::value_type t);
IntSet::value_type span(const IntSet& a);

// Set algebra; empty operands are fine here.

IntSet set_union(const IntSet& a, const IntSet& b);
IntSet set_difference(const IntSet& a, const IntSet& b);
/// Elements of `a` inside [lo, hi].
IntSet restrict_to(const IntSet& a, IntSet::value_type lo, IntSet::value_type hi);
bool is_subset_of_window(const IntSet& a, IntSet::value_type lo, IntSet::value_type hi);
/// Lexicographic order of the sorted element lists.
bool lexicographic_less(const IntSet& a, const IntSet& b);

/// Longest run of consecutive integers of [lo, hi] absent from `s`; the
/// window edges end a run. Throws if `s` leaves the window or lo > hi.
IntSet::value_type max_missing_run(const IntSet& s, IntSet::value_type lo,
                                   IntSet::value_type hi);

/// [lo, hi] ⊆ s. An empty interval (lo > hi) is contained in anything.
bool contains_interval(const IntSet& s, IntSet::value_type lo, IntSet::value_type hi);

/// [lo, hi] \ s.
IntSet missing_in_hull(const IntSet& s, IntSet::value_type lo, IntSet::value_type hi);

// Literal syntax: "6,7,9" or interval unions such as "1..5+8" or
// "1..5+8,10..12". Negative numbers are allowed ("-3..-1").
IntSet parse_set_literal(std::string_view text);
/// "{1, 2, 4}"
std::string to_list_string(const IntSet& s);
/// Comma-separated enumeration, accepted back by parse_set_literal.
std::string to_literal(const IntSet& s);
/// "[4,336] \ {27}" when the set is its hull minus a few points, else an
/// interval-union literal such as "1..3+5+7..9".
std::string to_compact_string(const IntSet& s);

}  // namespace gmstd
