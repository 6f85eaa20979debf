#include "gmstd/int_set.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace gmstd {

namespace {

using value_type = IntSet::value_type;

// Sets with more bits than this are outside the supported range.
constexpr std::size_t kMaxExtent = std::size_t{1} << 34;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void require_nonempty(const IntSet& a, const char* op) {
  if (a.empty()) {
    throw SetError(std::string(op) + ": empty set");
  }
}

void check_extent(std::size_t bits) {
  if (bits > kMaxExtent) {
    throw SetError("set extent exceeds supported range");
  }
}

// dst |= src << shift, where dst has room for every shifted bit.
void or_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned r = shift % 64;
  if (r == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + q] |= src[i];
    }
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::uint64_t w = src[i];
    dst[i + q] |= w << r;
    if (i + q + 1 < dst.size()) {
      dst[i + q + 1] |= w >> (64 - r);
    }
  }
}

}  // namespace

IntSet::IntSet(std::initializer_list<value_type> elements)
    : IntSet(from_elements(std::span<const value_type>(elements.begin(), elements.size()))) {}

IntSet IntSet::from_elements(std::span<const value_type> elements) {
  IntSet out;
  if (elements.empty()) {
    return out;
  }
  const auto [lo_it, hi_it] = std::minmax_element(elements.begin(), elements.end());
  const value_type lo = *lo_it;
  const value_type hi = *hi_it;
  const auto bits = static_cast<std::size_t>(hi - lo) + 1;
  check_extent(bits);
  std::vector<std::uint64_t> words(words_for(bits), 0);
  for (const value_type x : elements) {
    const auto i = static_cast<std::size_t>(x - lo);
    words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return from_bits(lo, std::move(words));
}

IntSet IntSet::interval(value_type lo, value_type hi) {
  if (lo > hi) {
    return {};
  }
  const auto bits = static_cast<std::size_t>(hi - lo) + 1;
  check_extent(bits);
  std::vector<std::uint64_t> words(words_for(bits), ~std::uint64_t{0});
  if (bits % 64 != 0) {
    words.back() = (std::uint64_t{1} << (bits % 64)) - 1;
  }
  return from_bits(lo, std::move(words));
}

IntSet IntSet::from_bits(value_type base, std::vector<std::uint64_t> words) {
  IntSet out;
  out.offset_ = base;
  out.words_ = std::move(words);
  out.normalize();
  return out;
}

void IntSet::normalize() {
  while (!words_.empty() && words_.back() == 0) {
    words_.pop_back();
  }
  std::size_t first = 0;
  while (first < words_.size() && words_[first] == 0) {
    ++first;
  }
  if (first == words_.size()) {
    words_.clear();
    offset_ = 0;
    extent_ = 0;
    size_ = 0;
    return;
  }
  const std::size_t low_bit = first * 64 + static_cast<std::size_t>(std::countr_zero(words_[first]));
  if (low_bit != 0) {
    const std::size_t q = low_bit / 64;
    const unsigned r = low_bit % 64;
    std::vector<std::uint64_t> shifted(words_.size() - q, 0);
    for (std::size_t i = q; i < words_.size(); ++i) {
      shifted[i - q] |= r == 0 ? words_[i] : words_[i] >> r;
      if (r != 0 && i + 1 < words_.size()) {
        shifted[i - q] |= words_[i + 1] << (64 - r);
      }
    }
    words_ = std::move(shifted);
    while (!words_.empty() && words_.back() == 0) {
      words_.pop_back();
    }
    offset_ += static_cast<value_type>(low_bit);
  }
  extent_ = (words_.size() - 1) * 64 + static_cast<std::size_t>(std::bit_width(words_.back()));
  size_ = 0;
  for (const std::uint64_t w : words_) {
    size_ += static_cast<std::size_t>(std::popcount(w));
  }
}

value_type IntSet::min() const {
  require_nonempty(*this, "min");
  return offset_;
}

value_type IntSet::max() const {
  require_nonempty(*this, "max");
  return offset_ + static_cast<value_type>(extent_) - 1;
}

bool IntSet::contains(value_type x) const noexcept {
  if (empty() || x < offset_) {
    return false;
  }
  const auto i = static_cast<std::size_t>(x - offset_);
  if (i >= extent_) {
    return false;
  }
  return (words_[i / 64] >> (i % 64)) & 1U;
}

std::vector<value_type> IntSet::elements() const {
  std::vector<value_type> out;
  out.reserve(size_);
  for_each([&](value_type x) { out.push_back(x); });
  return out;
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "sumset");
  require_nonempty(b, "sumset");
  // Shift the wider operand once per element of the sparser one.
  const IntSet& shifted = a.size() >= b.size() ? a : b;
  const IntSet& driver = a.size() >= b.size() ? b : a;
  const std::size_t bits = a.extent() + b.extent() - 1;
  check_extent(bits);
  std::vector<std::uint64_t> out(words_for(bits), 0);
  const value_type base = driver.min();
  driver.for_each([&](value_type x) {
    or_shifted(out, shifted.words(), static_cast<std::size_t>(x - base));
  });
  return IntSet::from_bits(a.min() + b.min(), std::move(out));
}

IntSet negate(const IntSet& a) {
  require_nonempty(a, "negate");
  const std::size_t bits = a.extent();
  std::vector<std::uint64_t> out(words_for(bits), 0);
  const value_type top = a.max();
  a.for_each([&](value_type x) {
    const auto i = static_cast<std::size_t>(top - x);
    out[i / 64] |= std::uint64_t{1} << (i % 64);
  });
  return IntSet::from_bits(-top, std::move(out));
}

IntSet translate(const IntSet& a, value_type t) {
  require_nonempty(a, "translate");
  return IntSet::from_bits(a.min() + t, std::vector<std::uint64_t>(a.words().begin(), a.words().end()));
}

value_type span(const IntSet& a) {
  require_nonempty(a, "span");
  return a.max() - a.min();
}

namespace {

IntSet multiple(const IntSet& a, int copies) {
  IntSet acc;
  IntSet base = a;
  bool have = false;
  while (copies > 0) {
    if ((copies & 1) != 0) {
      acc = have ? sumset(acc, base) : base;
      have = true;
    }
    copies >>= 1;
    if (copies > 0) {
      base = sumset(base, base);
    }
  }
  return acc;
}

}  // namespace

IntSet fold(const IntSet& a, FoldSpec spec) {
  require_nonempty(a, "fold");
  if (spec.minus == 0) {
    return multiple(a, spec.plus);
  }
  if (spec.plus == 0) {
    return negate(multiple(a, spec.minus));
  }
  const IntSet plus = multiple(a, spec.plus);
  const IntSet minus = spec.minus == spec.plus ? plus : multiple(a, spec.minus);
  return sumset(plus, negate(minus));
}

IntSet set_union(const IntSet& a, const IntSet& b) {
  if (a.empty()) {
    return b;
  }
  if (b.empty()) {
    return a;
  }
  const value_type lo = std::min(a.min(), b.min());
  const value_type hi = std::max(a.max(), b.max());
  const auto bits = static_cast<std::size_t>(hi - lo) + 1;
  check_extent(bits);
  std::vector<std::uint64_t> out(words_for(bits), 0);
  or_shifted(out, a.words(), static_cast<std::size_t>(a.min() - lo));
  or_shifted(out, b.words(), static_cast<std::size_t>(b.min() - lo));
  return IntSet::from_bits(lo, std::move(out));
}

IntSet set_difference(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) {
    return a;
  }
  std::vector<value_type> kept;
  kept.reserve(a.size());
  a.for_each([&](value_type x) {
    if (!b.contains(x)) {
      kept.push_back(x);
    }
  });
  return IntSet::from_elements(kept);
}

IntSet restrict_to(const IntSet& a, value_type lo, value_type hi) {
  std::vector<value_type> kept;
  a.for_each([&](value_type x) {
    if (x >= lo && x <= hi) {
      kept.push_back(x);
    }
  });
  return IntSet::from_elements(kept);
}

bool is_subset_of_window(const IntSet& a, value_type lo, value_type hi) {
  return a.empty() || (a.min() >= lo && a.max() <= hi);
}

bool lexicographic_less(const IntSet& a, const IntSet& b) {
  const auto x = a.elements();
  const auto y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

value_type max_missing_run(const IntSet& s, value_type lo, value_type hi) {
  if (lo > hi) {
    throw SetError("max_missing_run: empty window");
  }
  if (!is_subset_of_window(s, lo, hi)) {
    throw SetError("max_missing_run: set leaves the window");
  }
  value_type longest = 0;
  value_type prev = lo - 1;
  s.for_each([&](value_type x) {
    longest = std::max(longest, x - prev - 1);
    prev = x;
  });
  return std::max(longest, hi - prev);
}

bool contains_interval(const IntSet& s, value_type lo, value_type hi) {
  if (lo > hi) {
    return true;
  }
  if (s.empty() || lo < s.min() || hi > s.max()) {
    return false;
  }
  auto i = static_cast<std::size_t>(lo - s.offset());
  const auto end = static_cast<std::size_t>(hi - s.offset()) + 1;
  const auto words = s.words();
  while (i < end) {
    const std::size_t w = i / 64;
    const unsigned b = i % 64;
    const std::size_t take = std::min<std::size_t>(64 - b, end - i);
    const std::uint64_t mask =
        take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1) << b;
    if ((words[w] & mask) != mask) {
      return false;
    }
    i += take;
  }
  return true;
}

IntSet missing_in_hull(const IntSet& s, value_type lo, value_type hi) {
  std::vector<value_type> gone;
  for (value_type x = lo; x <= hi; ++x) {
    if (!s.contains(x)) {
      gone.push_back(x);
    }
  }
  return IntSet::from_elements(gone);
}

}  // namespace gmstd
