#pragma once

// Brute-force reference implementations. Nothing here touches the bit
// vector code; every result comes from explicit tuple enumeration over
// std::set.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<std::int64_t>;

inline Set sums(const Set& a, const Set& b) {
  Set out;
  for (const auto x : a) {
    for (const auto y : b) {
      out.insert(x + y);
    }
  }
  return out;
}

/// Every value of x_1 + ... + x_p - y_1 - ... - y_q, by walking all
/// (p+q)-tuples of A directly.
inline Set naive_fold(const std::vector<std::int64_t>& a, int plus, int minus) {
  Set out;
  const int slots = plus + minus;
  std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
  while (true) {
    std::int64_t v = 0;
    for (int s = 0; s < slots; ++s) {
      const auto x = a[idx[static_cast<std::size_t>(s)]];
      v += s < plus ? x : -x;
    }
    out.insert(v);
    int s = 0;
    while (s < slots && ++idx[static_cast<std::size_t>(s)] == a.size()) {
      idx[static_cast<std::size_t>(s)] = 0;
      ++s;
    }
    if (s == slots) {
      break;
    }
  }
  return out;
}

struct Balance {
  std::size_t four = 0;
  std::size_t diff = 0;
  std::int64_t delta() const {
    return static_cast<std::int64_t>(four) - static_cast<std::int64_t>(diff);
  }
};

/// |4A| and |2A-2A| from explicit pairwise sums.
inline Balance balance(const Set& a) {
  const Set two = sums(a, a);
  Set neg_two;
  for (const auto x : two) {
    neg_two.insert(-x);
  }
  return {sums(two, two).size(), sums(two, neg_two).size()};
}

inline Set interval(std::int64_t lo, std::int64_t hi) {
  Set s;
  for (auto x = lo; x <= hi; ++x) {
    s.insert(x);
  }
  return s;
}

/// Subsets of [1, m] (as bitmasks) with no missing run of length >= g.
inline std::uint64_t count_gap_bounded(int m, int g) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int run = 0;
    int worst = 0;
    for (int i = 0; i < m; ++i) {
      run = ((mask >> i) & 1U) != 0 ? 0 : run + 1;
      worst = run > worst ? run : worst;
    }
    count += worst < g ? 1 : 0;
  }
  return count;
}

inline std::vector<std::int64_t> random_subset(std::mt19937_64& rng, std::int64_t lo,
                                               std::int64_t hi, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<std::int64_t> out;
  while (out.empty()) {
    for (auto x = lo; x <= hi; ++x) {
      if (keep(rng)) {
        out.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace oracle
