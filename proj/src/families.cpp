#include "gmstd/families.hpp"

#include <vector>

namespace gmstd {

std::string_view to_string(Component c) {
  switch (c) {
    case Component::fringe:
      return "fringe";
    case Component::params:
      return "params";
    case Component::left:
      return "L";
    case Component::right:
      return "R";
    case Component::o1:
      return "O1";
    case Component::o2:
      return "O2";
    case Component::middle:
      return "M";
  }
  return "unknown";
}

FringePair FringePair::split(const IntSet& a, std::int64_t n) {
  if (n < 1) {
    throw ConstructionError(Component::params, "n must be positive");
  }
  if (a.empty() || !is_subset_of_window(a, 1, 2 * n)) {
    throw ConstructionError(Component::fringe, "base set must lie in [1, 2n]");
  }
  if (!a.contains(1)) {
    throw ConstructionError(Component::left, "1 must belong to L");
  }
  if (!a.contains(2 * n)) {
    throw ConstructionError(Component::right, "2n must belong to R");
  }
  if (!is_pn4_set(a, n)) {
    throw ConstructionError(Component::fringe, "base set is not P_n^4");
  }
  return FringePair{restrict_to(a, 1, n), restrict_to(a, n + 1, 2 * n), n};
}

namespace {

void check_middle(const IntSet& middle, std::int64_t lo, std::int64_t hi) {
  if (!is_subset_of_window(middle, lo, hi)) {
    throw ConstructionError(Component::middle, "M leaves its window [" + std::to_string(lo) +
                                                   ", " + std::to_string(hi) + "]");
  }
}

Construction certify(const FringePair& fringe, IntSet built) {
  const IntSet two = sumset(built, built);
  const IntSet four = sumset(two, two);
  const IntSet diff = sumset(two, negate(two));
  Construction c;
  c.pn4 = is_pn4_from_folds(built, four, diff, fringe.n);
  c.balance = make_report(four.size(), diff.size());
  c.base_balance = generalized_balance(fringe.combined());
  c.set = std::move(built);
  return c;
}

void require_certified(const Construction& c, const char* name) {
  if (!c.pn4) {
    throw VerificationError(std::string(name) + ": constructed set is not P_n^4");
  }
  if (c.balance.delta != c.base_balance.delta) {
    throw VerificationError(std::string(name) + ": fold delta " + std::to_string(c.balance.delta) +
                            " differs from base delta " + std::to_string(c.base_balance.delta));
  }
}

}  // namespace

Construction insert_middle(const FringePair& fringe, const IntSet& middle, std::int64_t m) {
  if (m < 1) {
    throw ConstructionError(Component::params, "middle width m must be positive");
  }
  check_middle(middle, fringe.n + 1, fringe.n + m);
  IntSet built = set_union(set_union(fringe.left, middle), translate(fringe.right, m));
  return certify(fringe, std::move(built));
}

Construction construct_full_o(const FringePair& fringe, std::int64_t k, std::int64_t m,
                              const IntSet& middle) {
  const std::int64_t n = fringe.n;
  if (k < n) {
    throw ConstructionError(Component::params, "k too small (need k >= n)");
  }
  if (m < 1) {
    throw ConstructionError(Component::params, "middle width m must be positive");
  }
  check_middle(middle, n + k + 1, n + k + m);
  if (max_missing_run(middle, n + k + 1, n + k + m) >= 3 * k - 2) {
    throw ConstructionError(Component::middle, "M gap >= 3k-2");
  }
  IntSet built = set_union(fringe.left, IntSet::interval(n + 1, n + k));
  built = set_union(built, middle);
  built = set_union(built, IntSet::interval(n + k + m + 1, n + 2 * k + m));
  built = set_union(built, translate(fringe.right, 2 * k + m));
  Construction c = certify(fringe, std::move(built));
  require_certified(c, "construct_full_o");
  return c;
}

Construction construct_relaxed(const FringePair& fringe, const FamilyParams& params,
                               const IntSet& o1, const IntSet& o2, const IntSet& middle) {
  const auto& p = params;
  if (p.n != fringe.n) {
    throw ConstructionError(Component::params, "params.n differs from the fringe's n");
  }
  if (p.f < 1 || p.k < p.f || p.m < 1) {
    throw ConstructionError(Component::params, "need f >= 1, k >= f, m >= 1");
  }
  if (!validate_O(o1, p.o1_lo(), p.o1_hi(), p.f)) {
    throw ConstructionError(Component::o1, "fails the O-block requirements");
  }
  if (!validate_O(o2, p.o2_lo(), p.o2_hi(), p.f)) {
    throw ConstructionError(Component::o2, "fails the O-block requirements");
  }
  check_middle(middle, p.middle_lo(), p.middle_hi());
  if (max_missing_run(middle, p.middle_lo(), p.middle_hi()) >= p.k) {
    throw ConstructionError(Component::middle, "M gap >= k");
  }
  const std::int64_t n = p.n;
  IntSet built = set_union(fringe.left, IntSet::interval(n + 1, n + p.f));
  built = set_union(built, o1);
  built = set_union(built, middle);
  built = set_union(built, o2);
  built = set_union(built, IntSet::interval(p.o2_hi() + 1, p.o2_hi() + p.f));
  built = set_union(built, translate(fringe.right, p.inserted_width()));
  Construction c = certify(fringe, std::move(built));
  require_certified(c, "construct_relaxed");
  return c;
}

bool validate_O(const IntSet& o, std::int64_t lo, std::int64_t hi, std::int64_t f) {
  if (f < 1 || lo > hi || o.empty() || !is_subset_of_window(o, lo, hi)) {
    return false;
  }
  if (!contains_interval(o, lo, lo + f - 1) || !o.contains(hi)) {
    return false;
  }
  if (max_missing_run(o, lo, hi) >= f) {
    return false;
  }
  return contains_interval(sumset(o, o), 2 * lo, 2 * hi);
}

IntSet sample_blocked_subset(std::int64_t lo, std::int64_t hi, std::int64_t block, Rng& rng) {
  if (block < 1 || lo > hi) {
    throw SetError("sample_blocked_subset: need block >= 1 and lo <= hi");
  }
  const std::int64_t len = hi - lo + 1;
  if (len % block != 0) {
    throw SetError("sample_blocked_subset: block " + std::to_string(block) +
                   " does not divide window length " + std::to_string(len));
  }
  std::vector<IntSet::value_type> chosen;
  std::bernoulli_distribution coin(0.5);
  for (std::int64_t start = lo; start <= hi; start += block) {
    // Rejection from uniform subsets leaves the nonempty ones uniform.
    std::vector<IntSet::value_type> pick;
    do {
      pick.clear();
      for (std::int64_t x = start; x < start + block; ++x) {
        if (coin(rng)) {
          pick.push_back(x);
        }
      }
    } while (pick.empty());
    chosen.insert(chosen.end(), pick.begin(), pick.end());
  }
  return IntSet::from_elements(chosen);
}

IntSet sample_o_block(std::int64_t lo, std::int64_t hi, std::int64_t f, Rng& rng, int attempts) {
  if (f < 2 || f % 2 != 0) {
    throw SetError("sample_o_block: f must be even and >= 2");
  }
  const IntSet forced = set_union(IntSet::interval(lo, lo + f - 1), IntSet{hi});
  const std::int64_t inner_lo = lo + f;
  const std::int64_t inner_hi = hi - 1;
  if (hi - lo + 1 < f + 1) {
    throw SetError("sample_o_block: window shorter than f + 1");
  }
  for (int i = 0; i < attempts; ++i) {
    IntSet o = forced;
    if (inner_lo <= inner_hi) {
      o = set_union(o, sample_blocked_subset(inner_lo, inner_hi, f / 2, rng));
    }
    if (validate_O(o, lo, hi, f)) {
      return o;
    }
  }
  throw SetError("sample_o_block: no valid O block within the attempt budget");
}

BigInt count_gap_bounded_subsets(std::int64_t m, std::int64_t g) {
  if (m < 1 || g < 1) {
    throw SetError("count_gap_bounded_subsets: need m, g >= 1");
  }
  // tail[j]: subsets of the prefix whose trailing missing run has length j.
  std::vector<BigInt> tail(static_cast<std::size_t>(g), 0);
  tail[0] = 1;
  for (std::int64_t pos = 0; pos < m; ++pos) {
    std::vector<BigInt> next(tail.size(), 0);
    for (std::size_t j = 0; j < tail.size(); ++j) {
      if (tail[j] == 0) {
        continue;
      }
      next[0] += tail[j];
      if (j + 1 < tail.size()) {
        next[j + 1] += tail[j];
      }
    }
    tail = std::move(next);
  }
  BigInt total = 0;
  for (const auto& t : tail) {
    total += t;
  }
  return total;
}

std::optional<BigInt> block_bound(std::int64_t m, std::int64_t g) {
  if (g < 2 || g % 2 != 0 || m < 1 || m % (g / 2) != 0) {
    return std::nullopt;
  }
  const BigInt per_block = (BigInt(1) << static_cast<unsigned>(g / 2)) - 1;
  return boost::multiprecision::pow(per_block, static_cast<unsigned>(m / (g / 2)));
}

}  // namespace gmstd
