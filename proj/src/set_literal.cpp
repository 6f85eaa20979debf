#include <charconv>
#include <sstream>

#include "gmstd/int_set.hpp"

namespace gmstd {

namespace {

using value_type = IntSet::value_type;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

value_type parse_integer(std::string_view token, std::string_view whole) {
  token = trim(token);
  value_type v = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw SetError("malformed set literal '" + std::string(whole) + "': bad integer '" +
                   std::string(token) + "'");
  }
  return v;
}

// Runs of consecutive elements as [lo, hi] pairs.
std::vector<std::pair<value_type, value_type>> runs_of(const IntSet& s) {
  std::vector<std::pair<value_type, value_type>> runs;
  s.for_each([&](value_type x) {
    if (!runs.empty() && runs.back().second + 1 == x) {
      runs.back().second = x;
    } else {
      runs.emplace_back(x, x);
    }
  });
  return runs;
}

}  // namespace

IntSet parse_set_literal(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{' && body.back() == '}') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) {
    throw SetError("malformed set literal: empty");
  }
  std::vector<value_type> elements;
  std::size_t start = 0;
  while (start <= body.size()) {
    // '+' joins interval pieces; a '+' right after a separator is a sign.
    std::size_t end = start;
    while (end < body.size() && body[end] != ',' &&
           !(body[end] == '+' && end > start)) {
      ++end;
    }
    const std::string_view piece = trim(body.substr(start, end - start));
    if (piece.empty()) {
      throw SetError("malformed set literal '" + std::string(text) + "': empty element");
    }
    const std::size_t dots = piece.find("..");
    if (dots == std::string_view::npos) {
      elements.push_back(parse_integer(piece, text));
    } else {
      const value_type lo = parse_integer(piece.substr(0, dots), text);
      const value_type hi = parse_integer(piece.substr(dots + 2), text);
      if (lo > hi) {
        throw SetError("malformed set literal '" + std::string(text) + "': reversed interval");
      }
      if (hi - lo > (value_type{1} << 30)) {
        throw SetError("malformed set literal '" + std::string(text) + "': interval too long");
      }
      for (value_type x = lo; x <= hi; ++x) {
        elements.push_back(x);
      }
    }
    start = end + 1;
  }
  return IntSet::from_elements(elements);
}

std::string to_list_string(const IntSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](value_type x) {
    os << (first ? "" : ", ") << x;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string to_literal(const IntSet& s) {
  std::ostringstream os;
  bool first = true;
  s.for_each([&](value_type x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  return os.str();
}

std::string to_compact_string(const IntSet& s) {
  if (s.empty()) {
    return "{}";
  }
  const IntSet holes = missing_in_hull(s, s.min(), s.max());
  std::ostringstream os;
  if (holes.size() <= 16) {
    os << '[' << s.min() << ',' << s.max() << ']';
    if (!holes.empty()) {
      os << " \\ " << to_list_string(holes);
    }
    return os.str();
  }
  bool first = true;
  for (const auto& [lo, hi] : runs_of(s)) {
    os << (first ? "" : "+");
    first = false;
    if (lo == hi) {
      os << lo;
    } else {
      os << lo << ".." << hi;
    }
  }
  return os.str();
}

}  // namespace gmstd
