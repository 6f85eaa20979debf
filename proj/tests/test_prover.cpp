#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "gmstd/prover.hpp"
#include "oracle.hpp"

using gmstd::IntSet;
using gmstd::ProofStatus;
using gmstd::ProverOptions;
namespace fs = std::filesystem;
namespace kernel = gmstd::kernel;

namespace {

const IntSet kSpan30{1, 2, 3, 5, 9, 24, 28, 30, 31};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gmstd_prover_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

void write_json(const fs::path& p, const nlohmann::json& j) {
  std::ofstream out(p, std::ios::trunc);
  out << j.dump(2);
}

}  // namespace

TEST_CASE("canonical_form") {
  CHECK(gmstd::canonical_form(IntSet{5, 6, 8}) == IntSet{1, 2, 4});
  CHECK(gmstd::canonical_form(IntSet{1, 3, 4}) == IntSet{1, 2, 4});
  CHECK(gmstd::canonical_form(kSpan30) == kSpan30);
  CHECK(gmstd::canonical_form(IntSet{1, 2, 4, 8, 23, 27, 29, 30, 31}) == kSpan30);
  CHECK(gmstd::canonical_form(IntSet{-3}) == IntSet{1});
  CHECK_THROWS_AS(gmstd::canonical_form(IntSet{}), gmstd::SetError);
}

TEST_CASE("kernel fold counts agree with enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> hi_pick(1, 32);
    const int hi = hi_pick(rng);
    auto elems = oracle::random_subset(rng, 2, std::max(2, hi), 0.4);
    elems.push_back(1);
    const IntSet a = IntSet::from_elements(elems);
    const auto mask = kernel::mask_of(a);
    CHECK(kernel::set_of(mask) == a);
    const auto counts = kernel::fold_counts(mask);
    const auto b = oracle::balance(oracle::Set(elems.begin(), elems.end()));
    CAPTURE(gmstd::to_list_string(a));
    CHECK(static_cast<std::size_t>(counts.four) == b.four);
    CHECK(static_cast<std::size_t>(counts.diff) == b.diff);

    const IntSet mirrored = kernel::set_of(kernel::reflect(mask));
    CHECK(mirrored == gmstd::translate(gmstd::negate(a), 1 + a.max()));
    CHECK(kernel::is_canonical(mask) == (gmstd::canonical_form(a) == a));
  }
  const auto span30 = kernel::fold_counts(kernel::mask_of(kSpan30));
  CHECK(span30.four > span30.diff);
  CHECK_THROWS_AS(kernel::mask_of(IntSet{2, 3}), gmstd::SetError);
  CHECK_THROWS_AS(kernel::mask_of(IntSet{1, 33}), gmstd::SetError);
}

TEST_CASE("verify_witness") {
  const auto r = gmstd::verify_witness(kSpan30);
  CHECK(r.delta > 0);
  CHECK(r == gmstd::generalized_balance(kSpan30));
}

TEST_CASE("small spans have no witness and count canonical sets") {
  for (int s = 1; s <= 16; ++s) {
    ProverOptions o;
    o.span_bound = s;
    const auto r = gmstd::prove_min_span(o);
    CAPTURE(s);
    CHECK(r.status == ProofStatus::no_witness);
    CHECK(r.cursor == r.cursor_end);
    CHECK(r.raw_sets == (std::uint64_t{1} << s));
    // Mirror classes of subsets of [1, s+1] containing 1.
    std::uint64_t canonical = 0;
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << s); ++c) {
      canonical += kernel::is_canonical(1U | (c << 1)) ? 1 : 0;
    }
    CHECK(r.sets_examined == canonical);
  }
  ProverOptions bad;
  bad.span_bound = 32;
  CHECK_THROWS_AS(gmstd::prove_min_span(bad), gmstd::SetError);
}

TEST_CASE("worker count does not change the result") {
  ProverOptions one;
  one.span_bound = 20;
  ProverOptions four = one;
  four.workers = 4;
  const auto a = gmstd::prove_min_span(one);
  const auto b = gmstd::prove_min_span(four);
  CHECK(a.status == ProofStatus::no_witness);
  CHECK(a.sets_examined == b.sets_examined);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("checkpoint, interruption and resume") {
  TempDir dir;
  const fs::path cp = dir.path / "span20.json";

  ProverOptions o;
  o.span_bound = 20;
  o.checkpoint = cp;
  o.max_rounds = 5;
  const auto partial = gmstd::prove_min_span(o);
  CHECK(partial.status == ProofStatus::interrupted);
  CHECK(partial.cursor == 5 * 65536);

  const auto loaded = gmstd::load_checkpoint(cp);
  CHECK(loaded.cursor == partial.cursor);
  CHECK(loaded.span_bound == 20);
  CHECK(loaded.chunk_size == 65536);

  o.max_rounds = 0;
  o.resume = true;
  o.workers = 3;
  const auto resumed = gmstd::prove_min_span(o);
  ProverOptions fresh;
  fresh.span_bound = 20;
  const auto full = gmstd::prove_min_span(fresh);
  CHECK(resumed.status == ProofStatus::no_witness);
  CHECK(resumed.sets_examined == full.sets_examined);

  SUBCASE("stop flag") {
    std::atomic<bool> stop{true};
    ProverOptions s;
    s.span_bound = 20;
    s.stop = &stop;
    const auto r = gmstd::prove_min_span(s);
    CHECK(r.status == ProofStatus::interrupted);
    CHECK(r.cursor == 0);
  }

  SUBCASE("span mismatch") {
    ProverOptions other;
    other.span_bound = 21;
    other.checkpoint = cp;
    other.resume = true;
    CHECK_THROWS_AS(gmstd::prove_min_span(other), gmstd::CheckpointError);
  }

  SUBCASE("resume without a file path") {
    ProverOptions other;
    other.span_bound = 20;
    other.resume = true;
    CHECK_THROWS_AS(gmstd::prove_min_span(other), gmstd::CheckpointError);
  }
}

TEST_CASE("checkpoint round trip keeps witnesses") {
  TempDir dir;
  const fs::path cp = dir.path / "cp.json";
  gmstd::SearchCheckpoint s;
  s.span_bound = 30;
  s.chunk_size = 65536;
  s.cursor = 65536 * 7;
  s.sets_examined = 1000;
  s.witnesses = {gmstd::canonical_form(kSpan30)};
  gmstd::save_checkpoint(cp, s);
  CHECK_FALSE(fs::exists(cp.string() + ".tmp"));
  const auto raw = read_json(cp);
  CHECK(raw["format_version"] == 1);
  CHECK(raw["raw_sets"] == s.cursor);
  const auto back = gmstd::load_checkpoint(cp);
  CHECK(back.witnesses == s.witnesses);
  CHECK(back.cursor == s.cursor);
  CHECK(back.sets_examined == s.sets_examined);
}

TEST_CASE("corrupted checkpoints are rejected") {
  TempDir dir;
  const fs::path cp = dir.path / "cp.json";
  const nlohmann::json good = {{"format_version", 1}, {"span_bound", 20},     {"chunk_size", 65536},
                               {"cursor", 131072},    {"sets_examined", 10}, {"raw_sets", 131072},
                               {"witnesses", nlohmann::json::array()}};
  write_json(cp, good);
  CHECK_NOTHROW(gmstd::load_checkpoint(cp));

  const auto expect_reject = [&](nlohmann::json j) {
    write_json(cp, j);
    CHECK_THROWS_AS(gmstd::load_checkpoint(cp), gmstd::CheckpointError);
  };
  auto j = good;
  j["format_version"] = 2;
  expect_reject(j);
  j = good;
  j["span_bound"] = 40;
  expect_reject(j);
  j = good;
  j["chunk_size"] = 100;
  expect_reject(j);
  j = good;
  j["cursor"] = 131073;
  expect_reject(j);
  j = good;
  j["cursor"] = std::uint64_t{1} << 21;
  expect_reject(j);
  j = good;
  j["sets_examined"] = 200000;
  expect_reject(j);
  j = good;
  j.erase("cursor");
  expect_reject(j);
  j = good;
  j["witnesses"] = {{1, 2, 3}};  // not a witness
  expect_reject(j);
  j = good;
  j["witnesses"] = {{1, 2, 3, 5, 9, 24, 28, 30, 31}};  // outside span 20
  expect_reject(j);

  {
    std::ofstream out(cp, std::ios::trunc);
    out << "{\"format_version\": 1, \"span";
  }
  CHECK_THROWS_AS(gmstd::load_checkpoint(cp), gmstd::CheckpointError);
  CHECK_THROWS_AS(gmstd::load_checkpoint(dir.path / "missing.json"), gmstd::CheckpointError);
}

TEST_CASE("exhaustive span 29 search" * doctest::skip()) {
  ProverOptions o;
  o.span_bound = 29;
  o.workers = std::max(1U, std::thread::hardware_concurrency());
  const auto r = gmstd::prove_min_span(o);
  CHECK(r.status == ProofStatus::no_witness);
  CHECK(r.raw_sets == (std::uint64_t{1} << 29));
}
