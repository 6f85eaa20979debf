#include "gmstd/prover.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace gmstd {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

std::uint32_t reverse32(std::uint32_t v) {
  v = ((v >> 1) & 0x55555555U) | ((v & 0x55555555U) << 1);
  v = ((v >> 2) & 0x33333333U) | ((v & 0x33333333U) << 2);
  v = ((v >> 4) & 0x0F0F0F0FU) | ((v & 0x0F0F0F0FU) << 4);
  v = ((v >> 8) & 0x00FF00FFU) | ((v & 0x00FF00FFU) << 8);
  return (v >> 16) | (v << 16);
}

std::uint64_t reverse64(std::uint64_t v) {
  return (static_cast<std::uint64_t>(reverse32(static_cast<std::uint32_t>(v))) << 32) |
         reverse32(static_cast<std::uint32_t>(v >> 32));
}

int popcount128(u128 v) {
  return std::popcount(static_cast<std::uint64_t>(v)) +
         std::popcount(static_cast<std::uint64_t>(v >> 64));
}

}  // namespace

namespace kernel {

SpanMask reflect(SpanMask mask) {
  const int top = std::bit_width(mask) - 1;
  return reverse32(mask) >> (31 - top);
}

bool is_canonical(SpanMask mask) {
  const SpanMask mirror = reflect(mask);
  const SpanMask diff = mask ^ mirror;
  // Lowest differing position decides: the set holding it sorts first.
  return diff == 0 || (mask & (diff & (~diff + 1))) != 0;
}

FoldCounts fold_counts(SpanMask mask) {
  const int top = std::bit_width(mask) - 1;
  std::uint64_t two = 0;
  for (SpanMask m = mask; m != 0; m &= m - 1) {
    two |= static_cast<std::uint64_t>(mask) << std::countr_zero(m);
  }
  u128 four = 0;
  for (std::uint64_t m = two; m != 0; m &= m - 1) {
    four |= static_cast<u128>(two) << std::countr_zero(m);
  }
  // -2A shifted by 4*max onto bits [0, 2*top]: the mirror of 2A.
  const std::uint64_t mirror = reverse64(two) >> (63 - 2 * top);
  u128 diff = 0;
  for (std::uint64_t m = mirror; m != 0; m &= m - 1) {
    diff |= static_cast<u128>(two) << std::countr_zero(m);
  }
  return {popcount128(four), popcount128(diff)};
}

SpanMask mask_of(const IntSet& a) {
  if (a.empty() || a.min() != 1 || a.max() > kMaxProverSpan + 1) {
    throw SetError("mask_of: set must have min 1 and span <= 31");
  }
  SpanMask mask = 0;
  a.for_each([&](IntSet::value_type x) { mask |= SpanMask{1} << (x - 1); });
  return mask;
}

IntSet set_of(SpanMask mask) { return IntSet::from_bits(1, {mask}); }

}  // namespace kernel

IntSet canonical_form(const IntSet& a) {
  if (a.empty()) {
    throw SetError("canonical_form: empty set");
  }
  const IntSet shifted = translate(a, 1 - a.min());
  const IntSet mirrored = translate(negate(shifted), 1 + shifted.max());
  return lexicographic_less(mirrored, shifted) ? mirrored : shifted;
}

BalanceReport verify_witness(const IntSet& a) { return generalized_balance(a); }

void save_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  nlohmann::json j;
  j["format_version"] = cp.format_version;
  j["span_bound"] = cp.span_bound;
  j["chunk_size"] = cp.chunk_size;
  j["cursor"] = cp.cursor;
  j["sets_examined"] = cp.sets_examined;
  j["raw_sets"] = cp.cursor;
  auto& ws = j["witnesses"] = nlohmann::json::array();
  for (const auto& w : cp.witnesses) {
    ws.push_back(w.elements());
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw CheckpointError("cannot write checkpoint " + tmp.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
      throw CheckpointError("failed writing checkpoint " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

SearchCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw CheckpointError("cannot open checkpoint " + path.string());
  }
  SearchCheckpoint cp;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    cp.format_version = j.at("format_version").get<int>();
    cp.span_bound = j.at("span_bound").get<int>();
    cp.chunk_size = j.at("chunk_size").get<std::uint64_t>();
    cp.cursor = j.at("cursor").get<std::uint64_t>();
    cp.sets_examined = j.at("sets_examined").get<std::uint64_t>();
    for (const auto& w : j.at("witnesses")) {
      const auto elems = w.get<std::vector<IntSet::value_type>>();
      cp.witnesses.push_back(IntSet::from_elements(elems));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupted checkpoint " + path.string() + ": " + e.what());
  }
  const auto fail = [&](const std::string& why) {
    throw CheckpointError("corrupted checkpoint " + path.string() + ": " + why);
  };
  if (cp.format_version != SearchCheckpoint::kFormatVersion) {
    fail("unsupported format_version " + std::to_string(cp.format_version));
  }
  if (cp.span_bound < 1 || cp.span_bound > kMaxProverSpan) {
    fail("span_bound out of range");
  }
  const std::uint64_t total = std::uint64_t{1} << cp.span_bound;
  if (cp.chunk_size != std::min(total, kChunk)) {
    fail("chunk_size does not match this build's enumeration");
  }
  if (cp.cursor > total || cp.cursor % cp.chunk_size != 0) {
    fail("cursor is not a chunk boundary inside the search space");
  }
  if (cp.sets_examined > cp.cursor) {
    fail("sets_examined exceeds the cursor");
  }
  for (const auto& w : cp.witnesses) {
    if (w.empty() || w.min() != 1 || w.max() > cp.span_bound + 1 ||
        !kernel::is_canonical(kernel::mask_of(w))) {
      fail("witness " + to_list_string(w) + " is outside the search space");
    }
    if (verify_witness(w).delta <= 0) {
      fail("witness " + to_list_string(w) + " does not re-verify");
    }
  }
  return cp;
}

namespace {

struct ChunkResult {
  std::uint64_t examined = 0;
  std::vector<kernel::SpanMask> witnesses;
};

ChunkResult scan_chunk(std::uint64_t begin, std::uint64_t end) {
  ChunkResult r;
  for (std::uint64_t c = begin; c < end; ++c) {
    const auto mask = static_cast<kernel::SpanMask>(1U | (c << 1));
    if (!kernel::is_canonical(mask)) {
      continue;
    }
    ++r.examined;
    const auto counts = kernel::fold_counts(mask);
    if (counts.four > counts.diff) {
      r.witnesses.push_back(mask);
    }
  }
  return r;
}

bool stop_requested(const ProverOptions& o) {
  return o.stop != nullptr && o.stop->load(std::memory_order_relaxed);
}

}  // namespace

ProofResult prove_min_span(const ProverOptions& options) {
  const int s = options.span_bound;
  if (s < 1 || s > kMaxProverSpan) {
    throw SetError("prove_min_span: span bound must lie in [1, " +
                   std::to_string(kMaxProverSpan) + "]");
  }
  const unsigned workers = std::max(1U, options.workers);
  const std::uint64_t total = std::uint64_t{1} << s;
  const std::uint64_t chunk = std::min(total, kChunk);

  SearchCheckpoint state;
  state.span_bound = s;
  state.chunk_size = chunk;
  if (options.resume) {
    if (options.checkpoint.empty()) {
      throw CheckpointError("resume requested without a checkpoint path");
    }
    state = load_checkpoint(options.checkpoint);
    if (state.span_bound != s) {
      throw CheckpointError("checkpoint was written for span bound " +
                            std::to_string(state.span_bound));
    }
  }

  const auto persist = [&] {
    if (!options.checkpoint.empty()) {
      save_checkpoint(options.checkpoint, state);
    }
  };

  std::uint64_t since_save = 0;
  std::uint64_t rounds = 0;
  bool interrupted = false;
  while (state.cursor < total) {
    if (stop_requested(options) || (options.max_rounds != 0 && rounds >= options.max_rounds)) {
      interrupted = true;
      break;
    }
    // Chunk i of a round goes to worker i; chunk boundaries never depend on
    // the worker count.
    const std::uint64_t left = (total - state.cursor) / chunk;
    const auto active = static_cast<unsigned>(std::min<std::uint64_t>(workers, left));
    std::vector<ChunkResult> results(active);
    if (active == 1) {
      results[0] = scan_chunk(state.cursor, state.cursor + chunk);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(active);
      for (unsigned i = 0; i < active; ++i) {
        const std::uint64_t begin = state.cursor + i * chunk;
        pool.emplace_back([&results, i, begin, chunk] { results[i] = scan_chunk(begin, begin + chunk); });
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (const auto& r : results) {
      state.sets_examined += r.examined;
      since_save += r.examined;
      for (const auto mask : r.witnesses) {
        state.witnesses.push_back(kernel::set_of(mask));
      }
    }
    state.cursor += active * chunk;
    ++rounds;
    if (since_save >= options.checkpoint_every) {
      persist();
      since_save = 0;
    }
  }
  std::sort(state.witnesses.begin(), state.witnesses.end(), lexicographic_less);
  persist();

  ProofResult result;
  result.span_bound = s;
  result.cursor = state.cursor;
  result.cursor_end = total;
  result.sets_examined = state.sets_examined;
  result.raw_sets = state.cursor;
  for (const auto& w : state.witnesses) {
    const BalanceReport r = verify_witness(w);
    if (r.delta <= 0) {
      throw VerificationError("prover emitted " + to_list_string(w) + " with delta " +
                              std::to_string(r.delta));
    }
    result.witnesses.push_back(w);
    const IntSet mirror = kernel::set_of(kernel::reflect(kernel::mask_of(w)));
    if (!(mirror == w)) {
      result.witnesses.push_back(mirror);
    }
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(), lexicographic_less);
  result.status = interrupted                  ? ProofStatus::interrupted
                  : result.witnesses.empty()   ? ProofStatus::no_witness
                                               : ProofStatus::witnesses_found;
  return result;
}

}  // namespace gmstd
