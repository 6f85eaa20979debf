#include "gmstd/cli.hpp"

#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gmstd/classify.hpp"
#include "gmstd/density.hpp"
#include "gmstd/families.hpp"
#include "gmstd/int_set.hpp"
#include "gmstd/json_io.hpp"
#include "gmstd/prover.hpp"
#include "gmstd/witness.hpp"

namespace gmstd::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

/// A seed catalog name or a set literal.
IntSet resolve_set(const std::string& text) {
  if (const auto seed = find_seed(text)) {
    return seed->set;
  }
  return parse_set_literal(text);
}

std::pair<FoldSpec, FoldSpec> parse_fold_pair(const std::string& text) {
  const auto parse_one = [&](std::string_view token) {
    const auto sep = token.find_first_of("+-");
    if (sep == std::string_view::npos || sep == 0) {
      throw UsageError("bad fold '" + std::string(token) + "' (expected p+q)");
    }
    try {
      const int plus = std::stoi(std::string(token.substr(0, sep)));
      const int minus = std::stoi(std::string(token.substr(sep + 1)));
      return FoldSpec(plus, minus);
    } catch (const std::logic_error&) {
      throw UsageError("bad fold '" + std::string(token) + "' (expected p+q)");
    }
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--folds needs two folds, e.g. 4+0,2+2");
  }
  return {parse_one(std::string_view(text).substr(0, comma)),
          parse_one(std::string_view(text).substr(comma + 1))};
}

/// "key=value" fields after a "random" prefix, e.g. "random:block=4:seed=7".
std::map<std::string, std::string> parse_random_spec(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string part;
  std::getline(ss, part, ':');
  while (std::getline(ss, part, ':')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw UsageError("bad random spec field '" + part + "'");
    }
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return fields;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) {
      throw UsageError("bad integer for " + what + ": '" + s + "'");
    }
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad integer for " + what + ": '" + s + "'");
  }
}

/// Middle or O-block argument: a literal, "full", "empty" or a random spec.
/// Random specs record the seed they used in `echo`.
IntSet resolve_block(const std::string& text, std::int64_t lo, std::int64_t hi, json& echo,
                     const std::function<IntSet(const std::map<std::string, std::string>&, Rng&)>&
                         sample) {
  if (text == "full") {
    return IntSet::interval(lo, hi);
  }
  if (text == "empty") {
    return {};
  }
  if (text.rfind("random", 0) == 0) {
    auto fields = parse_random_spec(text);
    const std::uint64_t seed = fields.count("seed") != 0
                                   ? static_cast<std::uint64_t>(to_int(fields["seed"], "seed"))
                                   : fresh_seed();
    fields["seed"] = std::to_string(seed);
    echo = {{"spec", text}, {"seed", seed}};
    Rng rng(seed);
    return sample(fields, rng);
  }
  return parse_set_literal(text);
}

// Text rendering helpers.

std::string report_line(const BalanceReport& r) {
  std::ostringstream os;
  os << r.size_plus << " / " << r.size_minus << ", delta " << std::showpos << r.delta
     << std::noshowpos << " (" << to_string(r.dominant) << ")";
  return os.str();
}

struct Context {
  std::ostream& out;
  bool as_json = false;
  const DispatchOptions& options;
  CommandResult result;

  void text(const std::string& line) {
    if (!as_json) {
      out << line << '\n';
    }
  }
};

// Command handlers. Each fills ctx.result.inputs / output and prints text.

struct AnalyzeArgs {
  std::string set;
  std::string folds = "4+0,2+2";
  std::int64_t n = -1;
};

void run_analyze(Context& ctx, const AnalyzeArgs& args) {
  const IntSet a = resolve_set(args.set);
  if (a.empty()) {
    throw SetError("analyze: empty set");
  }
  const auto [plus, minus] = parse_fold_pair(args.folds);
  ctx.result.inputs = {{"set", a}, {"folds", args.folds}};
  const IntSet plus_fold = fold(a, plus);
  const IntSet minus_fold = fold(a, minus);
  const BalanceReport r = make_report(plus_fold.size(), minus_fold.size());
  json out = r;
  out["set"] = a;
  out["span"] = span(a);
  out["plus_fold"] = {{"fold", {plus.plus, plus.minus}}, {"compact", to_compact_string(plus_fold)}};
  out["minus_fold"] = {{"fold", {minus.plus, minus.minus}},
                       {"compact", to_compact_string(minus_fold)}};
  ctx.text("set      " + to_list_string(a) + "  (size " + std::to_string(a.size()) + ", span " +
           std::to_string(span(a)) + ")");
  ctx.text("plus     " + std::to_string(plus.plus) + "A-" + std::to_string(plus.minus) +
           "A = " + to_compact_string(plus_fold));
  ctx.text("minus    " + std::to_string(minus.plus) + "A-" + std::to_string(minus.minus) +
           "A = " + to_compact_string(minus_fold));
  ctx.text("balance  " + report_line(r));
  if (args.n >= 0) {
    ctx.result.inputs["n"] = args.n;
    const FringeProfile p = fringe_profile(a, args.n);
    out["pn4"] = p.pn4;
    out["pn"] = is_pn_set(a, args.n);
    out["fringe"] = p;
    ctx.text("P_n^4    " + std::string(p.pn4 ? "yes" : "no") + " (n = " + std::to_string(args.n) +
             ")");
    ctx.text("4A fringe absent     low " + json(p.sums.low.absent).dump() + ", high " +
             json(p.sums.high.absent).dump());
    ctx.text("2A-2A fringe absent  low " + json(p.differences.low.absent).dump() + ", high " +
             json(p.differences.high.absent).dump());
  }
  ctx.result.output = out;
}

struct ConstructArgs {
  std::string base = "seed84";
  std::int64_t n = 42;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t f = 16;
  std::string middle = "full";
  std::string o1 = "full";
  std::string o2 = "full";
};

IntSet sample_middle(const std::map<std::string, std::string>& fields, Rng& rng, std::int64_t lo,
                     std::int64_t hi) {
  const auto it = fields.find("block");
  if (it == fields.end()) {
    throw UsageError("random middle needs block=B");
  }
  return sample_blocked_subset(lo, hi, to_int(it->second, "block"), rng);
}

void print_construction(Context& ctx, const Construction& c) {
  ctx.text("A'       " + to_compact_string(c.set) + "  (size " + std::to_string(c.set.size()) +
           ", span " + std::to_string(span(c.set)) + ")");
  ctx.text("balance  " + report_line(c.balance) + "; base delta " +
           std::to_string(c.base_balance.delta));
  ctx.text("P_n^4    " + std::string(c.pn4 ? "yes" : "no"));
}

void run_construct(Context& ctx, const std::string& variant, const ConstructArgs& args) {
  const IntSet base = resolve_set(args.base);
  const FringePair fringe = FringePair::split(base, args.n);
  json inputs = {{"base", base}, {"n", args.n}, {"m", args.m}};
  json middle_echo;
  Construction c;
  if (variant == "insert") {
    const std::int64_t lo = args.n + 1;
    const std::int64_t hi = args.n + args.m;
    const IntSet middle = resolve_block(args.middle, lo, hi, middle_echo, [&](const auto& f, Rng& r) {
      return sample_middle(f, r, lo, hi);
    });
    c = insert_middle(fringe, middle, args.m);
  } else if (variant == "full-o") {
    inputs["k"] = args.k;
    const std::int64_t lo = args.n + args.k + 1;
    const std::int64_t hi = args.n + args.k + args.m;
    const IntSet middle = resolve_block(args.middle, lo, hi, middle_echo, [&](const auto& f, Rng& r) {
      return sample_middle(f, r, lo, hi);
    });
    c = construct_full_o(fringe, args.k, args.m, middle);
  } else {
    const FamilyParams p{args.n, args.k, args.m, args.f};
    inputs["k"] = args.k;
    inputs["f"] = args.f;
    json o1_echo;
    json o2_echo;
    const auto o_sampler = [&](std::int64_t lo, std::int64_t hi) {
      return [&, lo, hi](const std::map<std::string, std::string>&, Rng& r) {
        return sample_o_block(lo, hi, args.f, r);
      };
    };
    const IntSet o1 = resolve_block(args.o1, p.o1_lo(), p.o1_hi(), o1_echo, o_sampler(p.o1_lo(), p.o1_hi()));
    const IntSet o2 = resolve_block(args.o2, p.o2_lo(), p.o2_hi(), o2_echo, o_sampler(p.o2_lo(), p.o2_hi()));
    const std::int64_t lo = p.middle_lo();
    const std::int64_t hi = p.middle_hi();
    const IntSet middle = resolve_block(args.middle, lo, hi, middle_echo, [&](const auto& f, Rng& r) {
      return sample_middle(f, r, lo, hi);
    });
    inputs["o1"] = o1_echo.is_null() ? json(args.o1) : o1_echo;
    inputs["o2"] = o2_echo.is_null() ? json(args.o2) : o2_echo;
    c = construct_relaxed(fringe, p, o1, o2, middle);
  }
  inputs["middle"] = middle_echo.is_null() ? json(args.middle) : middle_echo;
  ctx.result.inputs = inputs;
  ctx.result.output = c;
  print_construction(ctx, c);
}

void run_count_middles(Context& ctx, std::int64_t m, std::int64_t gap) {
  const BigInt count = count_gap_bounded_subsets(m, gap);
  const auto bound = block_bound(m, gap);
  ctx.result.inputs = {{"m", m}, {"gap", gap}};
  json out = {{"m", m}, {"gap", gap}, {"count", count.str()}};
  out["block_bound"] = bound ? json(bound->str()) : json(nullptr);
  ctx.result.output = out;
  ctx.text("subsets of [1," + std::to_string(m) + "] with no missing run >= " +
           std::to_string(gap) + ": " + count.str());
  if (bound) {
    ctx.text("block bound (2^{g/2}-1)^{m/(g/2)}: " + bound->str());
  }
}

void print_witness(Context& ctx, const WitnessRecord& w) {
  ctx.text("S_" + std::to_string(w.x) + " = " + to_compact_string(w.set) + "  [" +
           std::string(to_string(w.rule)) + "]");
  ctx.text("balance  " + report_line(w.balance));
}

void run_prove(Context& ctx, const ProverOptions& opts) {
  ProverOptions o = opts;
  o.stop = ctx.options.stop;
  ctx.result.inputs = {{"max", o.span_bound},
                       {"workers", o.workers},
                       {"checkpoint", o.checkpoint.string()},
                       {"resume", o.resume}};
  const ProofResult r = prove_min_span(o);
  ctx.result.output = r;
  ctx.text("status         " + std::string(to_string(r.status)));
  ctx.text("cursor         " + std::to_string(r.cursor) + " / " + std::to_string(r.cursor_end));
  ctx.text("canonical sets " + std::to_string(r.sets_examined));
  ctx.text("witnesses      " + std::to_string(r.witnesses.size()));
  for (const auto& w : r.witnesses) {
    ctx.text("  " + to_list_string(w));
  }
  switch (r.status) {
    case ProofStatus::no_witness:
      ctx.result.exit_code = kOk;
      break;
    case ProofStatus::witnesses_found:
      ctx.result.exit_code = kWitnessFound;
      break;
    case ProofStatus::interrupted:
      ctx.result.exit_code = kInterrupted;
      break;
  }
}

void print_estimate(Context& ctx, const DensityEstimate& e) {
  std::ostringstream os;
  os << std::setprecision(6) << "estimate " << e.estimate << " +/- " << e.ci95 << "  (" << e.hits
     << " / " << e.samples << ", seed " << e.seed << ")";
  ctx.text(os.str());
}

std::string fmt_ld(long double v) {
  std::ostringstream os;
  os << std::setprecision(18) << v;
  return os.str();
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       const DispatchOptions& options) {
  CLI::App app{"Sum/difference fold toolkit: |4A| versus |2A-2A|", "gmstd"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document instead of text");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Fold sizes, balance and P_n^4 fringes of a set");
  analyze_cmd->add_option("--set", analyze.set, "Set literal or catalog name")->required();
  analyze_cmd->add_option("--folds", analyze.folds, "Fold pair p+q,p+q (plus copies, minus copies)")
      ->capture_default_str();
  analyze_cmd->add_option("--n", analyze.n, "Fringe width for the P_n / P_n^4 checks");

  ConstructArgs cons;
  auto* construct_cmd = app.add_subcommand("construct", "Build family members from a P_n^4 base set");
  construct_cmd->require_subcommand(1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--base", cons.base, "Base set (literal or catalog name)")->capture_default_str();
    sub->add_option("--n", cons.n, "Fringe width n; base must lie in [1, 2n]")->capture_default_str();
    sub->add_option("--m", cons.m, "Middle window width")->required();
    sub->add_option("--middle", cons.middle, "Middle: literal, full, empty or random:block=B:seed=S")
        ->capture_default_str();
  };
  auto* insert_cmd = construct_cmd->add_subcommand("insert", "A' = L ∪ M ∪ (R+m)");
  add_common(insert_cmd);
  auto* full_o_cmd = construct_cmd->add_subcommand("full-o", "Full O blocks of width k around M");
  add_common(full_o_cmd);
  full_o_cmd->add_option("--k", cons.k, "O block width (k >= n)")->required();
  auto* relaxed_cmd = construct_cmd->add_subcommand("relaxed", "F/O/M layout with sparse O blocks");
  add_common(relaxed_cmd);
  relaxed_cmd->add_option("--k", cons.k, "O block width")->required();
  relaxed_cmd->add_option("--f", cons.f, "Full-block width f")->capture_default_str();
  relaxed_cmd->add_option("--o1", cons.o1, "O1: literal, full or random:seed=S")->capture_default_str();
  relaxed_cmd->add_option("--o2", cons.o2, "O2: literal, full or random:seed=S")->capture_default_str();

  std::int64_t count_m = 0;
  std::int64_t count_gap = 0;
  auto* count_cmd = app.add_subcommand("count-middles", "Exact count of gap-bounded middles");
  count_cmd->add_option("--m", count_m, "Window length")->required();
  count_cmd->add_option("--gap", count_gap, "Forbidden missing-run length")->required();

  auto* witness_cmd = app.add_subcommand("witness", "S_x witnesses, seed sets and replication");
  witness_cmd->require_subcommand(1);
  std::int64_t sx_x = 0;
  auto* sx_cmd = witness_cmd->add_subcommand("sx", "Set with |4S| - |2S-2S| = x");
  sx_cmd->add_option("--x", sx_x, "Target difference")->required();
  std::string scan_set;
  std::int64_t scan_from = 1;
  std::int64_t scan_to = 1;
  auto* scan_cmd = witness_cmd->add_subcommand("scan", "Balance of A + {0,a} over a range of a");
  scan_cmd->add_option("--set", scan_set, "Set literal or catalog name")->required();
  scan_cmd->add_option("--from", scan_from)->required();
  scan_cmd->add_option("--to", scan_to)->required();
  std::int64_t search_hi = 40;
  double search_p = 0.25;
  std::uint64_t search_trials = 10000;
  std::optional<std::uint64_t> search_seed;
  auto* search_cmd = witness_cmd->add_subcommand("search", "Random subsets of [1,hi] with |4A| > |2A-2A|");
  search_cmd->add_option("--hi", search_hi)->capture_default_str();
  search_cmd->add_option("--p", search_p)->capture_default_str();
  search_cmd->add_option("--trials", search_trials)->capture_default_str();
  search_cmd->add_option("--seed", search_seed);
  auto* seeds_cmd = witness_cmd->add_subcommand("seeds", "List the named seed sets");

  auto* prove_cmd = app.add_subcommand("prove", "Exhaustive minimum-span search");
  prove_cmd->require_subcommand(1);
  ProverOptions prover;
  prover.workers = 1;
  std::string checkpoint;
  auto* span_cmd = prove_cmd->add_subcommand("span", "Search every set of span <= max");
  span_cmd->add_option("--max", prover.span_bound, "Span bound (1..31)")->required();
  span_cmd->add_option("--workers", prover.workers)->capture_default_str();
  span_cmd->add_option("--checkpoint", checkpoint, "Checkpoint file (JSON)");
  span_cmd->add_flag("--resume", prover.resume, "Continue from the checkpoint file");
  span_cmd->add_option("--max-rounds", prover.max_rounds, "Stop after this many rounds (0 = run to completion)");
  span_cmd->add_option("--checkpoint-every", prover.checkpoint_every, "Canonical sets between saves")
      ->capture_default_str();
  std::string verify_set;
  auto* verify_cmd = prove_cmd->add_subcommand("verify", "Recompute |4A| and |2A-2A| for a set");
  verify_cmd->add_option("--set", verify_set)->required();

  auto* density_cmd = app.add_subcommand("density", "Monte Carlo densities and lower-bound sums");
  density_cmd->require_subcommand(1);
  std::int64_t mc_n = 100;
  std::uint64_t mc_samples = 100000;
  std::string mc_predicate = "mstd";
  double mc_p = 0.5;
  std::optional<std::uint64_t> mc_seed;
  unsigned mc_workers = 0;
  auto* mc_cmd = density_cmd->add_subcommand("mc", "Fraction of random subsets of [1,n] satisfying a predicate");
  mc_cmd->add_option("--n", mc_n)->capture_default_str();
  mc_cmd->add_option("--samples", mc_samples)->capture_default_str();
  mc_cmd->add_option("--predicate", mc_predicate, "mstd or gen4")->capture_default_str();
  mc_cmd->add_option("--p", mc_p)->capture_default_str();
  mc_cmd->add_option("--seed", mc_seed);
  mc_cmd->add_option("--workers", mc_workers, "0 = all cores")->capture_default_str();
  double pn_alpha = 0.25;
  auto* pn_cmd = density_cmd->add_subcommand("pn", "Probability that a random subset is P_{floor(alpha n)}");
  pn_cmd->add_option("--n", mc_n)->capture_default_str();
  pn_cmd->add_option("--alpha", pn_alpha)->capture_default_str();
  pn_cmd->add_option("--samples", mc_samples)->capture_default_str();
  pn_cmd->add_option("--seed", mc_seed);
  pn_cmd->add_option("--workers", mc_workers)->capture_default_str();
  BoundParams bound;
  double bound_a = 2.0;
  double bound_b = 1.5;
  double bound_c = 1.5;
  auto* bound_cmd = density_cmd->add_subcommand("bound", "Evaluate sum 2^{-ak}(1-2^{-bk})^{r/(ck)}");
  bound_cmd->add_option("--a", bound_a)->capture_default_str();
  bound_cmd->add_option("--b", bound_b)->capture_default_str();
  bound_cmd->add_option("--c", bound_c)->capture_default_str();
  bound_cmd->add_option("--r", bound.r)->required();
  bound_cmd->add_option("--n0", bound.n0)->capture_default_str();
  int exp_f = 16;
  double exp_b = 1.5;
  auto* exponent_cmd = density_cmd->add_subcommand("exponent", "alpha(f) and the density exponent 2 alpha / b");
  exponent_cmd->add_option("--f", exp_f)->required();
  exponent_cmd->add_option("--b", exp_b)->capture_default_str();

  Context ctx{out, false, options, {}};
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    ctx.result.exit_code = kOk;
    return ctx.result;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    ctx.result.exit_code = kOk;
    return ctx.result;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    ctx.result.exit_code = kUsage;
    ctx.result.output = {{"error", e.what()}};
    return ctx.result;
  }
  ctx.as_json = as_json;

  try {
    if (app.got_subcommand(analyze_cmd)) {
      ctx.result.command = "analyze";
      run_analyze(ctx, analyze);
    } else if (app.got_subcommand(construct_cmd)) {
      const std::string variant = construct_cmd->got_subcommand(insert_cmd)   ? "insert"
                                  : construct_cmd->got_subcommand(full_o_cmd) ? "full-o"
                                                                             : "relaxed";
      ctx.result.command = "construct " + variant;
      run_construct(ctx, variant, cons);
    } else if (app.got_subcommand(count_cmd)) {
      ctx.result.command = "count-middles";
      run_count_middles(ctx, count_m, count_gap);
    } else if (app.got_subcommand(witness_cmd)) {
      if (witness_cmd->got_subcommand(sx_cmd)) {
        ctx.result.command = "witness sx";
        ctx.result.inputs = {{"x", sx_x}};
        const WitnessRecord w = construct_sx(sx_x);
        ctx.result.output = w;
        print_witness(ctx, w);
      } else if (witness_cmd->got_subcommand(scan_cmd)) {
        ctx.result.command = "witness scan";
        const IntSet a = resolve_set(scan_set);
        ctx.result.inputs = {{"set", a}, {"from", scan_from}, {"to", scan_to}};
        const auto rows = scan_replicate(a, scan_from, scan_to);
        ctx.result.output = {{"rows", rows}};
        std::size_t kept = 0;
        for (const auto& row : rows) {
          kept += row.preserved ? 1 : 0;
          ctx.text("a = " + std::to_string(row.shift) + "  " + report_line(row.balance));
        }
        ctx.text(std::to_string(kept) + " of " + std::to_string(rows.size()) +
                 " shifts keep |4A| > |2A-2A|");
      } else if (witness_cmd->got_subcommand(search_cmd)) {
        ctx.result.command = "witness search";
        const std::uint64_t seed = search_seed.value_or(fresh_seed());
        ctx.result.inputs = {{"hi", search_hi}, {"p", search_p}, {"trials", search_trials}, {"seed", seed}};
        Rng rng(seed);
        const auto found = random_seed_search(search_hi, search_p, search_trials, rng);
        ctx.result.output = {{"found", found}};
        ctx.text("seed " + std::to_string(seed) + ": " + std::to_string(found.size()) +
                 " sets with |4A| > |2A-2A| in " + std::to_string(search_trials) + " trials");
        for (const auto& w : found) {
          ctx.text("  " + to_list_string(w.set) + "  " + report_line(w.balance));
        }
      } else if (witness_cmd->got_subcommand(seeds_cmd)) {
        ctx.result.command = "witness seeds";
        json list = json::array();
        for (const auto& s : seed_catalog()) {
          list.push_back({{"name", s.name},
                          {"description", s.description},
                          {"set", s.set},
                          {"size_plus", s.size_plus},
                          {"size_minus", s.size_minus}});
          ctx.text(s.name + "  " + to_list_string(s.set) + "  |4A| = " + std::to_string(s.size_plus) +
                   ", |2A-2A| = " + std::to_string(s.size_minus));
        }
        ctx.result.inputs = json::object();
        ctx.result.output = {{"seeds", list}};
      }
    } else if (app.got_subcommand(prove_cmd)) {
      if (prove_cmd->got_subcommand(span_cmd)) {
        ctx.result.command = "prove span";
        prover.checkpoint = checkpoint;
        run_prove(ctx, prover);
      } else {
        ctx.result.command = "prove verify";
        const IntSet a = resolve_set(verify_set);
        ctx.result.inputs = {{"set", a}};
        const BalanceReport r = verify_witness(a);
        ctx.result.output = r;
        ctx.text("balance  " + report_line(r));
      }
    } else if (app.got_subcommand(density_cmd)) {
      if (density_cmd->got_subcommand(mc_cmd)) {
        ctx.result.command = "density mc";
        const std::uint64_t seed = mc_seed.value_or(fresh_seed());
        const Predicate pred = parse_predicate(mc_predicate);
        ctx.result.inputs = {{"n", mc_n},         {"samples", mc_samples}, {"predicate", to_string(pred)},
                             {"p", mc_p},         {"seed", seed}};
        const DensityEstimate e = mc_density(mc_n, mc_samples, pred, mc_p, seed, mc_workers);
        ctx.result.output = e;
        print_estimate(ctx, e);
      } else if (density_cmd->got_subcommand(pn_cmd)) {
        ctx.result.command = "density pn";
        const std::uint64_t seed = mc_seed.value_or(fresh_seed());
        ctx.result.inputs = {{"n", mc_n}, {"alpha", pn_alpha}, {"samples", mc_samples}, {"seed", seed}};
        const DensityEstimate e = mc_pn_probability(mc_n, pn_alpha, mc_samples, seed, mc_workers);
        ctx.result.output = e;
        print_estimate(ctx, e);
      } else if (density_cmd->got_subcommand(bound_cmd)) {
        ctx.result.command = "density bound";
        bound.a = bound_a;
        bound.b = bound_b;
        bound.c = bound_c;
        ctx.result.inputs = {{"a", bound_a}, {"b", bound_b}, {"c", bound_c}, {"r", bound.r}, {"n0", bound.n0}};
        const long double v = lower_bound_sum(bound);
        ctx.result.output = {{"value", static_cast<double>(v)}, {"value_text", fmt_ld(v)}};
        ctx.text("sum = " + fmt_ld(v));
      } else {
        ctx.result.command = "density exponent";
        ctx.result.inputs = {{"f", exp_f}, {"b", exp_b}};
        const long double alpha = alpha_of_f(exp_f);
        const long double expo = exponent_of_f(exp_f, exp_b);
        ctx.result.output = {{"alpha", static_cast<double>(alpha)},
                             {"exponent", static_cast<double>(expo)},
                             {"alpha_text", fmt_ld(alpha)},
                             {"exponent_text", fmt_ld(expo)}};
        ctx.text("alpha    = " + fmt_ld(alpha));
        ctx.text("exponent = " + fmt_ld(expo));
      }
    }
  } catch (const VerificationError& e) {
    ctx.result.exit_code = kVerificationFailure;
    ctx.result.output = {{"error", e.what()}};
    err << "verification failure: " << e.what() << '\n';
  } catch (const CheckpointError& e) {
    ctx.result.exit_code = kVerificationFailure;
    ctx.result.output = {{"error", e.what()}};
    err << "checkpoint error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    // SetError, ConstructionError and UsageError.
    ctx.result.exit_code = kUsage;
    ctx.result.output = {{"error", e.what()}};
    err << "error: " << e.what() << '\n';
  }

  if (ctx.as_json) {
    out << json{{"command", ctx.result.command},
                {"inputs", ctx.result.inputs},
                {"output", ctx.result.output},
                {"exit_code", ctx.result.exit_code}}
               .dump(2)
        << '\n';
  }
  return ctx.result;
}

}  // namespace gmstd::cli
