#include "gmstd/json_io.hpp"

namespace gmstd {

void to_json(nlohmann::json& j, const IntSet& s) { j = s.elements(); }

void from_json(const nlohmann::json& j, IntSet& s) {
  s = IntSet::from_elements(j.get<std::vector<IntSet::value_type>>());
}

void to_json(nlohmann::json& j, const BalanceReport& r) {
  j = {{"size_plus", r.size_plus},
       {"size_minus", r.size_minus},
       {"delta", r.delta},
       {"dominant", to_string(r.dominant)}};
}

void to_json(nlohmann::json& j, const FringeWindow& w) {
  j = {{"lo", w.lo}, {"hi", w.hi}, {"present", w.present}, {"absent", w.absent}};
}

void to_json(nlohmann::json& j, const FoldFringe& f) {
  j = {{"fold", {f.spec.plus, f.spec.minus}},
       {"range", {f.range_lo, f.range_hi}},
       {"size", f.size},
       {"low", f.low},
       {"high", f.high},
       {"middle_full", f.middle_full}};
}

void to_json(nlohmann::json& j, const FringeProfile& p) {
  j = {{"n", p.n}, {"sums", p.sums}, {"differences", p.differences}, {"pn4", p.pn4}};
}

void to_json(nlohmann::json& j, const Construction& c) {
  j = {{"set", c.set},
       {"compact", to_compact_string(c.set)},
       {"size_plus", c.balance.size_plus},
       {"size_minus", c.balance.size_minus},
       {"delta", c.balance.delta},
       {"dominant", to_string(c.balance.dominant)},
       {"base_delta", c.base_balance.delta},
       {"pn4", c.pn4}};
}

void to_json(nlohmann::json& j, const WitnessRecord& w) {
  j = {{"x", w.x},
       {"set", w.set},
       {"size_plus", w.balance.size_plus},
       {"size_minus", w.balance.size_minus},
       {"delta", w.verified_delta},
       {"rule", to_string(w.rule)}};
}

void to_json(nlohmann::json& j, const ReplicationRow& r) {
  j = {{"a", r.shift},
       {"size_plus", r.balance.size_plus},
       {"size_minus", r.balance.size_minus},
       {"delta", r.balance.delta},
       {"preserved", r.preserved}};
}

void to_json(nlohmann::json& j, const DensityEstimate& e) {
  j = {{"n", e.n},
       {"samples", e.samples},
       {"hits", e.hits},
       {"estimate", e.estimate},
       {"ci95", e.ci95},
       {"seed", e.seed}};
}

std::string_view to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::no_witness:
      return "no_witness";
    case ProofStatus::witnesses_found:
      return "witnesses_found";
    case ProofStatus::interrupted:
      return "interrupted";
  }
  return "unknown";
}

void to_json(nlohmann::json& j, const ProofResult& r) {
  j = {{"status", to_string(r.status)},
       {"span_bound", r.span_bound},
       {"cursor", r.cursor},
       {"cursor_end", r.cursor_end},
       {"sets_examined", r.sets_examined},
       {"raw_sets", r.raw_sets},
       {"witnesses", r.witnesses}};
}

}  // namespace gmstd
