#pragma once

#include <json.hpp>

#include "gmstd/classify.hpp"
#include "gmstd/density.hpp"
#include "gmstd/families.hpp"
#include "gmstd/int_set.hpp"
#include "gmstd/prover.hpp"
#include "gmstd/witness.hpp"

// nlohmann::json conversions. Field names are the stable output schema of
// the CLI's --json mode.
namespace gmstd {

void to_json(nlohmann::json& j, const IntSet& s);
void from_json(const nlohmann::json& j, IntSet& s);
void to_json(nlohmann::json& j, const BalanceReport& r);
void to_json(nlohmann::json& j, const FringeWindow& w);
void to_json(nlohmann::json& j, const FoldFringe& f);
void to_json(nlohmann::json& j, const FringeProfile& p);
void to_json(nlohmann::json& j, const Construction& c);
void to_json(nlohmann::json& j, const WitnessRecord& w);
void to_json(nlohmann::json& j, const ReplicationRow& r);
void to_json(nlohmann::json& j, const DensityEstimate& e);
void to_json(nlohmann::json& j, const ProofResult& r);

std::string_view to_string(ProofStatus s);

}  // namespace gmstd
