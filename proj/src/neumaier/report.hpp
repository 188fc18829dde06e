#pragma once

#include <optional>

#include <json.hpp>

#include "neumaier/catalog.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/search.hpp"

namespace neumaier {

nlohmann::json to_json(const NeumaierParameters& p);
nlohmann::json labels_json(const GroupTable& g, const ElementSet& s);
nlohmann::json to_json(const IntegerEigenvalueCheck& e);
nlohmann::json to_json(const FeasibilityVerdict& v);
nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CatalogSummary& s);

// Classification of Cay(G,S) with connectivity and diameter.
nlohmann::json check_report(const ConnectionSet& s);

// Every group-ring identity for S, using `clique` or else the first
// identity-anchored regular clique. Throws not_a_clique for a bad clique.
nlohmann::json algebra_report(const ConnectionSet& s, const std::optional<ElementSet>& clique);

nlohmann::json search_report(const GroupTable& g, const NeumaierParameters& target, const SearchResult& r);

nlohmann::json feasibility_report(std::int64_t k, std::optional<std::int64_t> max_n);

}  // namespace neumaier
