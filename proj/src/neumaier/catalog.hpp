#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "neumaier/algebra.hpp"
#include "neumaier/neumaier.hpp"

namespace neumaier {

struct CatalogEntry {
  std::string name;
  nlohmann::json group;  // spec accepted by group_from_json
  std::vector<std::string> elements;
  ClassKind expected_kind = ClassKind::strictly_neumaier;
  NeumaierParameters expected;  // (a, c) in computed order; mu set when strongly regular
  std::string description;
  // Published typography when it lists (a, c) in another order; empty otherwise.
  std::string printed_parameters;
};

const std::vector<CatalogEntry>& catalog_entries();
// Throws unknown_entry.
const CatalogEntry& find_entry(const std::string& name);

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::string group_description;
  ElementSet connection_set;
  std::optional<Classification> classification;
  std::optional<std::int64_t> diameter;
  std::optional<std::int64_t> algebra_nexus;  // fitted from S*C for the witness clique
  std::optional<PdsFit> pds;
  std::optional<QuotientMatrix> quotient;
  std::optional<IntegerEigenvalueCheck> eigenvalues;
  ElementSet schur_clique;  // subgroup clique used for the closure check, if any
  std::vector<CheckResult> checks;
  std::string error;  // set when the entry could not be built at all
  bool pass = false;
};

VerificationReport verify_entry(const CatalogEntry& entry);
VerificationReport verify_entry(const std::string& name);

struct CatalogSummary {
  std::vector<VerificationReport> reports;  // catalog order
  std::size_t passed = 0;
  std::size_t failed = 0;
  double elapsed_ms = 0;
};

// threads = 0 picks the hardware concurrency.
CatalogSummary verify_all(unsigned threads = 0);

bool is_cyclic(const GroupTable& g);

}  // namespace neumaier
