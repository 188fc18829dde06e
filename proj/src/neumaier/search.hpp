#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "neumaier/neumaier.hpp"

namespace neumaier {

inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000;

// Candidate connection sets are unions of inverse orbits {x, x^-1}. Orbits of
// size one are involutions.
struct SearchSpace {
  const GroupTable* group = nullptr;
  NeumaierParameters target;
  ElementSet forced;                  // always contained in every candidate
  std::vector<ElementSet> orbits;     // free orbits, ordered by smallest element
  std::size_t free_weight = 0;        // k - |forced|
};

// Throws invalid_argument when n differs from the group order or the forced
// set is not inverse-closed and identity-free.
SearchSpace make_search_space(const GroupTable& g, const NeumaierParameters& target, const ElementSet& forced = {});

// Number of candidates, saturating at UINT64_MAX.
std::uint64_t count_candidates(const SearchSpace& space);

// Visits each candidate in lexicographic order of orbit choices. Return false
// to stop. Returns the number of candidates visited.
std::uint64_t enumerate_connection_sets(const SearchSpace& space,
                                        const std::function<bool(const ElementSet&)>& visit);

struct SearchOptions {
  bool all = true;             // false: stop at the lexicographically first match
  bool anchor_clique = false;  // force a subgroup of order c into S
  unsigned threads = 1;
  std::uint64_t cap = kDefaultSearchCap;
};

struct SearchStats {
  std::uint64_t candidates = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t lambda_rejected = 0;   // failed at identity edges or globally
  std::uint64_t clique_rejected = 0;   // no regular clique with the target (c, a)
  std::uint64_t mu_rejected = 0;
  std::uint64_t matches = 0;
};

struct SearchResult {
  std::vector<ElementSet> sets;  // sorted canonically
  SearchStats stats;
  std::size_t anchors = 0;       // subgroups of order c tried in anchored mode
  bool anchor_proven = false;    // anchoring is a theorem (abelian, c = 3, a = 1)
  std::vector<std::string> warnings;
  // Abelian c = 3, a = 1 matches whose identity-anchored witness cliques are
  // not subgroups. A theorem says this stays zero.
  std::size_t nonsubgroup_witnesses = 0;
  double elapsed_ms = 0;
};

// True when the set gives a Neumaier graph with the target parameters.
bool matches_target(const CayleyGraph& graph, const NeumaierParameters& target);

// Throws search_too_large when the candidate count exceeds options.cap.
SearchResult search_neumaier(const GroupTable& g, const NeumaierParameters& target, const SearchOptions& options = {});

struct NonexistenceReport {
  bool proven_empty = false;
  std::uint64_t candidates = 0;
  std::size_t witnesses = 0;
  double elapsed_ms = 0;
};

NonexistenceReport verify_nonexistence(const GroupTable& g, const NeumaierParameters& target,
                                       const SearchOptions& options = {});

}  // namespace neumaier
