#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/neumaier.hpp"

namespace neumaier {

struct ConstraintReport {
  std::string name;
  std::string relation;  // how left and right compare when the constraint passes
  std::int64_t left = 0;
  std::int64_t right = 0;
  bool pass = false;
};

enum class FeasibilityStatus { feasible, eliminated, existence_unresolved };
const char* feasibility_status_name(FeasibilityStatus s);

// How the published case analysis treats a (k, c, a) case.
enum class ClaimKind {
  none,
  example,             // a Cayley example is known
  claimed_eliminated,  // said to be impossible by a counting argument
  known_nonexistent,   // no graph at all, per published tables
  not_cayley,          // graph exists but is not a Cayley graph
  not_neumaier,        // the strongly regular graph exists but has no regular clique
  no_cayley_by_search, // exhaustive search over every group of order n finds nothing
};
const char* claim_kind_name(ClaimKind kind);

struct LiteratureClaim {
  ClaimKind kind = ClaimKind::none;
  std::string text;
};

struct FeasibilityVerdict {
  std::int64_t n = 0, k = 0, a = 0, c = 0;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  FeasibilityStatus status = FeasibilityStatus::feasible;
  std::vector<ConstraintReport> reasons;
  std::optional<IntegerEigenvalueCheck> eigenvalues;  // when mu is computable
  LiteratureClaim claim;
  std::string family;  // recognised construction, e.g. "K_{4,4}"
  std::string resolution;  // outcome of searching every group of order n, if run

  bool survives() const { return status != FeasibilityStatus::eliminated; }
  std::string tuple_string() const;
};

// c(k-c+1) = (n-c)a
ConstraintReport clique_count_ok(std::int64_t n, std::int64_t k, std::int64_t c, std::int64_t a);
// Solves (k-c+1)(a-1) = (c-1)(lambda-c+2) with c-2 <= lambda <= k-1.
std::optional<std::int64_t> lambda_from_clique(std::int64_t k, std::int64_t c, std::int64_t a);
// (c-1)(k-lambda-1) = (n-k-1)a
ConstraintReport nonneighbour_count_ok(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                       std::int64_t a);
// lambda solving the nonneighbour count, if any lies in [c-2, k-1].
std::optional<std::int64_t> lambda_from_nonneighbours(std::int64_t n, std::int64_t k, std::int64_t c,
                                                      std::int64_t a);
// (k-c+1)(k-lambda-1) = (n-k-1)(mu-a), a <= mu <= k.
std::optional<std::int64_t> srg_mu(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                   std::int64_t a);
// max{1 + k + k(k-2), 2k}: vertex bound for diameter two.
std::int64_t vertex_bound(std::int64_t k);
// Twice the minimum edge count k(k-lambda) + (k-c+1)(a-1) + (k-c+1)(lambda-a+1)/2 + (c-1)(c-2)/2.
std::int64_t edge_lower_bound_doubled(std::int64_t k, std::int64_t lambda, std::int64_t c, std::int64_t a);
// Compares n*k (twice the edge count) against the doubled bound.
ConstraintReport edge_bound_check(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                  std::int64_t a);
bool edge_bound_tight(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c, std::int64_t a);

// a = 1 forces k - 2c + 3 > 0.
ConstraintReport nexus_one_ok(std::int64_t k, std::int64_t c);
// lambda = 1 forces even k.
ConstraintReport lambda_one_parity_ok(std::int64_t k, std::int64_t lambda);
// c >= k only for the 4-cycle (k = 2).
ConstraintReport large_clique_ok(std::int64_t k, std::int64_t c);
// nexus equal to the clique size means the graph is complete.
ConstraintReport complete_flag(std::int64_t a, std::int64_t c);
// n*k must be even.
ConstraintReport handshake_ok(std::int64_t n, std::int64_t k);

LiteratureClaim literature_claim(std::int64_t k, std::int64_t c, std::int64_t a);

// Exhaustive-search outcome for an unresolved case; the integration tests
// re-run each of these searches.
struct SearchResolution {
  bool exists = false;
  std::string text;
};
std::optional<SearchResolution> search_resolution(std::int64_t k, std::int64_t c, std::int64_t a);

inline constexpr std::int64_t kMaxValency = 20;

// All (c, a) cases for valency k, sorted by (c, n). Throws for k outside [2, 20].
std::vector<FeasibilityVerdict> enumerate_feasible(std::int64_t k, std::optional<std::int64_t> max_n = std::nullopt);

}  // namespace neumaier
