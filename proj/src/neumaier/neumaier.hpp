#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/cayley.hpp"

namespace neumaier {

// (n, k, lambda; a, c) with mu for the strongly regular case.
struct NeumaierParameters {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t a = 0;  // nexus
  std::int64_t c = 0;  // clique size
  std::optional<std::int64_t> mu;

  // "(n,k,lambda;a,c)" or "(n,k,lambda;a,c;mu=..)".
  std::string to_string() const;
  friend bool operator==(const NeumaierParameters&, const NeumaierParameters&) = default;
};

// Names of the counting identities the tuple violates; empty when all hold.
std::vector<std::string> violated_identities(const NeumaierParameters& p);

enum class ClassKind {
  complete,
  not_edge_regular,
  edge_regular_no_regular_clique,
  strictly_neumaier,
  strongly_regular_neumaier,
};

const char* class_kind_name(ClassKind kind);

struct RegularClique {
  ElementSet clique;  // contains the identity
  std::int64_t nexus;
};

struct Classification {
  ClassKind kind = ClassKind::not_edge_regular;
  std::optional<std::int64_t> lambda;
  std::optional<NeumaierParameters> params;
  ElementSet witness;                  // first regular clique (lexicographic)
  std::vector<RegularClique> cliques;  // every identity-anchored regular clique

  bool is_neumaier() const {
    return kind == ClassKind::strictly_neumaier || kind == ClassKind::strongly_regular_neumaier;
  }
};

std::optional<std::int64_t> edge_regular_lambda(const CayleyGraph& graph);
// Constant common-neighbour count over non-adjacent pairs. Pairs through the
// identity are scanned first as a fast reject.
std::optional<std::int64_t> strong_regular_mu(const CayleyGraph& graph);

struct Nexus {
  std::int64_t a;
  bool forces_complete;  // a == |C|
};
// Throws not_a_clique when c is not a clique.
std::optional<Nexus> nexus_of_clique(const CayleyGraph& graph, const ElementSet& c);

// Visits each clique of the given size containing vertex 0 in lexicographic
// order. Return false from the visitor to stop.
void enumerate_cliques_containing_identity(const CayleyGraph& graph, std::size_t size,
                                           const std::function<bool(const ElementSet&)>& visit);
std::vector<ElementSet> cliques_containing_identity(const CayleyGraph& graph, std::size_t size);

// Regular cliques through the identity, sizes 2..k+1 (or just `only_size`).
std::vector<RegularClique> find_regular_cliques(const CayleyGraph& graph,
                                                std::optional<std::size_t> only_size = std::nullopt);

// Throws not_connected for disconnected graphs.
Classification classify(const CayleyGraph& graph);

// Roots r > s of x^2 - (lambda-mu)x - (k-mu), if both are integers.
std::optional<IntegerRoots> srg_eigenvalues(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t mu);

struct IntegerEigenvalueCheck {
  bool integral = false;   // discriminant is a square and the roots are integers
  std::int64_t r = 0;
  std::int64_t s = 0;
  bool r_matches = false;  // r == c - a - 1
  bool s_matches = false;  // s == -mu / a
  bool hoffman = false;    // m = -s divides k, c = 1 + k/m, a = mu/m
  bool passes() const { return integral && r_matches && s_matches && hoffman; }
};
// Needs params.mu.
IntegerEigenvalueCheck integer_eigs_check(const NeumaierParameters& params);

}  // namespace neumaier
