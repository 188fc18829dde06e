#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neumaier/bitset.hpp"
#include "neumaier/group.hpp"
#include "neumaier/intmath.hpp"

namespace neumaier {

// Inverse-closed, identity-free subset of a group.
class ConnectionSet {
 public:
  // Throws identity_in_set / not_inverse_closed.
  ConnectionSet(const GroupTable& g, ElementSet members);

  const GroupTable& group() const { return *group_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const;

 private:
  const GroupTable* group_;
  ElementSet members_;
};

// Cay(G,S): u ~ v iff u*v^-1 in S. Right translation x -> x*g is an automorphism.
class CayleyGraph {
 public:
  explicit CayleyGraph(const ConnectionSet& s);

  const GroupTable& group() const { return *group_; }
  const ElementSet& connection_set() const { return set_; }
  std::size_t order() const { return rows_.size(); }
  std::size_t degree() const { return set_.size(); }

  bool adjacent(Element u, Element v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Element u) const { return rows_[u]; }
  std::size_t common_neighbors(Element u, Element v) const { return rows_[u].count_and(rows_[v]); }

  bool is_connected() const;
  bool is_complete() const { return set_.size() + 1 == order(); }
  // BFS eccentricity of vertex 0; throws not_connected.
  std::size_t diameter() const;

 private:
  const GroupTable* group_;
  ElementSet set_;
  std::vector<Bitset> rows_;
};

// Connection set of the complement graph: G \ (S u {e}).
ConnectionSet complement_set(const ConnectionSet& s);

using QuotientMatrix = std::vector<std::vector<std::int64_t>>;

// Quotient matrix if the partition is equitable.
std::optional<QuotientMatrix> equitable_quotient(const CayleyGraph& graph, const std::vector<ElementSet>& partition);

// Exact eigenvalues of a 2x2 integer matrix; throws non_square_discriminant.
IntegerRoots quotient_eigenvalues(const QuotientMatrix& m);

}  // namespace neumaier
