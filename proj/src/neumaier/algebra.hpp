#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "neumaier/group.hpp"

namespace neumaier {

// Integer element of the group ring ZG, indexed by element.
class AlgebraElement {
 public:
  explicit AlgebraElement(const GroupTable& g) : group_(&g), coeffs_(g.order(), 0) {}
  AlgebraElement(const GroupTable& g, std::vector<std::int64_t> coeffs);

  const GroupTable& group() const { return *group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](Element x) const { return coeffs_[x]; }
  std::int64_t& operator[](Element x) { return coeffs_[x]; }

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(std::int64_t s, AlgebraElement a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  const GroupTable* group_;
  std::vector<std::int64_t> coeffs_;
};

AlgebraElement subset_sum(const GroupTable& g, const ElementSet& t);
// Product in ZG; throws on overflow or group mismatch.
AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement involute(const AlgebraElement& u);
// Smallest element index where the two sides differ.
std::optional<Element> first_mismatch(const AlgebraElement& lhs, const AlgebraElement& rhs);

struct PartitionBasis {
  std::vector<ElementSet> blocks;  // blocks[0] == {identity}
};

// Disjoint cover of G with the identity alone in block 0.
void validate_basis(const GroupTable& g, const PartitionBasis& basis);

// S*C = a*(G\C) + (|C|-1)*C; returns the nexus a when it fits.
std::optional<std::int64_t> check_regular_clique_identity(const GroupTable& g, const ElementSet& s,
                                                          const ElementSet& c);

struct PdsFit {
  std::int64_t lambda;
  std::int64_t mu;
  friend bool operator==(const PdsFit&, const PdsFit&) = default;
};
// S^2 = mu*G + (lambda-mu)*S + (|S|-mu)*e. Complete graphs (no element outside
// S and e) have no mu and return nullopt.
std::optional<PdsFit> check_pds_identity(const GroupTable& g, const ElementSet& s);

struct NeumaierConstants {
  std::int64_t lambda;
  std::int64_t mu;
  std::int64_t nexus;
};

// Which side the connection-set sum multiplies from.
enum class Side { left, right };

// S*(S-C) = (mu-a)*N + (lambda-a)*(S\C) + (lambda-|C|+1)*(C\e) + (|S|-|C|+1)*e,
// where N = G\(S u e) and S-C is the group-ring difference, equal to
// (S\C) - e since the identity lies in C. `side` = right evaluates (S-C)*S.
bool check_second_identity(const GroupTable& g, const ElementSet& s, const ElementSet& c,
                           const NeumaierConstants& k, Side side = Side::left);

// N*C = (|C|-a)*(G\C) and
// N*(S\C) = (|S|-mu-|C|+a+1)*N + (|S|-|C|-lambda+a-1)*(S\C) + (|S|-lambda-1)*(C\e).
bool check_complement_identities(const GroupTable& g, const ElementSet& s, const ElementSet& c,
                                 const NeumaierConstants& k);

// p[i][j][k]: coefficient of block k in T_i * T_j.
using StructureConstants = std::vector<std::vector<std::vector<std::int64_t>>>;

struct SchurFailure {
  std::size_t i;
  std::size_t j;
  Element element;  // coefficient here differs from the rest of its block
};

std::variant<StructureConstants, SchurFailure> check_schur_closure(const GroupTable& g,
                                                                  const PartitionBasis& basis);

// {e}, C\e, S\C, G\(S u e) with empty blocks dropped.
PartitionBasis neumaier_basis(const GroupTable& g, const ElementSet& s, const ElementSet& c);

}  // namespace neumaier
