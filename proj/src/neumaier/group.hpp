#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neumaier {

using Element = std::uint32_t;
using ElementSet = std::vector<Element>;  // sorted, unique

// Hard cap on the order of any group built by closure or product.
inline constexpr std::size_t kOrderCap = 20000;
// Groups up to this order get a full O(n^3) associativity check.
inline constexpr std::size_t kFullAssociativityCheck = 512;

using Permutation = std::vector<std::uint32_t>;  // one-line image array, 0-based

struct PermutationRep {
  std::size_t degree = 0;
  std::vector<Permutation> images;  // images[x] is the permutation of element x
};

// A finite group as an explicit multiplication table. Element 0 is the
// identity. Immutable once built; safe to share between threads.
class GroupTable {
 public:
  static constexpr Element identity = 0;

  std::size_t order() const { return order_; }
  Element mul(Element x, Element y) const { return mult_[std::size_t{x} * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  Element power(Element x, long long exponent) const;
  std::size_t element_order(Element x) const;

  bool is_abelian() const { return abelian_; }
  const std::string& description() const { return description_; }

  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Element>& generators() const { return gens_; }
  std::optional<Element> find_generator(std::string_view name) const;

  // Shortest word over the generators and their inverses, e.g. "b*a^3".
  const std::string& label(Element x) const { return labels_[x]; }

  const std::optional<PermutationRep>& permutations() const { return perms_; }
  // Offset used when reading cycle notation such as "(1,3)(2,4)".
  unsigned cycle_base() const { return cycle_base_; }
  void set_cycle_base(unsigned base) { cycle_base_ = base; }

  // Replaces generator names in order; names must be distinct identifiers.
  void rename_generators(std::span<const std::string> names);

  // Re-runs every table invariant; throws on violation.
  void validate() const;

  // Raw constructor used by the builders. Validates the table.
  GroupTable(std::size_t order, std::vector<Element> mult, std::vector<std::string> names,
             std::vector<Element> gens, std::string description,
             std::optional<PermutationRep> perms = std::nullopt);

 private:
  void compute_labels();

  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::string> names_;
  std::vector<Element> gens_;
  std::vector<std::string> labels_;
  std::string description_;
  std::optional<PermutationRep> perms_;
  unsigned cycle_base_ = 0;
  bool abelian_ = false;
};

GroupTable build_cyclic(std::size_t n);
// Dihedral group of order 2m with rotation "a" and reflection "b".
GroupTable build_dihedral(std::size_t m);
GroupTable build_direct_product(const GroupTable& g, const GroupTable& h);
GroupTable build_direct_product(std::span<const GroupTable> factors);
GroupTable build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                   std::vector<std::string> names = {});

bool is_subgroup(const GroupTable& g, const ElementSet& t);
ElementSet subgroup_generated(const GroupTable& g, const ElementSet& t);
// Right cosets Hg, ordered by their smallest element.
std::vector<ElementSet> cosets(const GroupTable& g, const ElementSet& h);
// All subgroups of the given order.
std::vector<ElementSet> subgroups_of_order(const GroupTable& g, std::size_t order);

ElementSet normalize(ElementSet s);
ElementSet all_elements(const GroupTable& g);

}  // namespace neumaier
