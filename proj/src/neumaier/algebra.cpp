#include "neumaier/algebra.hpp"

#include <algorithm>

#include "neumaier/error.hpp"

namespace neumaier {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "group-ring coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "group-ring coefficient overflow");
  return r;
}

void same_group(const AlgebraElement& u, const AlgebraElement& v) {
  if (&u.group() != &v.group()) throw Error(Errc::group_mismatch, "group-ring elements live in different groups");
}

std::vector<char> indicator(const GroupTable& g, const ElementSet& t) {
  std::vector<char> in(g.order(), 0);
  for (auto x : t) {
    if (x >= g.order()) throw Error(Errc::invalid_argument, "element index out of range");
    in[x] = 1;
  }
  return in;
}

void require_connection_set(const GroupTable& g, const ElementSet& s) {
  auto in = indicator(g, s);
  if (in[GroupTable::identity]) throw Error(Errc::identity_in_set, "connection set contains the identity");
  for (auto x : s)
    if (!in[g.inv(x)])
      throw Error(Errc::not_inverse_closed, "connection set is not inverse-closed at " + g.label(x));
}

void require_identity_in_clique(const ElementSet& c) {
  if (!std::binary_search(c.begin(), c.end(), GroupTable::identity))
    throw Error(Errc::invalid_argument, "clique must contain the identity");
}

ElementSet difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet complement_of(const GroupTable& g, const ElementSet& t) { return difference(all_elements(g), t); }

ElementSet outside(const GroupTable& g, const ElementSet& s) {
  ElementSet se = s;
  se.push_back(GroupTable::identity);
  return complement_of(g, normalize(std::move(se)));
}

// Linear combination of block indicators.
AlgebraElement combo(const GroupTable& g, std::initializer_list<std::pair<std::int64_t, const ElementSet*>> terms) {
  AlgebraElement r(g);
  for (const auto& [coef, set] : terms)
    for (auto x : *set) r[x] = checked_add(r[x], coef);
  return r;
}

}  // namespace

AlgebraElement::AlgebraElement(const GroupTable& g, std::vector<std::int64_t> coeffs)
    : group_(&g), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != g.order()) throw Error(Errc::invalid_argument, "coefficient vector length != group order");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  same_group(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  same_group(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, other.coeffs_[i]));
  return *this;
}

AlgebraElement operator*(std::int64_t s, AlgebraElement a) {
  for (auto& c : a.coeffs_) c = checked_mul(s, c);
  return a;
}

AlgebraElement subset_sum(const GroupTable& g, const ElementSet& t) {
  AlgebraElement r(g);
  auto in = indicator(g, t);
  for (Element x = 0; x < g.order(); ++x) r[x] = in[x];
  return r;
}

AlgebraElement convolve(const AlgebraElement& u, const AlgebraElement& v) {
  same_group(u, v);
  const GroupTable& g = u.group();
  AlgebraElement r(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (u[x] == 0) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (v[y] == 0) continue;
      Element z = g.mul(x, y);
      r[z] = checked_add(r[z], checked_mul(u[x], v[y]));
    }
  }
  return r;
}

AlgebraElement involute(const AlgebraElement& u) {
  const GroupTable& g = u.group();
  AlgebraElement r(g);
  for (Element x = 0; x < g.order(); ++x) r[g.inv(x)] = u[x];
  return r;
}

std::optional<Element> first_mismatch(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  same_group(lhs, rhs);
  for (Element x = 0; x < lhs.group().order(); ++x)
    if (lhs[x] != rhs[x]) return x;
  return std::nullopt;
}

void validate_basis(const GroupTable& g, const PartitionBasis& basis) {
  if (basis.blocks.empty() || basis.blocks[0] != ElementSet{GroupTable::identity})
    throw Error(Errc::invalid_argument, "basis block 0 must be {identity}");
  std::vector<int> owner(g.order(), -1);
  for (std::size_t b = 0; b < basis.blocks.size(); ++b) {
    if (basis.blocks[b].empty()) throw Error(Errc::invalid_argument, "basis has an empty block");
    for (auto x : basis.blocks[b]) {
      if (x >= g.order()) throw Error(Errc::invalid_argument, "element index out of range");
      if (owner[x] >= 0) throw Error(Errc::invalid_argument, "basis blocks overlap");
      owner[x] = static_cast<int>(b);
    }
  }
  for (Element x = 0; x < g.order(); ++x)
    if (owner[x] < 0) throw Error(Errc::invalid_argument, "basis does not cover the group");
  // Schur ring axiom: the inverse of a block is again a block (possibly itself)
  for (std::size_t b = 0; b < basis.blocks.size(); ++b) {
    const auto& blk = basis.blocks[b];
    int target = owner[g.inv(blk.front())];
    bool ok = basis.blocks[static_cast<std::size_t>(target)].size() == blk.size();
    for (auto x : blk) ok = ok && owner[g.inv(x)] == target;
    if (!ok)
      throw Error(Errc::not_inverse_closed, "inverse of basis block " + std::to_string(b) + " is not a block");
  }
}

std::optional<std::int64_t> check_regular_clique_identity(const GroupTable& g, const ElementSet& s,
                                                          const ElementSet& c) {
  require_connection_set(g, s);
  require_identity_in_clique(c);
  ElementSet rest = complement_of(g, c);
  if (rest.empty()) return std::nullopt;
  AlgebraElement lhs = convolve(subset_sum(g, s), subset_sum(g, c));
  std::int64_t a = lhs[rest.front()];
  if (a < 0) return std::nullopt;
  auto rhs = combo(g, {{a, &rest}, {static_cast<std::int64_t>(c.size()) - 1, &c}});
  if (lhs != rhs) return std::nullopt;
  return a;
}

std::optional<PdsFit> check_pds_identity(const GroupTable& g, const ElementSet& s) {
  require_connection_set(g, s);
  ElementSet non = outside(g, s);
  if (non.empty() || s.empty()) return std::nullopt;
  AlgebraElement sq = convolve(subset_sum(g, s), subset_sum(g, s));
  std::int64_t lambda = sq[s.front()];
  std::int64_t mu = sq[non.front()];
  ElementSet e{GroupTable::identity};
  ElementSet all = all_elements(g);
  auto rhs = combo(g, {{mu, &all}, {lambda - mu, &s}, {static_cast<std::int64_t>(s.size()) - mu, &e}});
  if (sq != rhs) return std::nullopt;
  return PdsFit{lambda, mu};
}

bool check_second_identity(const GroupTable& g, const ElementSet& s, const ElementSet& c,
                           const NeumaierConstants& k, Side side) {
  auto a = check_regular_clique_identity(g, s, c);
  if (!a || *a != k.nexus)
    throw Error(Errc::invalid_argument, "clique is not a regular clique with the stated nexus");
  ElementSet s_minus_c = difference(s, c);
  ElementSet c_minus_e = difference(c, {GroupTable::identity});
  ElementSet non = outside(g, s);
  ElementSet e{GroupTable::identity};
  const auto ns = static_cast<std::int64_t>(s.size());
  const auto nc = static_cast<std::int64_t>(c.size());
  // S - C as a group-ring difference; it carries -1 at the identity.
  const AlgebraElement sum_s = subset_sum(g, s);
  const AlgebraElement diff = sum_s - subset_sum(g, c);
  AlgebraElement lhs = side == Side::left ? convolve(sum_s, diff) : convolve(diff, sum_s);
  auto rhs = combo(g, {{k.mu - k.nexus, &non},
                       {k.lambda - k.nexus, &s_minus_c},
                       {k.lambda - nc + 1, &c_minus_e},
                       {ns - nc + 1, &e}});
  return lhs == rhs;
}

bool check_complement_identities(const GroupTable& g, const ElementSet& s, const ElementSet& c,
                                 const NeumaierConstants& k) {
  auto a = check_regular_clique_identity(g, s, c);
  if (!a || *a != k.nexus)
    throw Error(Errc::invalid_argument, "clique is not a regular clique with the stated nexus");
  ElementSet s_minus_c = difference(s, c);
  ElementSet c_minus_e = difference(c, {GroupTable::identity});
  ElementSet non = outside(g, s);
  ElementSet g_minus_c = complement_of(g, c);
  const auto ns = static_cast<std::int64_t>(s.size());
  const auto nc = static_cast<std::int64_t>(c.size());

  AlgebraElement n_bar = subset_sum(g, non);
  bool first = convolve(n_bar, subset_sum(g, c)) == combo(g, {{nc - k.nexus, &g_minus_c}});
  auto rhs = combo(g, {{ns - k.mu - nc + k.nexus + 1, &non},
                       {ns - nc - k.lambda + k.nexus - 1, &s_minus_c},
                       {ns - k.lambda - 1, &c_minus_e}});
  bool second = convolve(n_bar, subset_sum(g, s_minus_c)) == rhs;
  return first && second;
}

std::variant<StructureConstants, SchurFailure> check_schur_closure(const GroupTable& g,
                                                                  const PartitionBasis& basis) {
  validate_basis(g, basis);
  const std::size_t d = basis.blocks.size();
  std::vector<AlgebraElement> sums;
  for (const auto& b : basis.blocks) sums.push_back(subset_sum(g, b));
  StructureConstants p(d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      AlgebraElement prod = convolve(sums[i], sums[j]);
      // Report the earliest element (index order) whose coefficient disagrees
      // with the first element of its block.
      std::optional<Element> bad;
      for (std::size_t k = 0; k < d; ++k) {
        const auto& block = basis.blocks[k];
        std::int64_t v = prod[block.front()];
        p[i][j][k] = v;
        for (auto x : block)
          if (prod[x] != v && (!bad || x < *bad)) bad = x;
      }
      if (bad) return SchurFailure{i, j, *bad};
    }
  }
  return p;
}

PartitionBasis neumaier_basis(const GroupTable& g, const ElementSet& s, const ElementSet& c) {
  PartitionBasis basis;
  basis.blocks.push_back({GroupTable::identity});
  for (auto block : {difference(c, {GroupTable::identity}), difference(s, c), outside(g, s)})
    if (!block.empty()) basis.blocks.push_back(std::move(block));
  return basis;
}

}  // namespace neumaier
