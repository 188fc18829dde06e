#include "neumaier/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "neumaier/error.hpp"

namespace neumaier {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n))
      throw Error(Errc::invalid_argument, "generator name '" + n + "' is not an identifier");
    if (n == "e") throw Error(Errc::invalid_argument, "generator name 'e' is reserved for the identity");
    if (!seen.insert(n).second) throw Error(Errc::invalid_argument, "duplicate generator name '" + n + "'");
  }
}

void check_order(std::size_t n) {
  if (n > kOrderCap)
    throw Error(Errc::group_too_large,
                "group too large: order " + std::to_string(n) + " exceeds cap " + std::to_string(kOrderCap));
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<Element> mult, std::vector<std::string> names,
                       std::vector<Element> gens, std::string description,
                       std::optional<PermutationRep> perms)
    : order_(order),
      mult_(std::move(mult)),
      names_(std::move(names)),
      gens_(std::move(gens)),
      description_(std::move(description)),
      perms_(std::move(perms)) {
  if (order_ == 0) throw Error(Errc::invalid_argument, "group order must be positive");
  check_order(order_);
  if (mult_.size() != order_ * order_) throw Error(Errc::invalid_argument, "multiplication table has wrong size");
  if (names_.size() != gens_.size()) throw Error(Errc::invalid_argument, "generator names and elements differ in count");
  check_names(names_);

  inv_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    bool found = false;
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == identity) {
        inv_[x] = y;
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::invalid_argument, "element " + std::to_string(x) + " has no inverse");
  }

  abelian_ = true;
  for (std::size_t i = 0; i < gens_.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (mul(gens_[i], gens_[j]) != mul(gens_[j], gens_[i])) {
        abelian_ = false;
        break;
      }

  validate();
  compute_labels();
}

void GroupTable::validate() const {
  const std::size_t n = order_;
  for (Element x = 0; x < n; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x)
      throw Error(Errc::invalid_argument, "identity law fails at element " + std::to_string(x));
    if (mul(x, inv_[x]) != identity || mul(inv_[x], x) != identity)
      throw Error(Errc::invalid_argument, "inverse law fails at element " + std::to_string(x));
  }
  std::vector<char> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y = 0; y < n; ++y) {
      Element z = mul(x, y);
      if (z >= n || seen[z]) throw Error(Errc::invalid_argument, "row " + std::to_string(x) + " is not a permutation");
      seen[z] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y = 0; y < n; ++y) {
      Element z = mul(y, x);
      if (seen[z]) throw Error(Errc::invalid_argument, "column " + std::to_string(x) + " is not a permutation");
      seen[z] = 1;
    }
  }
  auto assoc = [&](Element x, Element y, Element z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      throw Error(Errc::invalid_argument, "associativity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                              "," + std::to_string(z) + ")");
  };
  if (n <= kFullAssociativityCheck) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0x6e65756d);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 10000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

void GroupTable::compute_labels() {
  // BFS over right multiplication by generators and then their inverses.
  struct Step {
    std::size_t gen;
    int sign;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < gens_.size(); ++i) steps.push_back({i, +1});
  for (std::size_t i = 0; i < gens_.size(); ++i) steps.push_back({i, -1});

  std::vector<std::vector<std::pair<std::size_t, long long>>> words(order_);
  std::vector<char> seen(order_, 0);
  seen[identity] = 1;
  std::deque<Element> queue{identity};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& st : steps) {
      Element g = st.sign > 0 ? gens_[st.gen] : inv_[gens_[st.gen]];
      Element y = mul(x, g);
      if (seen[y]) continue;
      seen[y] = 1;
      auto w = words[x];
      if (!w.empty() && w.back().first == st.gen)
        w.back().second += st.sign;
      else
        w.emplace_back(st.gen, st.sign);
      words[y] = std::move(w);
      queue.push_back(y);
    }
  }
  labels_.assign(order_, "e");
  for (Element x = 1; x < order_; ++x) {
    if (!seen[x]) {
      labels_[x] = "#" + std::to_string(x);
      continue;
    }
    std::string s;
    for (const auto& [gen, exp] : words[x]) {
      if (!s.empty()) s += '*';
      s += names_[gen];
      if (exp != 1) s += "^" + std::to_string(exp);
    }
    labels_[x] = s;
  }
}

Element GroupTable::power(Element x, long long exponent) const {
  if (exponent < 0) {
    x = inv_[x];
    exponent = -exponent;
  }
  std::size_t ord = element_order(x);
  exponent %= static_cast<long long>(ord);
  Element r = identity;
  for (long long i = 0; i < exponent; ++i) r = mul(r, x);
  return r;
}

std::size_t GroupTable::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != identity; y = mul(y, x)) ++k;
  return k;
}

std::optional<Element> GroupTable::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return gens_[i];
  return std::nullopt;
}

void GroupTable::rename_generators(std::span<const std::string> names) {
  if (names.size() != names_.size())
    throw Error(Errc::invalid_argument, "expected " + std::to_string(names_.size()) + " generator names, got " +
                                            std::to_string(names.size()));
  std::vector<std::string> fresh(names.begin(), names.end());
  check_names(fresh);
  names_ = std::move(fresh);
  compute_labels();
}

GroupTable build_cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclic group order must be at least 1");
  check_order(n);
  std::vector<Element> mult(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) mult[x * n + y] = static_cast<Element>((x + y) % n);
  std::vector<std::string> names;
  std::vector<Element> gens;
  if (n > 1) {
    names.push_back("a");
    gens.push_back(1);
  }
  return GroupTable(n, std::move(mult), std::move(names), std::move(gens), "Z" + std::to_string(n));
}

GroupTable build_dihedral(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_argument, "dihedral group needs m >= 2");
  const std::size_t n = 2 * m;
  check_order(n);
  // Element b^s a^r has index s*m + r; a^r b = b a^-r.
  std::vector<Element> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t s = x / m, r = x % m;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t t = y / m, q = y % m;
      std::size_t rr = t ? (m - r) % m : r;
      std::size_t ns = (s + t) % 2, nr = (rr + q) % m;
      mult[x * n + y] = static_cast<Element>(ns * m + nr);
    }
  }
  return GroupTable(n, std::move(mult), {"a", "b"}, {1, static_cast<Element>(m)}, "D" + std::to_string(n));
}

GroupTable build_direct_product(const GroupTable& g, const GroupTable& h) {
  std::vector<GroupTable> factors{g, h};
  return build_direct_product(factors);
}

GroupTable build_direct_product(std::span<const GroupTable> factors) {
  if (factors.empty()) return build_cyclic(1);
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.order();
    check_order(n);
  }
  // Mixed radix: the first factor is the most significant digit.
  std::vector<std::size_t> stride(factors.size());
  {
    std::size_t s = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
      stride[i] = s;
      s *= factors[i].order();
    }
  }
  std::vector<Element> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto xi = static_cast<Element>((x / stride[i]) % factors[i].order());
        auto yi = static_cast<Element>((y / stride[i]) % factors[i].order());
        z += factors[i].mul(xi, yi) * stride[i];
      }
      mult[x * n + y] = static_cast<Element>(z);
    }
  }
  std::vector<std::string> names;
  std::vector<Element> gens;
  std::string desc;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    for (std::size_t j = 0; j < f.generators().size(); ++j) {
      names.push_back(f.generator_names()[j] + std::to_string(i + 1));
      gens.push_back(static_cast<Element>(f.generators()[j] * stride[i]));
    }
    if (i) desc += " x ";
    desc += f.description();
  }
  return GroupTable(n, std::move(mult), std::move(names), std::move(gens), desc);
}

GroupTable build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                   std::vector<std::string> names) {
  if (degree == 0) throw Error(Errc::invalid_argument, "permutation degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(Errc::invalid_argument, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw Error(Errc::invalid_argument, "generator is not a bijection");
      hit[v] = 1;
    }
  }
  if (names.empty())
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  if (names.size() != generators.size())
    throw Error(Errc::invalid_argument, "generator name count does not match generator count");

  // Product convention: x*y applies x first, then y.
  auto compose = [&](const Permutation& x, const Permutation& y) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::map<Permutation, Element> index;
  std::vector<Permutation> elems{id};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  index.emplace(id, 0);
  std::vector<std::vector<Element>> right(generators.size());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation y = compose(elems[head], generators[gi]);
      auto [it, fresh] = index.emplace(y, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() + 1 > kOrderCap)
          throw Error(Errc::group_too_large,
                      "group too large: permutation closure exceeds cap " + std::to_string(kOrderCap));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Element>(head));
        via.push_back(gi);
      }
      right[gi].push_back(it->second);  // right[gi][head] = head * g
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> mult(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    mult[x * n] = static_cast<Element>(x);
    for (std::size_t y = 1; y < n; ++y) mult[x * n + y] = right[via[y]][mult[x * n + parent[y]]];
  }
  std::vector<Element> gens;
  for (const auto& p : generators) gens.push_back(index.at(p));

  PermutationRep rep{degree, std::move(elems)};
  return GroupTable(n, std::move(mult), std::move(names), std::move(gens), "perm(" + std::to_string(degree) + ")",
                    std::move(rep));
}

ElementSet normalize(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ElementSet all_elements(const GroupTable& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) s[x] = x;
  return s;
}

bool is_subgroup(const GroupTable& g, const ElementSet& t) {
  if (t.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (auto x : t) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[GroupTable::identity]) return false;
  for (auto x : t) {
    if (!in[g.inv(x)]) return false;
    for (auto y : t)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

ElementSet subgroup_generated(const GroupTable& g, const ElementSet& t) {
  std::vector<char> in(g.order(), 0);
  ElementSet out{GroupTable::identity};
  in[GroupTable::identity] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto s : t) {
      Element y = g.mul(out[head], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  return normalize(std::move(out));
}

std::vector<ElementSet> cosets(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw Error(Errc::not_a_subgroup, "coset decomposition needs a subgroup");
  std::vector<char> used(g.order(), 0);
  std::vector<ElementSet> blocks;
  for (Element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    ElementSet block;
    for (auto y : h) block.push_back(g.mul(y, x));
    block = normalize(std::move(block));
    for (auto y : block) used[y] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<ElementSet> subgroups_of_order(const GroupTable& g, std::size_t order) {
  if (order == 0 || g.order() % order != 0) return {};
  std::set<ElementSet> found;
  std::vector<ElementSet> frontier;
  for (Element x = 0; x < g.order(); ++x) {
    auto h = subgroup_generated(g, {x});
    if (order % h.size() == 0 && found.insert(h).second) frontier.push_back(h);
  }
  // Every subgroup is a join of cyclic ones; joins are kept only while their
  // order still divides the target.
  std::vector<ElementSet> cyclic(frontier);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        ElementSet gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = subgroup_generated(g, normalize(std::move(gens)));
        if (order % j.size() == 0 && found.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out;
  for (const auto& h : found)
    if (h.size() == order) out.push_back(h);
  return out;
}

}  // namespace neumaier
