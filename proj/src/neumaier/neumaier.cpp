#include "neumaier/neumaier.hpp"

#include <algorithm>

#include "neumaier/error.hpp"

namespace neumaier {

std::string NeumaierParameters::to_string() const {
  std::string s = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ";" +
                  std::to_string(a) + "," + std::to_string(c);
  if (mu) s += ";mu=" + std::to_string(*mu);
  return s + ")";
}

std::vector<std::string> violated_identities(const NeumaierParameters& p) {
  std::vector<std::string> bad;
  const auto [n, k, lambda, a, c, mu] = p;
  if (c * (k - c + 1) != (n - c) * a) bad.push_back("clique_edge_count");
  if ((k - c + 1) * (a - 1) != (c - 1) * (lambda - c + 2)) bad.push_back("clique_neighbourhood_split");
  if ((c - 1) * (k - lambda - 1) != (n - k - 1) * a) bad.push_back("nonneighbour_edge_count");
  if (mu && (k - c + 1) * (k - lambda - 1) != (n - k - 1) * (*mu - a)) bad.push_back("strongly_regular_count");
  return bad;
}

const char* class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::complete: return "complete";
    case ClassKind::not_edge_regular: return "not_edge_regular";
    case ClassKind::edge_regular_no_regular_clique: return "edge_regular_no_regular_clique";
    case ClassKind::strictly_neumaier: return "strictly_neumaier";
    case ClassKind::strongly_regular_neumaier: return "strongly_regular_neumaier";
  }
  return "unknown";
}

std::optional<std::int64_t> edge_regular_lambda(const CayleyGraph& graph) {
  std::optional<std::int64_t> lambda;
  for (Element u = 0; u < graph.order(); ++u) {
    bool ok = true;
    graph.neighbors(u).for_each([&](std::size_t v) {
      if (!ok || v < u) return;
      auto cn = static_cast<std::int64_t>(graph.common_neighbors(u, static_cast<Element>(v)));
      if (!lambda)
        lambda = cn;
      else if (*lambda != cn)
        ok = false;
    });
    if (!ok) return std::nullopt;
  }
  return lambda;
}

std::optional<std::int64_t> strong_regular_mu(const CayleyGraph& graph) {
  const std::size_t n = graph.order();
  std::optional<std::int64_t> mu;
  auto scan = [&](Element u, Element from) {
    for (Element v = from; v < n; ++v) {
      if (v == u || graph.adjacent(u, v)) continue;
      auto cn = static_cast<std::int64_t>(graph.common_neighbors(u, v));
      if (!mu)
        mu = cn;
      else if (*mu != cn)
        return false;
    }
    return true;
  };
  if (!scan(0, 1)) return std::nullopt;
  for (Element u = 1; u < n; ++u)
    if (!scan(u, u + 1)) return std::nullopt;
  return mu;
}

std::optional<Nexus> nexus_of_clique(const CayleyGraph& graph, const ElementSet& c) {
  const std::size_t n = graph.order();
  Bitset mask(n);
  for (auto x : c) {
    if (x >= n) throw Error(Errc::invalid_argument, "vertex out of range");
    mask.set(x);
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!graph.adjacent(c[i], c[j])) throw Error(Errc::not_a_clique, "vertex set is not a clique");
  std::optional<std::int64_t> a;
  for (Element v = 0; v < n; ++v) {
    if (mask.test(v)) continue;
    auto cnt = static_cast<std::int64_t>(graph.neighbors(v).count_and(mask));
    if (!a)
      a = cnt;
    else if (*a != cnt)
      return std::nullopt;
  }
  if (!a) return std::nullopt;
  return Nexus{*a, *a == static_cast<std::int64_t>(c.size())};
}

namespace {

// Extends `current` by vertices of `candidates` greater than the last one.
bool extend_clique(const CayleyGraph& graph, std::size_t size, ElementSet& current, const Bitset& candidates,
                   const std::function<bool(const ElementSet&)>& visit) {
  if (current.size() == size) return visit(current);
  const std::size_t need = size - current.size();
  if (candidates.count() < need) return true;
  for (std::size_t v = candidates.next(0); v < candidates.size(); v = candidates.next(v + 1)) {
    Bitset next = candidates;
    next &= graph.neighbors(static_cast<Element>(v));
    // only later vertices keep the enumeration lexicographic and duplicate-free
    for (std::size_t w = next.next(0); w <= v && w < next.size(); w = next.next(w + 1)) next.reset(w);
    current.push_back(static_cast<Element>(v));
    bool go = extend_clique(graph, size, current, next, visit);
    current.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void enumerate_cliques_containing_identity(const CayleyGraph& graph, std::size_t size,
                                           const std::function<bool(const ElementSet&)>& visit) {
  if (size == 0) return;
  ElementSet current{0};
  extend_clique(graph, size, current, graph.neighbors(0), visit);
}

std::vector<ElementSet> cliques_containing_identity(const CayleyGraph& graph, std::size_t size) {
  std::vector<ElementSet> out;
  enumerate_cliques_containing_identity(graph, size, [&](const ElementSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<RegularClique> find_regular_cliques(const CayleyGraph& graph, std::optional<std::size_t> only_size) {
  std::vector<RegularClique> found;
  std::size_t lo = 2, hi = graph.degree() + 1;
  if (only_size) lo = hi = *only_size;
  for (std::size_t size = lo; size <= hi; ++size) {
    enumerate_cliques_containing_identity(graph, size, [&](const ElementSet& c) {
      if (auto nx = nexus_of_clique(graph, c); nx && nx->a >= 1) found.push_back({c, nx->a});
      return true;
    });
  }
  return found;
}

Classification classify(const CayleyGraph& graph) {
  if (!graph.is_connected()) throw Error(Errc::not_connected, "classification needs a connected graph");
  Classification out;
  if (graph.is_complete()) {
    out.kind = ClassKind::complete;
    return out;
  }
  out.lambda = edge_regular_lambda(graph);
  if (!out.lambda) {
    out.kind = ClassKind::not_edge_regular;
    return out;
  }
  out.cliques = find_regular_cliques(graph);
  if (out.cliques.empty()) {
    out.kind = ClassKind::edge_regular_no_regular_clique;
    return out;
  }
  const auto& first = out.cliques.front();
  NeumaierParameters p;
  p.n = static_cast<std::int64_t>(graph.order());
  p.k = static_cast<std::int64_t>(graph.degree());
  p.lambda = *out.lambda;
  p.a = first.nexus;
  p.c = static_cast<std::int64_t>(first.clique.size());
  p.mu = strong_regular_mu(graph);
  out.kind = p.mu ? ClassKind::strongly_regular_neumaier : ClassKind::strictly_neumaier;
  out.witness = first.clique;
  auto bad = violated_identities(p);
  if (!bad.empty())
    throw std::logic_error("computed parameters " + p.to_string() + " violate " + bad.front());
  out.params = p;
  return out;
}

std::optional<IntegerRoots> srg_eigenvalues(std::int64_t /*n*/, std::int64_t k, std::int64_t lambda,
                                            std::int64_t mu) {
  return integer_quadratic_roots(lambda - mu, -(k - mu));
}

IntegerEigenvalueCheck integer_eigs_check(const NeumaierParameters& p) {
  if (!p.mu) throw Error(Errc::invalid_argument, "integer eigenvalue check needs mu");
  IntegerEigenvalueCheck chk;
  auto roots = srg_eigenvalues(p.n, p.k, p.lambda, *p.mu);
  if (!roots) return chk;
  chk.integral = true;
  chk.r = roots->larger;
  chk.s = roots->smaller;
  chk.r_matches = chk.r == p.c - p.a - 1;
  chk.s_matches = p.a > 0 && *p.mu % p.a == 0 && chk.s == -(*p.mu / p.a);
  const std::int64_t m = -chk.s;
  chk.hoffman = m > 0 && p.k % m == 0 && p.c == 1 + p.k / m && *p.mu % m == 0 && p.a == *p.mu / m;
  return chk;
}

}  // namespace neumaier
