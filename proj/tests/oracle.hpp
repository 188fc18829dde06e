#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here touches bitsets, the clique search or the group ring.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neumaier/group.hpp"
#include "neumaier/spec_io.hpp"

namespace oracle {

using neumaier::Element;
using neumaier::ElementSet;
using neumaier::GroupTable;

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const GroupTable& g, const ElementSet& s) {
  const std::size_t n = g.order();
  std::set<Element> in(s.begin(), s.end());
  Matrix adj(n, std::vector<int>(n, 0));
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) adj[u][v] = in.count(g.mul(u, g.inv(v))) ? 1 : 0;
  return adj;
}

inline int common(const Matrix& adj, std::size_t u, std::size_t v) {
  int c = 0;
  for (std::size_t w = 0; w < adj.size(); ++w) c += adj[u][w] && adj[v][w];
  return c;
}

// Constant common-neighbour count over adjacent (or non-adjacent) pairs.
inline std::optional<int> constant_count(const Matrix& adj, bool adjacent) {
  std::optional<int> val;
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = u + 1; v < adj.size(); ++v) {
      if (adj[u][v] != static_cast<int>(adjacent)) continue;
      int c = common(adj, u, v);
      if (val && *val != c) return std::nullopt;
      val = c;
    }
  return val;
}

inline bool is_clique(const Matrix& adj, const ElementSet& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!adj[c[i]][c[j]]) return false;
  return true;
}

inline std::optional<int> nexus(const Matrix& adj, const ElementSet& c) {
  std::optional<int> a;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    int cnt = 0;
    for (auto x : c) cnt += adj[v][x];
    if (a && *a != cnt) return std::nullopt;
    a = cnt;
  }
  return a;
}

// Every clique through vertex 0 of the given size, by plain subset recursion.
inline void cliques_rec(const Matrix& adj, std::size_t size, std::size_t from, ElementSet& cur,
                        std::vector<ElementSet>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = from; v < adj.size(); ++v) {
    bool ok = true;
    for (auto x : cur) ok = ok && adj[x][v];
    if (!ok) continue;
    cur.push_back(static_cast<Element>(v));
    cliques_rec(adj, size, v + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<ElementSet> cliques_through_zero(const Matrix& adj, std::size_t size) {
  std::vector<ElementSet> out;
  ElementSet cur{0};
  if (size >= 1) cliques_rec(adj, size, 1, cur, out);
  return out;
}

// Coefficients of the product of two subset sums, by double loop.
inline std::vector<std::int64_t> product(const GroupTable& g, const ElementSet& x, const ElementSet& y) {
  std::vector<std::int64_t> out(g.order(), 0);
  for (auto a : x)
    for (auto b : y) ++out[g.mul(a, b)];
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupTable data_group(const std::string& name) {
  return neumaier::group_from_text(slurp(std::string(NM_DATA_DIR) + "/groups/" + name + ".json"));
}

}  // namespace oracle
