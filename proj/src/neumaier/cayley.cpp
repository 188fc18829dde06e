#include "neumaier/cayley.hpp"

#include <algorithm>
#include <deque>

#include "neumaier/error.hpp"

namespace neumaier {

ConnectionSet::ConnectionSet(const GroupTable& g, ElementSet members) : group_(&g), members_(normalize(std::move(members))) {
  for (auto x : members_)
    if (x >= g.order()) throw Error(Errc::invalid_argument, "element index out of range");
  if (contains(GroupTable::identity)) throw Error(Errc::identity_in_set, "connection set contains the identity");
  for (auto x : members_)
    if (!contains(g.inv(x)))
      throw Error(Errc::not_inverse_closed, "connection set is not inverse-closed: missing inverse of " + g.label(x));
}

bool ConnectionSet::contains(Element x) const { return std::binary_search(members_.begin(), members_.end(), x); }

CayleyGraph::CayleyGraph(const ConnectionSet& s) : group_(&s.group()), set_(s.members()) {
  const GroupTable& g = *group_;
  const std::size_t n = g.order();
  rows_.assign(n, Bitset(n));
  // v ~ u iff u*v^-1 = s, i.e. v = s^-1 * u; S is inverse-closed so v = s*u.
  for (Element u = 0; u < n; ++u)
    for (auto x : set_) rows_[u].set(g.mul(x, u));
}

bool CayleyGraph::is_connected() const {
  Bitset seen(order());
  seen.set(0);
  std::deque<Element> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop_front();
    rows_[u].for_each([&](std::size_t v) {
      if (!seen.test(v)) {
        seen.set(v);
        ++reached;
        queue.push_back(static_cast<Element>(v));
      }
    });
  }
  return reached == order();
}

std::size_t CayleyGraph::diameter() const {
  std::vector<std::size_t> dist(order(), SIZE_MAX);
  dist[0] = 0;
  std::deque<Element> queue{0};
  std::size_t far = 0, reached = 1;
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop_front();
    rows_[u].for_each([&](std::size_t v) {
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        far = std::max(far, dist[v]);
        ++reached;
        queue.push_back(static_cast<Element>(v));
      }
    });
  }
  if (reached != order()) throw Error(Errc::not_connected, "diameter of a disconnected graph");
  return far;
}

ConnectionSet complement_set(const ConnectionSet& s) {
  ElementSet out;
  for (Element x = 1; x < s.group().order(); ++x)
    if (!s.contains(x)) out.push_back(x);
  return ConnectionSet(s.group(), std::move(out));
}

std::optional<QuotientMatrix> equitable_quotient(const CayleyGraph& graph, const std::vector<ElementSet>& partition) {
  const std::size_t n = graph.order();
  std::vector<int> owner(n, -1);
  std::vector<Bitset> masks;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    Bitset m(n);
    for (auto x : partition[b]) {
      if (x >= n || owner[x] >= 0) throw Error(Errc::invalid_argument, "partition blocks must be disjoint vertex sets");
      owner[x] = static_cast<int>(b);
      m.set(x);
    }
    masks.push_back(std::move(m));
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(Errc::invalid_argument, "partition does not cover every vertex");

  const std::size_t d = partition.size();
  QuotientMatrix q(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    if (partition[i].empty()) throw Error(Errc::invalid_argument, "partition has an empty block");
    for (std::size_t j = 0; j < d; ++j) {
      auto expect = static_cast<std::int64_t>(graph.neighbors(partition[i].front()).count_and(masks[j]));
      for (auto v : partition[i])
        if (static_cast<std::int64_t>(graph.neighbors(v).count_and(masks[j])) != expect) return std::nullopt;
      q[i][j] = expect;
    }
  }
  return q;
}

IntegerRoots quotient_eigenvalues(const QuotientMatrix& m) {
  if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
    throw Error(Errc::invalid_argument, "quotient eigenvalues need a 2x2 matrix");
  std::int64_t trace = m[0][0] + m[1][1];
  std::int64_t det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  auto roots = integer_quadratic_roots(trace, det);
  if (!roots) throw Error(Errc::non_square_discriminant, "quotient matrix has non-integer eigenvalues");
  return *roots;
}

}  // namespace neumaier
