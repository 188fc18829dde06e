#include "neumaier/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "neumaier/error.hpp"

namespace neumaier {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) { return x > kSaturated - y ? kSaturated : x + y; }

// ways[i][w]: subsets of orbits i.. with total weight w.
std::vector<std::vector<std::uint64_t>> suffix_counts(const SearchSpace& space) {
  const std::size_t m = space.orbits.size(), k = space.free_weight;
  std::vector<std::vector<std::uint64_t>> ways(m + 1, std::vector<std::uint64_t>(k + 1, 0));
  ways[m][0] = 1;
  for (std::size_t i = m; i-- > 0;) {
    const std::size_t wt = space.orbits[i].size();
    for (std::size_t w = 0; w <= k; ++w) {
      ways[i][w] = ways[i + 1][w];
      if (w >= wt) ways[i][w] = sat_add(ways[i][w], ways[i + 1][w - wt]);
    }
  }
  return ways;
}

class Enumerator {
 public:
  Enumerator(const SearchSpace& space, const std::function<bool(const ElementSet&)>& visit)
      : space_(space), visit_(visit), ways_(suffix_counts(space)) {}

  // Enumerates candidates whose first chosen orbit is `first`, or the empty
  // choice when `first` equals the orbit count.
  bool run_branch(std::size_t first) {
    chosen_.assign(space_.forced.begin(), space_.forced.end());
    const std::size_t m = space_.orbits.size();
    if (first == m) return space_.free_weight == 0 ? emit() : true;
    const std::size_t wt = space_.orbits[first].size();
    if (wt > space_.free_weight || ways_[first + 1][space_.free_weight - wt] == 0) return true;
    push(first);
    bool go = rec(first + 1, space_.free_weight - wt);
    return go;
  }

  std::uint64_t visited() const { return visited_; }

 private:
  void push(std::size_t i) { chosen_.insert(chosen_.end(), space_.orbits[i].begin(), space_.orbits[i].end()); }
  void pop(std::size_t i) { chosen_.resize(chosen_.size() - space_.orbits[i].size()); }

  bool emit() {
    ++visited_;
    ElementSet s = chosen_;
    std::sort(s.begin(), s.end());
    return visit_(s);
  }

  bool rec(std::size_t start, std::size_t remaining) {
    if (remaining == 0) return emit();
    for (std::size_t i = start; i < space_.orbits.size(); ++i) {
      if (ways_[i][remaining] == 0) return true;
      const std::size_t wt = space_.orbits[i].size();
      if (wt > remaining || ways_[i + 1][remaining - wt] == 0) continue;
      push(i);
      bool go = rec(i + 1, remaining - wt);
      pop(i);
      if (!go) return false;
    }
    return true;
  }

  const SearchSpace& space_;
  const std::function<bool(const ElementSet&)>& visit_;
  std::vector<std::vector<std::uint64_t>> ways_;
  ElementSet chosen_;
  std::uint64_t visited_ = 0;
};

}  // namespace

SearchSpace make_search_space(const GroupTable& g, const NeumaierParameters& target, const ElementSet& forced) {
  if (target.n != static_cast<std::int64_t>(g.order()))
    throw Error(Errc::invalid_argument, "target n = " + std::to_string(target.n) + " but the group has order " +
                                            std::to_string(g.order()));
  if (target.k < 1 || target.k >= target.n) throw Error(Errc::invalid_argument, "target k out of range");
  SearchSpace space;
  space.group = &g;
  space.target = target;
  space.forced = normalize(forced);
  for (auto x : space.forced) {
    if (x >= g.order()) throw Error(Errc::invalid_argument, "forced element out of range");
    if (x == GroupTable::identity) throw Error(Errc::identity_in_set, "forced set contains the identity");
    if (!std::binary_search(space.forced.begin(), space.forced.end(), g.inv(x)))
      throw Error(Errc::not_inverse_closed, "forced set is not inverse-closed");
  }
  if (space.forced.size() > static_cast<std::size_t>(target.k))
    throw Error(Errc::invalid_argument, "forced set is larger than k");
  space.free_weight = static_cast<std::size_t>(target.k) - space.forced.size();
  for (Element x = 1; x < g.order(); ++x) {
    Element y = g.inv(x);
    if (y < x || std::binary_search(space.forced.begin(), space.forced.end(), x)) continue;
    space.orbits.push_back(x == y ? ElementSet{x} : ElementSet{x, y});
  }
  return space;
}

std::uint64_t count_candidates(const SearchSpace& space) { return suffix_counts(space)[0][space.free_weight]; }

std::uint64_t enumerate_connection_sets(const SearchSpace& space,
                                        const std::function<bool(const ElementSet&)>& visit) {
  Enumerator e(space, visit);
  for (std::size_t first = 0; first <= space.orbits.size(); ++first)
    if (!e.run_branch(first)) break;
  return e.visited();
}

namespace {

enum class Outcome { disconnected, lambda, clique, mu, match };

Outcome test_candidate(const GroupTable& g, const ElementSet& s, const NeumaierParameters& t) {
  CayleyGraph graph(ConnectionSet(g, s));
  if (!graph.is_connected()) return Outcome::disconnected;
  // identity edges first; translation makes this cover every edge orbit
  for (auto x : s)
    if (static_cast<std::int64_t>(graph.common_neighbors(0, x)) != t.lambda) return Outcome::lambda;
  auto cliques = find_regular_cliques(graph, static_cast<std::size_t>(t.c));
  if (std::none_of(cliques.begin(), cliques.end(), [&](const RegularClique& rc) { return rc.nexus == t.a; }))
    return Outcome::clique;
  if (t.mu) {
    auto mu = strong_regular_mu(graph);
    if (!mu || *mu != *t.mu) return Outcome::mu;
  }
  return Outcome::match;
}

}  // namespace

bool matches_target(const CayleyGraph& graph, const NeumaierParameters& t) {
  if (static_cast<std::int64_t>(graph.order()) != t.n || static_cast<std::int64_t>(graph.degree()) != t.k) return false;
  if (!graph.is_connected() || graph.is_complete()) return false;
  auto lambda = edge_regular_lambda(graph);
  if (!lambda || *lambda != t.lambda) return false;
  auto cliques = find_regular_cliques(graph, static_cast<std::size_t>(t.c));
  if (std::none_of(cliques.begin(), cliques.end(), [&](const RegularClique& rc) { return rc.nexus == t.a; }))
    return false;
  if (t.mu) {
    auto mu = strong_regular_mu(graph);
    if (!mu || *mu != *t.mu) return false;
  }
  return true;
}

namespace {

struct BranchResult {
  std::vector<ElementSet> sets;
  SearchStats stats;
};

// Runs every first-orbit branch of one space, possibly in parallel. Results
// are indexed by branch so merging is independent of scheduling.
std::vector<BranchResult> run_space(const SearchSpace& space, const SearchOptions& opt) {
  const GroupTable& g = *space.group;
  const std::size_t branches = space.orbits.size() + 1;
  std::vector<BranchResult> results(branches);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{branches};

  auto worker = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= branches) return;
      if (!opt.all && b > first_hit.load()) continue;
      BranchResult& r = results[b];
      std::function<bool(const ElementSet&)> visit = [&](const ElementSet& s) {
        ++r.stats.candidates;
        switch (test_candidate(g, s, space.target)) {
          case Outcome::disconnected: ++r.stats.disconnected; return true;
          case Outcome::lambda: ++r.stats.lambda_rejected; return true;
          case Outcome::clique: ++r.stats.clique_rejected; return true;
          case Outcome::mu: ++r.stats.mu_rejected; return true;
          case Outcome::match: break;
        }
        ++r.stats.matches;
        r.sets.push_back(s);
        return opt.all;
      };
      Enumerator e(space, visit);
      e.run_branch(b);
      if (!opt.all && !r.sets.empty()) {
        std::size_t cur = first_hit.load();
        while (b < cur && !first_hit.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(branches)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

void accumulate(SearchStats& into, const SearchStats& s) {
  into.candidates += s.candidates;
  into.disconnected += s.disconnected;
  into.lambda_rejected += s.lambda_rejected;
  into.clique_rejected += s.clique_rejected;
  into.mu_rejected += s.mu_rejected;
  into.matches += s.matches;
}

}  // namespace

SearchResult search_neumaier(const GroupTable& g, const NeumaierParameters& target, const SearchOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (auto bad = violated_identities(target); !bad.empty())
    throw Error(Errc::invalid_argument, "target " + target.to_string() + " violates " + bad.front());
  if (target.c < 2 || target.a < 1 || target.a >= target.c)
    throw Error(Errc::invalid_argument, "target needs 1 <= a < c");

  SearchResult out;
  std::vector<SearchSpace> spaces;
  if (opt.anchor_clique) {
    out.anchor_proven = g.is_abelian() && target.c == 3 && target.a == 1;
    if (!out.anchor_proven)
      out.warnings.push_back("clique anchoring is only proven sound for abelian groups with c = 3, a = 1; "
                             "results may miss sets whose regular cliques are not subgroups");
    for (auto& h : subgroups_of_order(g, static_cast<std::size_t>(target.c))) {
      ElementSet forced(h.begin() + 1, h.end());
      if (forced.size() > static_cast<std::size_t>(target.k)) continue;
      spaces.push_back(make_search_space(g, target, forced));
    }
    out.anchors = spaces.size();
  } else {
    spaces.push_back(make_search_space(g, target));
  }

  std::uint64_t total = 0;
  for (auto& sp : spaces) total = sat_add(total, count_candidates(sp));
  if (total > opt.cap)
    throw Error(Errc::search_too_large, "search space has " + (total == kSaturated ? std::string(">= 2^64") : std::to_string(total)) +
                                            " candidates, above the cap of " + std::to_string(opt.cap));

  for (auto& sp : spaces) {
    for (auto& br : run_space(sp, opt)) {
      accumulate(out.stats, br.stats);
      // first branch with a hit holds the first match in enumeration order
      if (!opt.all && !out.sets.empty()) continue;
      out.sets.insert(out.sets.end(), br.sets.begin(), br.sets.end());
    }
    if (!opt.all && !out.sets.empty()) break;
  }
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());

  if (g.is_abelian() && target.c == 3 && target.a == 1) {
    for (auto& s : out.sets) {
      CayleyGraph graph(ConnectionSet(g, s));
      for (auto& rc : find_regular_cliques(graph, 3))
        if (rc.nexus == 1 && !is_subgroup(g, rc.clique)) ++out.nonsubgroup_witnesses;
    }
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

NonexistenceReport verify_nonexistence(const GroupTable& g, const NeumaierParameters& target,
                                       const SearchOptions& options) {
  SearchOptions opt = options;
  opt.all = true;
  auto r = search_neumaier(g, target, opt);
  return {r.sets.empty(), r.stats.candidates, r.sets.size(), r.elapsed_ms};
}

}  // namespace neumaier
