#include "neumaier/feasibility.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "neumaier/error.hpp"

namespace neumaier {

const char* feasibility_status_name(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::feasible: return "feasible";
    case FeasibilityStatus::eliminated: return "eliminated";
    case FeasibilityStatus::existence_unresolved: return "existence_unresolved";
  }
  return "unknown";
}

const char* claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::none: return "none";
    case ClaimKind::example: return "example";
    case ClaimKind::claimed_eliminated: return "claimed_eliminated";
    case ClaimKind::known_nonexistent: return "known_nonexistent";
    case ClaimKind::not_cayley: return "not_cayley";
    case ClaimKind::not_neumaier: return "not_neumaier";
    case ClaimKind::no_cayley_by_search: return "no_cayley_by_search";
  }
  return "unknown";
}

std::string FeasibilityVerdict::tuple_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + (lambda ? std::to_string(*lambda) : "?") + ";" +
         std::to_string(a) + "," + std::to_string(c) + ")";
}

ConstraintReport clique_count_ok(std::int64_t n, std::int64_t k, std::int64_t c, std::int64_t a) {
  std::int64_t l = c * (k - c + 1), r = (n - c) * a;
  return {"clique_edge_count", "=", l, r, l == r};
}

std::optional<std::int64_t> lambda_from_clique(std::int64_t k, std::int64_t c, std::int64_t a) {
  if (c < 2) return std::nullopt;
  std::int64_t lhs = (k - c + 1) * (a - 1);
  if (lhs % (c - 1) != 0) return std::nullopt;
  std::int64_t lambda = lhs / (c - 1) + c - 2;
  if (lambda < c - 2 || lambda > k - 1) return std::nullopt;
  return lambda;
}

ConstraintReport nonneighbour_count_ok(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                       std::int64_t a) {
  std::int64_t l = (c - 1) * (k - lambda - 1), r = (n - k - 1) * a;
  return {"nonneighbour_edge_count", "=", l, r, l == r};
}

std::optional<std::int64_t> lambda_from_nonneighbours(std::int64_t n, std::int64_t k, std::int64_t c,
                                                      std::int64_t a) {
  for (std::int64_t lambda = std::max<std::int64_t>(c - 2, 0); lambda <= k - 1; ++lambda)
    if (nonneighbour_count_ok(n, k, lambda, c, a).pass) return lambda;
  return std::nullopt;
}

std::optional<std::int64_t> srg_mu(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                   std::int64_t a) {
  if (n <= k + 1) return std::nullopt;
  std::int64_t lhs = (k - c + 1) * (k - lambda - 1);
  if (lhs % (n - k - 1) != 0) return std::nullopt;
  std::int64_t mu = lhs / (n - k - 1) + a;
  if (mu < a || mu > k) return std::nullopt;
  return mu;
}

std::int64_t vertex_bound(std::int64_t k) {
  if (k < 2) throw Error(Errc::invalid_argument, "vertex bound needs k >= 2");
  return std::max(1 + k + k * (k - 2), 2 * k);
}

std::int64_t edge_lower_bound_doubled(std::int64_t k, std::int64_t lambda, std::int64_t c, std::int64_t a) {
  return 2 * k * (k - lambda) + 2 * (k - c + 1) * (a - 1) + (k - c + 1) * (lambda - a + 1) + (c - 1) * (c - 2);
}

ConstraintReport edge_bound_check(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c,
                                  std::int64_t a) {
  std::int64_t edges2 = n * k, bound2 = edge_lower_bound_doubled(k, lambda, c, a);
  return {"edge_lower_bound", ">=", edges2, bound2, edges2 >= bound2};
}

bool edge_bound_tight(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t c, std::int64_t a) {
  return n * k == edge_lower_bound_doubled(k, lambda, c, a);
}

ConstraintReport nexus_one_ok(std::int64_t k, std::int64_t c) {
  std::int64_t v = k - 2 * c + 3;
  return {"nexus_one_valency", ">", v, 0, v > 0};
}

ConstraintReport lambda_one_parity_ok(std::int64_t k, std::int64_t lambda) {
  return {"lambda_one_parity", "even", k, lambda, lambda != 1 || k % 2 == 0};
}

ConstraintReport large_clique_ok(std::int64_t k, std::int64_t c) {
  return {"large_clique", "<", c, k, c < k || k == 2};
}

ConstraintReport complete_flag(std::int64_t a, std::int64_t c) { return {"complete", "<", a, c, a < c}; }

ConstraintReport handshake_ok(std::int64_t n, std::int64_t k) { return {"handshake", "even", n * k, 2, (n * k) % 2 == 0}; }

LiteratureClaim literature_claim(std::int64_t k, std::int64_t c, std::int64_t a) {
  using K = ClaimKind;
  // Published case analysis for valency up to 10, keyed by (k, c, a). Cases
  // derived purely from the counting conditions are not listed here.
  static const std::map<std::tuple<int, int, int>, LiteratureClaim> table = {
      {{2, 2, 1}, {K::example, "4-cycle over Z4"}},
      {{4, 3, 1}, {K::example, "lattice graph L2(3); no strictly Neumaier graph"}},
      {{6, 3, 1}, {K::not_cayley, "collinearity graph of GQ(2,2) is the only graph and is not a Cayley graph"}},
      {{6, 4, 1}, {K::example, "Hamming graph H(2,4) (Shrikhande graph is not Neumaier)"}},
      {{6, 4, 2}, {K::not_cayley, "complement of the Petersen graph is not a Cayley graph"}},
      {{7, 4, 1}, {K::known_nonexistent, "neither a strictly Neumaier nor a strongly regular graph exists"}},
      {{8, 3, 1}, {K::claimed_eliminated, "published analysis rejects this case by the nonneighbour edge count"}},
      {{8, 4, 1}, {K::example, "four vertex-transitive strictly Neumaier graphs, Cayley over S4 and Z2 x A4"}},
      {{8, 5, 1}, {K::claimed_eliminated, "published analysis rejects this case by the nonneighbour edge count"}},
      {{8, 5, 2}, {K::claimed_eliminated, "published analysis rejects this case by the nonneighbour edge count"}},
      {{9, 4, 1}, {K::example, "Cayley over Z28 and Z2 x Z14"}},
      {{9, 4, 2}, {K::example, "smallest strictly Neumaier graph, Cayley over D16"}},
      {{9, 5, 1}, {K::known_nonexistent, "neither a strictly Neumaier nor a strongly regular graph exists"}},
      {{9, 7, 3}, {K::claimed_eliminated, "published analysis rejects this case by the nonneighbour edge count"}},
      {{10, 3, 1}, {K::claimed_eliminated, "published analysis rejects this case by the clique neighbourhood split"}},
      {{10, 4, 1}, {K::known_nonexistent, "neither a strictly Neumaier nor a strongly regular graph exists"}},
      {{10, 5, 1}, {K::no_cayley_by_search, "Z35 is the only group of order 35; exhaustive search finds no connection set"}},
      {{10, 5, 3}, {K::claimed_eliminated, "published analysis rejects this case by the edge lower bound"}},
      {{10, 6, 2}, {K::example, "triangular graph T(7), Cayley over the Frobenius group of order 21"}},
      {{10, 6, 3}, {K::not_neumaier, "complement of the Clebsch graph is strongly regular but not Neumaier"}},
      {{10, 7, 4}, {K::claimed_eliminated, "published analysis rejects this case by the nonneighbour edge count"}},
  };
  auto it = table.find({static_cast<int>(k), static_cast<int>(c), static_cast<int>(a)});
  return it == table.end() ? LiteratureClaim{} : it->second;
}

std::optional<SearchResolution> search_resolution(std::int64_t k, std::int64_t c, std::int64_t a) {
  static const std::map<std::tuple<int, int, int>, SearchResolution> table = {
      {{8, 3, 1}, {false, "no Neumaier Cayley graph over Z21 or the Frobenius group of order 21"}},
      {{8, 5, 1}, {true, "exists: lattice graph L2(5) over Z5 x Z5"}},
      {{8, 5, 2}, {false, "no Neumaier Cayley graph over Z15"}},
      {{9, 7, 3}, {false, "no Neumaier Cayley graph over Z14 or D14"}},
      {{10, 3, 1},
       {true, "exists over the Heisenberg group of order 27 and Z9 : Z3 (SRG(27,10,1,5)); none over the abelian groups"}},
      {{10, 5, 3}, {false, "no Neumaier Cayley graph over Z15"}},
      {{10, 7, 4}, {false, "no Neumaier Cayley graph over Z14 or D14"}},
  };
  auto it = table.find({static_cast<int>(k), static_cast<int>(c), static_cast<int>(a)});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

// Complete multipartite and lattice families recognised from the tuple.
std::string recognise_family(std::int64_t n, std::int64_t k, std::int64_t lambda, std::int64_t a, std::int64_t c) {
  // K_{m x c}: n = cm, k = (c-1)m, lambda = (c-2)m, a = c-1.
  if (a == c - 1 && n % c == 0) {
    std::int64_t m = n / c;
    if (k == (c - 1) * m && lambda == (c - 2) * m) {
      std::string s = "K_{";
      for (std::int64_t i = 0; i < c; ++i) s += (i ? "," : "") + std::to_string(m);
      return s + "}";
    }
  }
  if (a == 1 && n == c * c && k == 2 * (c - 1) && lambda == c - 2) return "lattice L2(" + std::to_string(c) + ")";
  return {};
}

}  // namespace

std::vector<FeasibilityVerdict> enumerate_feasible(std::int64_t k, std::optional<std::int64_t> max_n) {
  if (k < 2 || k > kMaxValency)
    throw Error(Errc::invalid_argument, "valency must lie in [2, " + std::to_string(kMaxValency) + "]");
  const std::int64_t bound = vertex_bound(k);
  std::vector<FeasibilityVerdict> out;
  for (std::int64_t c = 2; c <= k; ++c) {
    for (std::int64_t a = 1; a < c; ++a) {
      const std::int64_t outgoing = c * (k - c + 1);
      if (outgoing % a != 0) continue;
      const std::int64_t n = c + outgoing / a;
      if (max_n && n > *max_n) continue;

      FeasibilityVerdict v;
      v.n = n;
      v.k = k;
      v.a = a;
      v.c = c;
      auto& r = v.reasons;
      r.push_back(clique_count_ok(n, k, c, a));
      r.push_back({"vertex_bound", "<=", n, bound, n <= bound});
      r.push_back(large_clique_ok(k, c));
      r.push_back(complete_flag(a, c));
      r.push_back(handshake_ok(n, k));
      v.lambda = lambda_from_clique(k, c, a);
      {
        std::int64_t lhs = (k - c + 1) * (a - 1);
        r.push_back({"clique_neighbourhood_split", "integral", lhs, c - 1, v.lambda.has_value()});
      }
      if (v.lambda) {
        const std::int64_t lambda = *v.lambda;
        r.push_back(nonneighbour_count_ok(n, k, lambda, c, a));
        r.push_back(lambda_one_parity_ok(k, lambda));
        r.push_back(edge_bound_check(n, k, lambda, c, a));
      } else {
        auto alt = lambda_from_nonneighbours(n, k, c, a);
        r.push_back({"nonneighbour_edge_count", "solvable", alt.value_or(-1), c - 1, alt.has_value()});
      }
      if (a == 1) r.push_back(nexus_one_ok(k, c));

      const bool ok = std::all_of(r.begin(), r.end(), [](const ConstraintReport& x) { return x.pass; });
      v.claim = literature_claim(k, c, a);
      if (!ok)
        v.status = FeasibilityStatus::eliminated;
      else if (v.claim.kind == ClaimKind::claimed_eliminated)
        v.status = FeasibilityStatus::existence_unresolved;
      else
        v.status = FeasibilityStatus::feasible;
      if (v.status == FeasibilityStatus::existence_unresolved) {
        if (auto res = search_resolution(k, c, a)) v.resolution = res->text;
      }

      if (v.lambda) {
        v.mu = srg_mu(n, k, *v.lambda, c, a);
        if (v.mu) {
          NeumaierParameters p{n, k, *v.lambda, a, c, v.mu};
          v.eigenvalues = integer_eigs_check(p);
        }
        v.family = recognise_family(n, k, *v.lambda, a, c);
      }
      out.push_back(std::move(v));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FeasibilityVerdict& x, const FeasibilityVerdict& y) { return std::tie(x.c, x.n) < std::tie(y.c, y.n); });
  return out;
}

}  // namespace neumaier
