#include "neumaier/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "neumaier/error.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"

namespace neumaier {

namespace {

using nlohmann::json;

json cyclic(int n) { return {{"kind", "cyclic"}, {"n", n}}; }

json product2(int m1, int m2, const char* n1 = "a", const char* n2 = "b") {
  return {{"kind", "product"}, {"factors", json::array({cyclic(m1), cyclic(m2)})}, {"names", {n1, n2}}};
}

std::string pow_word(const char* g, int e) { return e == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(e); }

NeumaierParameters srg(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t a, std::int64_t c, std::int64_t mu) {
  return {n, k, l, a, c, mu};
}

NeumaierParameters strict(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t a, std::int64_t c) {
  return {n, k, l, a, c, std::nullopt};
}

// K_{m x parts} over Z_m x Z_parts with S = G \ (Z_m x 0).
CatalogEntry multipartite(int m, int parts) {
  CatalogEntry e;
  e.name = "multipartite-" + std::to_string(m) + "x" + std::to_string(parts);
  e.group = product2(m, parts);
  for (int i = 0; i < m; ++i)
    for (int j = 1; j < parts; ++j) e.elements.push_back(i ? pow_word("a", i) + "*" + pow_word("b", j) : pow_word("b", j));
  e.expected_kind = ClassKind::strongly_regular_neumaier;
  const std::int64_t n = m * parts, k = (parts - 1) * m;
  e.expected = srg(n, k, (parts - 2) * m, parts - 1, parts, k);
  e.description = "complete multipartite graph with " + std::to_string(parts) + " parts of size " + std::to_string(m);
  e.printed_parameters = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string((parts - 2) * m) +
                         "," + std::to_string(k) + ";" + std::to_string(parts) + "," + std::to_string(parts - 1) + ")";
  return e;
}

CatalogEntry bipartite(int k) {
  CatalogEntry e;
  e.name = "bipartite-" + std::to_string(k);
  e.group = cyclic(2 * k);
  for (int i = 1; i < 2 * k; i += 2) e.elements.push_back(pow_word("a", i));
  e.expected_kind = ClassKind::strongly_regular_neumaier;
  e.expected = srg(2 * k, k, 0, 1, 2, k);
  e.description = "complete bipartite graph K_{" + std::to_string(k) + "," + std::to_string(k) + "}";
  return e;
}

// L2(n) over Z_n x Z_n: S = {(0,j), (j,0)}.
CatalogEntry lattice(int n) {
  CatalogEntry e;
  e.name = "lattice-" + std::to_string(n);
  e.group = product2(n, n);
  for (int j = 1; j < n; ++j) {
    e.elements.push_back(pow_word("a", j));
    e.elements.push_back(pow_word("b", j));
  }
  e.expected_kind = ClassKind::strongly_regular_neumaier;
  const std::int64_t k = 2 * (n - 1);
  e.expected = srg(n * n, k, n - 2, 1, n, 2);
  e.description = "lattice graph L2(" + std::to_string(n) + ")";
  e.printed_parameters = "(" + std::to_string(n * n) + "," + std::to_string(k) + "," + std::to_string(n - 2) + ",2;" +
                         std::to_string(n) + ",1)";
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "c4";
    e.group = cyclic(4);
    e.elements = {"a", "a^3"};
    e.expected_kind = ClassKind::strongly_regular_neumaier;
    e.expected = srg(4, 2, 0, 1, 2, 2);
    e.description = "4-cycle, the only Neumaier graph of valency 2";
    out.push_back(e);
  }
  for (int k = 3; k <= 10; ++k) out.push_back(bipartite(k));
  for (auto [m, parts] : {std::pair{2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}, {5, 3}, {2, 6}})
    out.push_back(multipartite(m, parts));
  for (int n : {3, 4, 6}) out.push_back(lattice(n));

  const json s4 = {{"kind", "permutation"}, {"degree", 4}, {"cycle_base", 1}, {"generators", {"(1,2,3,4)", "(1,2)"}}};
  {
    CatalogEntry e;
    e.name = "s4-s1";
    e.group = s4;
    e.elements = {"(1,3)(2,4)", "(1,4)(2,3)", "(1,3,4)", "(1,4,2)", "(1,4,3)", "(1,2,4)", "(1,2,4,3)", "(1,3,4,2)"};
    e.expected = strict(24, 8, 2, 1, 4);
    e.description = "vertex-transitive strictly Neumaier graph on 24 vertices over S4, first set";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "s4-s3";
    e.group = s4;
    e.elements = {"(1,4)(2,3)", "(1,3)(2,4)", "(1,2,4)", "(1,4,3)", "(1,4,2)", "(1,3,4)", "(1,4)", "(2,3)"};
    e.expected = strict(24, 8, 2, 1, 4);
    e.description = "vertex-transitive strictly Neumaier graph on 24 vertices over S4, second set";
    out.push_back(e);
  }

  // Z2 x A4 on six points: a swaps 4 and 5, b is a 3-cycle of A4, c and d
  // generate its Klein subgroup.
  const json z2a4 = {{"kind", "permutation"},
                     {"degree", 6},
                     {"generators",
                      {json::array({0, 1, 2, 3, 5, 4}), json::array({0, 2, 3, 1, 4, 5}), json::array({1, 0, 3, 2, 4, 5}),
                       json::array({2, 3, 0, 1, 4, 5})}},
                     {"names", {"a", "b", "c", "d"}}};
  {
    CatalogEntry e;
    e.name = "z2a4-s2";
    e.group = z2a4;
    e.elements = {"c*d", "a*d", "d", "b*c*d", "b*c", "b^2*d", "b^2*c*d", "a*c"};
    e.expected = strict(24, 8, 2, 1, 4);
    e.description = "vertex-transitive strictly Neumaier graph on 24 vertices over Z2 x A4, first set";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "z2a4-s4";
    e.group = z2a4;
    e.elements = {"a", "b", "c", "d", "b*c*d", "b^2", "a*c", "b^2*d"};
    e.expected = strict(24, 8, 2, 1, 4);
    e.description = "vertex-transitive strictly Neumaier graph on 24 vertices over Z2 x A4, second set";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "z28-a";
    e.group = cyclic(28);
    e.elements = {"a", "a^-1", "a^4", "a^-4", "a^5", "a^-5", "a^7", "a^-7", "a^14"};
    e.expected = strict(28, 9, 2, 1, 4);
    e.description = "strictly Neumaier circulant on 28 vertices";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "z2z14-b";
    e.group = product2(2, 14);
    e.elements = {"a", "b", "b^-1", "b^7", "a*b^2", "a*b^-2", "a*b^3", "a*b^-3", "a*b^7"};
    e.expected = strict(28, 9, 2, 1, 4);
    e.description = "strictly Neumaier Cayley graph on 28 vertices over Z2 x Z14";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "d16-smallest-strict";
    e.group = {{"kind", "dihedral"}, {"m", 8}};
    e.elements = {"a", "a^-1", "a^2", "a^-2", "b", "b*a", "b*a^3", "b*a^4", "b*a^6"};
    e.expected = strict(16, 9, 4, 2, 4);
    e.description = "smallest strictly Neumaier graph, over the dihedral group of order 16";
    out.push_back(e);
  }
  {
    // Frobenius group of order 21: b is x -> x+1 and a is x -> 2x on Z7.
    CatalogEntry e;
    e.name = "f21-t7";
    e.group = {{"kind", "permutation"},
               {"degree", 7},
               {"generators", {json::array({0, 2, 4, 6, 1, 3, 5}), json::array({1, 2, 3, 4, 5, 6, 0})}},
               {"names", {"a", "b"}}};
    e.elements = {"a", "a^-1", "b^2", "b^-2", "a*b^2", "b^-2*a^-1", "a*b^4", "b^-4*a^-1", "a^2*b", "b^-1*a^-2"};
    e.expected_kind = ClassKind::strongly_regular_neumaier;
    e.expected = srg(21, 10, 5, 2, 6, 4);
    e.description = "triangular graph T(7) over the Frobenius group of order 21";
    e.printed_parameters = "(21,10,5,4;6,2)";
    out.push_back(e);
  }
  return out;
}

CheckResult check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), true, pass, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), false, true, std::move(why)}; }

std::string params_or_none(const std::optional<NeumaierParameters>& p) { return p ? p->to_string() : "none"; }

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw Error(Errc::unknown_entry, "no catalog entry named \"" + name + "\"");
}

bool is_cyclic(const GroupTable& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

VerificationReport verify_entry(const CatalogEntry& entry) {
  VerificationReport r;
  r.name = entry.name;
  try {
    const GroupTable g = group_from_json(entry.group);
    r.group_description = g.description();
    const ConnectionSet s(g, resolve_elements(g, entry.elements));
    r.connection_set = s.members();
    const CayleyGraph graph(s);
    auto& checks = r.checks;

    const bool generates = subgroup_generated(g, s.members()).size() == g.order();
    checks.push_back(check("connectivity_matches_generation", graph.is_connected() == generates,
                           generates ? "S generates G" : "S generates a proper subgroup"));
    if (!graph.is_connected()) {
      checks.push_back(check("classification", false, "graph is disconnected"));
      r.pass = false;
      return r;
    }
    r.diameter = static_cast<std::int64_t>(graph.diameter());
    checks.push_back(check("diameter_two", *r.diameter == 2, "diameter " + std::to_string(*r.diameter)));

    r.classification = classify(graph);
    const Classification& cl = *r.classification;
    checks.push_back(check("classification", cl.kind == entry.expected_kind,
                           std::string("expected ") + class_kind_name(entry.expected_kind) + ", got " +
                               class_kind_name(cl.kind)));
    checks.push_back(check("parameters", cl.params && *cl.params == entry.expected,
                           "expected " + entry.expected.to_string() + ", got " + params_or_none(cl.params)));
    if (!cl.is_neumaier()) {
      r.pass = false;
      return r;
    }
    const NeumaierParameters& p = *cl.params;
    const bool strongly_regular = p.mu.has_value();

    // Graph-side nexus against the fitted constant of S*C, over every
    // identity-anchored regular clique.
    r.algebra_nexus = check_regular_clique_identity(g, s.members(), cl.witness);
    bool all_agree = true;
    for (const auto& rc : cl.cliques) {
      auto fitted = check_regular_clique_identity(g, s.members(), rc.clique);
      if (!fitted || *fitted != rc.nexus) all_agree = false;
    }
    checks.push_back(check("regular_clique_identity", r.algebra_nexus && *r.algebra_nexus == p.a && all_agree,
                           "fitted a = " + (r.algebra_nexus ? std::to_string(*r.algebra_nexus) : std::string("none")) +
                               " over " + std::to_string(cl.cliques.size()) + " cliques"));

    r.pds = check_pds_identity(g, s.members());
    if (strongly_regular)
      checks.push_back(check("pds_identity", r.pds && r.pds->lambda == p.lambda && r.pds->mu == *p.mu,
                             r.pds ? "fitted lambda = " + std::to_string(r.pds->lambda) + ", mu = " + std::to_string(r.pds->mu)
                                   : "no fit"));
    else
      checks.push_back(check("pds_identity_fails", !r.pds, r.pds ? "unexpected fit" : "no fit, as for a non-SRG"));

    if (strongly_regular) {
      NeumaierConstants kc{p.lambda, *p.mu, p.a};
      bool left = check_second_identity(g, s.members(), cl.witness, kc, Side::left);
      bool right = check_second_identity(g, s.members(), cl.witness, kc, Side::right);
      checks.push_back(check("second_identity", left, right == left ? "both orders agree" : "reversed order differs"));
      checks.push_back(check("complement_identities", check_complement_identities(g, s.members(), cl.witness, kc)));
      r.eigenvalues = integer_eigs_check(p);
      checks.push_back(check("integer_eigenvalues", r.eigenvalues->passes(),
                             "r = " + std::to_string(r.eigenvalues->r) + ", s = " + std::to_string(r.eigenvalues->s)));
    } else {
      checks.push_back(skipped("second_identity", "needs a strongly regular graph"));
      checks.push_back(skipped("complement_identities", "needs a strongly regular graph"));
      checks.push_back(skipped("integer_eigenvalues", "needs a strongly regular graph"));
    }

    // Schur closure over the four-block basis when G is abelian and some
    // anchored regular clique of the witnessed size is a subgroup.
    if (g.is_abelian() && strongly_regular) {
      for (const auto& rc : cl.cliques)
        if (rc.clique.size() == cl.witness.size() && rc.nexus == p.a && is_subgroup(g, rc.clique)) {
          r.schur_clique = rc.clique;
          break;
        }
    }
    if (!r.schur_clique.empty()) {
      auto res = check_schur_closure(g, neumaier_basis(g, s.members(), r.schur_clique));
      checks.push_back(check("schur_closure", std::holds_alternative<StructureConstants>(res)));
    } else {
      checks.push_back(skipped("schur_closure", "needs an abelian group, an SRG and a subgroup clique"));
    }

    const ElementSet& c = cl.witness;
    const ElementSet everything = all_elements(g);
    ElementSet rest;
    std::set_difference(everything.begin(), everything.end(), c.begin(), c.end(), std::back_inserter(rest));
    r.quotient = equitable_quotient(graph, {c, rest});
    const QuotientMatrix want = {{p.c - 1, p.k - p.c + 1}, {p.a, p.k - p.a}};
    bool qok = r.quotient && *r.quotient == want;
    std::string qdetail = qok ? "" : "quotient differs from [[c-1,k-c+1],[a,k-a]]";
    if (qok) {
      auto eig = quotient_eigenvalues(*r.quotient);
      qok = eig.larger == p.k && eig.smaller == p.c - p.a - 1;
      qdetail = "eigenvalues " + std::to_string(eig.larger) + ", " + std::to_string(eig.smaller);
    }
    checks.push_back(check("quotient_matrix", qok, qdetail));

    if (is_cyclic(g) && strongly_regular)
      checks.push_back(check("circulant_srg_trivial", *p.mu == p.k, "mu = " + std::to_string(*p.mu)));

    if (p.k <= kMaxValency) {
      auto verdicts = enumerate_feasible(p.k);
      bool listed = std::any_of(verdicts.begin(), verdicts.end(), [&](const FeasibilityVerdict& v) {
        return v.survives() && v.n == p.n && v.lambda == p.lambda && v.a == p.a && v.c == p.c;
      });
      checks.push_back(check("feasibility_survivor", listed));
    }

    r.pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& x) { return x.pass; });
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  return r;
}

VerificationReport verify_entry(const std::string& name) { return verify_entry(find_entry(name)); }

CatalogSummary verify_all(unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& entries = catalog_entries();
  CatalogSummary out;
  out.reports.resize(entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(entries.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) out.reports[i] = verify_entry(entries[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : out.reports) (r.pass ? out.passed : out.failed)++;
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace neumaier
