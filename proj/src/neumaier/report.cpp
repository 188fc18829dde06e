#include "neumaier/report.hpp"

#include <algorithm>
#include <variant>

#include "neumaier/algebra.hpp"
#include "neumaier/error.hpp"

namespace neumaier {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const NeumaierParameters& p) {
  return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"a", p.a}, {"c", p.c}, {"mu", opt(p.mu)}, {"tuple", p.to_string()}};
}

json labels_json(const GroupTable& g, const ElementSet& s) {
  json out = json::array();
  for (auto x : s) out.push_back(g.label(x));
  return out;
}

json to_json(const IntegerEigenvalueCheck& e) {
  return {{"integral", e.integral}, {"r", e.r},           {"s", e.s},          {"r_matches", e.r_matches},
          {"s_matches", e.s_matches}, {"hoffman", e.hoffman}, {"passes", e.passes()}};
}

json to_json(const FeasibilityVerdict& v) {
  json reasons = json::array();
  json eliminated_by = nullptr;
  for (const auto& r : v.reasons) {
    reasons.push_back({{"name", r.name}, {"relation", r.relation}, {"left", r.left}, {"right", r.right}, {"pass", r.pass}});
    if (!r.pass && eliminated_by.is_null()) eliminated_by = r.name;
  }
  json out = {{"tuple", v.tuple_string()},
              {"n", v.n},
              {"k", v.k},
              {"lambda", opt(v.lambda)},
              {"a", v.a},
              {"c", v.c},
              {"mu", opt(v.mu)},
              {"status", feasibility_status_name(v.status)},
              {"eliminated_by", eliminated_by},
              {"reasons", reasons},
              {"claim", {{"kind", claim_kind_name(v.claim.kind)}, {"text", v.claim.text}}},
              {"family", v.family},
              {"resolution", v.resolution},
              {"integer_eigenvalues", v.eigenvalues ? to_json(*v.eigenvalues) : json(nullptr)}};
  return out;
}

json to_json(const CatalogEntry& e) {
  return {{"name", e.name},
          {"group", e.group},
          {"elements", e.elements},
          {"expected_kind", class_kind_name(e.expected_kind)},
          {"expected", to_json(e.expected)},
          {"description", e.description},
          {"printed_parameters", e.printed_parameters}};
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"pass", c.pass}, {"detail", c.detail}});
  json out = {{"name", r.name},
              {"group", r.group_description},
              {"pass", r.pass},
              {"error", r.error},
              {"diameter", opt(r.diameter)},
              {"algebra_nexus", opt(r.algebra_nexus)},
              {"checks", checks}};
  if (r.classification) {
    out["kind"] = class_kind_name(r.classification->kind);
    out["parameters"] = r.classification->params ? to_json(*r.classification->params) : json(nullptr);
  }
  out["pds"] = r.pds ? json{{"lambda", r.pds->lambda}, {"mu", r.pds->mu}} : json(nullptr);
  out["quotient"] = r.quotient ? json(*r.quotient) : json(nullptr);
  out["integer_eigenvalues"] = r.eigenvalues ? to_json(*r.eigenvalues) : json(nullptr);
  return out;
}

json to_json(const CatalogSummary& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"entries", s.reports.size()}, {"passed", s.passed}, {"failed", s.failed}, {"elapsed_ms", s.elapsed_ms},
          {"reports", reports}};
}

json check_report(const ConnectionSet& s) {
  const GroupTable& g = s.group();
  CayleyGraph graph(s);
  json out = {{"group", g.description()},
              {"order", g.order()},
              {"connection_set", labels_json(g, s.members())},
              {"degree", s.size()},
              {"connected", graph.is_connected()}};
  if (!graph.is_connected()) {
    out["kind"] = "disconnected";
    out["neumaier"] = false;
    return out;
  }
  out["diameter"] = graph.diameter();
  Classification cl = classify(graph);
  out["kind"] = class_kind_name(cl.kind);
  out["neumaier"] = cl.is_neumaier();
  out["lambda"] = opt(cl.lambda);
  out["parameters"] = cl.params ? to_json(*cl.params) : json(nullptr);
  out["witness"] = labels_json(g, cl.witness);
  json cliques = json::array();
  for (const auto& rc : cl.cliques) cliques.push_back({{"clique", labels_json(g, rc.clique)}, {"nexus", rc.nexus}});
  out["regular_cliques"] = cliques;
  if (cl.params && cl.params->mu) out["integer_eigenvalues"] = to_json(integer_eigs_check(*cl.params));
  return out;
}

json algebra_report(const ConnectionSet& s, const std::optional<ElementSet>& clique) {
  const GroupTable& g = s.group();
  CayleyGraph graph(s);
  json out = {{"group", g.description()}, {"connection_set", labels_json(g, s.members())}};
  json ids = json::array();

  auto pds = check_pds_identity(g, s.members());
  ids.push_back({{"name", "pds_identity"},
                 {"pass", pds.has_value()},
                 {"lambda", pds ? json(pds->lambda) : json(nullptr)},
                 {"mu", pds ? json(pds->mu) : json(nullptr)}});

  ElementSet c;
  if (clique) {
    c = normalize(*clique);
    if (std::find(c.begin(), c.end(), GroupTable::identity) == c.end())
      throw Error(Errc::invalid_argument, "the clique must contain the identity");
    nexus_of_clique(graph, c);  // throws not_a_clique
  } else if (graph.is_connected()) {
    auto found = find_regular_cliques(graph);
    if (!found.empty()) c = found.front().clique;
  }
  out["clique"] = labels_json(g, c);

  std::optional<std::int64_t> a;
  if (!c.empty()) {
    a = check_regular_clique_identity(g, s.members(), c);
    ids.push_back({{"name", "regular_clique_identity"}, {"pass", a.has_value()}, {"a", opt(a)}});
  }
  auto lambda = edge_regular_lambda(graph);
  if (a && pds && lambda) {
    NeumaierConstants k{pds->lambda, pds->mu, *a};
    ids.push_back({{"name", "second_identity"}, {"pass", check_second_identity(g, s.members(), c, k, Side::left)}});
    ids.push_back(
        {{"name", "second_identity_reversed"}, {"pass", check_second_identity(g, s.members(), c, k, Side::right)}});
    ids.push_back({{"name", "complement_identities"}, {"pass", check_complement_identities(g, s.members(), c, k)}});
  }
  if (!c.empty()) {
    auto res = check_schur_closure(g, neumaier_basis(g, s.members(), c));
    json schur = {{"name", "schur_closure"}, {"pass", std::holds_alternative<StructureConstants>(res)}};
    if (auto* f = std::get_if<SchurFailure>(&res)) schur["failure"] = {{"i", f->i}, {"j", f->j}, {"element", g.label(f->element)}};
    else
      schur["structure_constants"] = std::get<StructureConstants>(res);
    ids.push_back(schur);
  }
  out["identities"] = ids;
  out["clique_is_regular"] = a.has_value();
  return out;
}

json search_report(const GroupTable& g, const NeumaierParameters& target, const SearchResult& r) {
  json sets = json::array(), idx = json::array();
  for (const auto& s : r.sets) {
    sets.push_back(labels_json(g, s));
    idx.push_back(s);
  }
  return {{"group", g.description()},
          {"target", to_json(target)},
          {"proven_empty", r.sets.empty()},
          {"sets", sets},
          {"set_indices", idx},
          {"stats",
           {{"candidates", r.stats.candidates},
            {"disconnected", r.stats.disconnected},
            {"lambda_rejected", r.stats.lambda_rejected},
            {"clique_rejected", r.stats.clique_rejected},
            {"mu_rejected", r.stats.mu_rejected},
            {"matches", r.stats.matches}}},
          {"anchors", r.anchors},
          {"anchor_proven", r.anchor_proven},
          {"warnings", r.warnings},
          {"nonsubgroup_witnesses", r.nonsubgroup_witnesses},
          {"elapsed_ms", r.elapsed_ms}};
}

json feasibility_report(std::int64_t k, std::optional<std::int64_t> max_n) {
  json verdicts = json::array();
  std::size_t survivors = 0;
  for (const auto& v : enumerate_feasible(k, max_n)) {
    verdicts.push_back(to_json(v));
    if (v.survives()) ++survivors;
  }
  return {{"k", k}, {"vertex_bound", vertex_bound(k)}, {"max_n", opt(max_n)}, {"survivors", survivors}, {"verdicts", verdicts}};
}

}  // namespace neumaier
