#include <doctest.h>

#include "neumaier/catalog.hpp"
#include "neumaier/error.hpp"
#include "neumaier/neumaier.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

CayleyGraph graph_of(const GroupTable& g, const std::vector<std::string>& words) {
  return CayleyGraph(ConnectionSet(g, resolve_elements(g, words)));
}

}  // namespace

TEST_CASE("classification of small examples") {
  auto z4 = build_cyclic(4);
  auto c4 = classify(graph_of(z4, {"a", "a^3"}));
  CHECK(c4.kind == ClassKind::strongly_regular_neumaier);
  REQUIRE(c4.params);
  CHECK(c4.params->to_string() == "(4,2,0;1,2;mu=2)");

  auto z5 = build_cyclic(5);
  auto k5 = classify(graph_of(z5, {"a", "a^2", "a^3", "a^4"}));
  CHECK(k5.kind == ClassKind::complete);
  CHECK_FALSE(k5.params);

  // C5 is edge-regular with lambda 0 but an edge misses a vertex and hits another
  auto c5 = classify(graph_of(z5, {"a", "a^4"}));
  CHECK(c5.kind == ClassKind::edge_regular_no_regular_clique);
  CHECK(c5.lambda == 0);

  auto z6 = build_cyclic(6);
  CHECK_THROWS_AS(classify(graph_of(z6, {"a^2", "a^4"})), Error);

  // prism C3 x K2 on Z6: edges inside triangles have 1 common neighbour, rungs 0
  auto prism = classify(graph_of(z6, {"a^2", "a^4", "a^3"}));
  CHECK(prism.kind == ClassKind::not_edge_regular);

  auto d16 = oracle::data_group("d16");
  auto strict = classify(graph_of(d16, {"a", "a^-1", "a^2", "a^-2", "b", "b*a", "b*a^3", "b*a^4", "b*a^6"}));
  CHECK(strict.kind == ClassKind::strictly_neumaier);
  REQUIRE(strict.params);
  CHECK(strict.params->to_string() == "(16,9,4;2,4)");
  CHECK(strict.is_neumaier());
}

TEST_CASE("edge-regularity and mu agree with the oracle on every catalog entry") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    auto g = group_from_json(e.group);
    auto s = resolve_elements(g, e.elements);
    CayleyGraph graph{ConnectionSet(g, s)};
    auto adj = oracle::adjacency(g, s);
    auto lam = oracle::constant_count(adj, true);
    auto mu = oracle::constant_count(adj, false);
    auto got_l = edge_regular_lambda(graph);
    REQUIRE(got_l.has_value() == lam.has_value());
    if (lam) CHECK(*got_l == *lam);
    auto got_mu = strong_regular_mu(graph);
    CHECK(got_mu.has_value() == mu.has_value());
    if (mu && got_mu) CHECK(*got_mu == *mu);
  }
}

TEST_CASE("clique enumeration agrees with plain recursion") {
  for (const char* name : {"d16-smallest-strict", "lattice-4", "s4-s1", "f21-t7", "multipartite-3x3"}) {
    CAPTURE(name);
    const auto& e = find_entry(name);
    auto g = group_from_json(e.group);
    auto s = resolve_elements(g, e.elements);
    CayleyGraph graph{ConnectionSet(g, s)};
    auto adj = oracle::adjacency(g, s);
    for (std::size_t size = 1; size <= 5; ++size) {
      auto fast = cliques_containing_identity(graph, size);
      auto slow = oracle::cliques_through_zero(adj, size);
      CHECK(fast == slow);
      for (const auto& c : fast) {
        auto expect = oracle::nexus(adj, c);
        auto got = nexus_of_clique(graph, c);
        CHECK(got.has_value() == expect.has_value());
        if (got && expect) CHECK(got->a == *expect);
      }
    }
    for (const auto& rc : find_regular_cliques(graph)) {
      CHECK(oracle::is_clique(adj, rc.clique));
      CHECK(oracle::nexus(adj, rc.clique) == rc.nexus);
    }
  }
}

TEST_CASE("nexus of clique") {
  auto z4 = build_cyclic(4);
  auto c4 = graph_of(z4, {"a", "a^3"});
  auto nx = nexus_of_clique(c4, {0, 1});
  REQUIRE(nx);
  CHECK(nx->a == 1);
  CHECK_FALSE(nx->forces_complete);
  CHECK_THROWS_AS(nexus_of_clique(c4, {0, 2}), Error);
  CHECK_THROWS_AS(nexus_of_clique(c4, {0, 9}), Error);

  auto z3 = build_cyclic(3);
  auto k3 = graph_of(z3, {"a", "a^2"});
  auto whole = nexus_of_clique(k3, {0, 1});
  REQUIRE(whole);
  CHECK(whole->a == 2);
  CHECK(whole->forces_complete);
}

TEST_CASE("counting identities") {
  CHECK(violated_identities({16, 9, 4, 2, 4, std::nullopt}).empty());
  CHECK(violated_identities({9, 4, 1, 1, 3, 2}).empty());
  auto bad = violated_identities({16, 9, 4, 2, 5, std::nullopt});
  CHECK_FALSE(bad.empty());
  CHECK(bad.front() == "clique_edge_count");
  CHECK(violated_identities({9, 4, 1, 1, 3, 3}) == std::vector<std::string>{"strongly_regular_count"});
}

TEST_CASE("integer eigenvalue check") {
  // L2(3) = SRG(9,4,1,2): eigenvalues 1 and -2, c=3, a=1
  auto l3 = integer_eigs_check({9, 4, 1, 1, 3, 2});
  CHECK(l3.integral);
  CHECK(l3.r == 1);
  CHECK(l3.s == -2);
  CHECK(l3.passes());
  // K_{3,3}: eigenvalues 0, -3, c=2, a=1
  CHECK(integer_eigs_check({6, 3, 0, 1, 2, 3}).passes());
  // T(7) = SRG(21,10,5,4): eigenvalues 3 and -2
  auto t7 = integer_eigs_check({21, 10, 5, 2, 6, 4});
  CHECK(t7.r == 3);
  CHECK(t7.s == -2);
  CHECK(t7.passes());
  // pentagon-like parameters have irrational eigenvalues
  CHECK_FALSE(integer_eigs_check({5, 2, 0, 1, 2, 1}).integral);
  CHECK_THROWS_AS(integer_eigs_check({16, 9, 4, 2, 4, std::nullopt}), Error);
  CHECK(srg_eigenvalues(27, 10, 1, 5) == IntegerRoots{1, -5});
}
