#include <doctest.h>

#include <random>
#include <set>

#include "neumaier/algebra.hpp"
#include "neumaier/catalog.hpp"
#include "neumaier/error.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

ElementSet words(const GroupTable& g, std::vector<std::string> w) { return resolve_elements(g, w); }

GroupTable lattice_group(int n) {
  auto g = build_direct_product(build_cyclic(n), build_cyclic(n));
  std::vector<std::string> names{"a", "b"};
  g.rename_generators(names);
  return g;
}

ElementSet lattice_set(const GroupTable& g, int n) {
  std::vector<std::string> w;
  for (int j = 1; j < n; ++j) {
    w.push_back("a^" + std::to_string(j));
    w.push_back("b^" + std::to_string(j));
  }
  return words(g, w);
}

AlgebraElement random_element(const GroupTable& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<std::int64_t> c(g.order());
  for (auto& x : c) x = coef(rng);
  return AlgebraElement(g, c);
}

}  // namespace

TEST_CASE("subset sums and convolution basics") {
  auto g = build_cyclic(5);
  auto all = subset_sum(g, all_elements(g));
  for (auto c : all.coeffs()) CHECK(c == 1);
  auto none = subset_sum(g, {});
  for (auto c : none.coeffs()) CHECK(c == 0);
  auto e = subset_sum(g, {0});
  CHECK(convolve(e, e) == e);
  auto gg = convolve(all, all);
  for (auto c : gg.coeffs()) CHECK(c == 5);
  auto s = subset_sum(g, {1, 4});
  auto s2 = convolve(s, s);
  CHECK(s2.coeffs() == std::vector<std::int64_t>{2, 0, 1, 1, 0});
  CHECK(involute(subset_sum(g, {1})) == subset_sum(g, {4}));
  CHECK(involute(s) == s);
}

TEST_CASE("group mismatch and overflow are reported") {
  auto g = build_cyclic(3), h = build_cyclic(3);
  CHECK_THROWS_AS(convolve(subset_sum(g, {1}), subset_sum(h, {1})), Error);
  AlgebraElement big(g, {INT64_MAX / 2, INT64_MAX / 2, 0});
  CHECK_THROWS(convolve(big, AlgebraElement(g, {3, 0, 0})));
}

TEST_CASE("convolution agrees with the double-loop oracle") {
  for (const char* name : {"d16", "s4", "f21"}) {
    auto g = oracle::data_group(name);
    std::mt19937 rng(7);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int t = 0; t < 20; ++t) {
      ElementSet x, y;
      for (int i = 0; i < 6; ++i) {
        x.push_back(pick(rng));
        y.push_back(pick(rng));
      }
      x = normalize(x);
      y = normalize(y);
      CHECK(convolve(subset_sum(g, x), subset_sum(g, y)).coeffs() == oracle::product(g, x, y));
    }
  }
}

TEST_CASE("associativity, distributivity and the involution law per catalog group") {
  std::set<std::string> done;
  std::mt19937 rng(99);
  for (const auto& e : catalog_entries()) {
    auto g = group_from_json(e.group);
    if (!done.insert(g.description() + std::to_string(g.order())).second) continue;
    CAPTURE(e.name);
    for (int t = 0; t < 100; ++t) {
      auto u = random_element(g, rng), v = random_element(g, rng), w = random_element(g, rng);
      REQUIRE(convolve(convolve(u, v), w) == convolve(u, convolve(v, w)));
      REQUIRE(convolve(u, v + w) == convolve(u, v) + convolve(u, w));
      REQUIRE(convolve(u + v, w) == convolve(u, w) + convolve(v, w));
      REQUIRE(involute(convolve(u, v)) == convolve(involute(v), involute(u)));
      REQUIRE(involute(involute(u)) == u);
    }
  }
}

TEST_CASE("regular clique identity") {
  auto d16 = oracle::data_group("d16");
  auto s = words(d16, {"a", "a^-1", "a^2", "a^-2", "b", "b*a", "b*a^3", "b*a^4", "b*a^6"});
  auto c = words(d16, {"e", "a^2", "b", "a^2*b"});
  CHECK(check_regular_clique_identity(d16, s, c) == 2);
  CHECK_FALSE(check_regular_clique_identity(d16, s, words(d16, {"e", "a"})).has_value());

  auto z35 = build_cyclic(35);
  ElementSet sub{0, 7, 14, 21, 28};
  // S\C meets every nonzero coset of <a^7> once, so the subgroup is a regular clique
  auto once = words(z35, {"a^7", "a^14", "a^21", "a^28", "a", "a^-1", "a^2", "a^-2", "a^3", "a^-3"});
  CHECK(check_regular_clique_identity(z35, once, sub) == 1);
  auto twice = words(z35, {"a^7", "a^14", "a^21", "a^28", "a", "a^-1", "a^2", "a^-2", "a^8", "a^-8"});
  CHECK_FALSE(check_regular_clique_identity(z35, twice, sub).has_value());

  CHECK_THROWS_AS(check_regular_clique_identity(d16, s, words(d16, {"a", "a^2"})), Error);
}

TEST_CASE("partial difference set identity") {
  auto l3 = lattice_group(3);
  auto fit = check_pds_identity(l3, lattice_set(l3, 3));
  REQUIRE(fit);
  CHECK(*fit == PdsFit{1, 2});
  auto z6 = build_cyclic(6);
  CHECK(check_pds_identity(z6, {1, 3, 5}) == PdsFit{0, 3});
  auto d16 = oracle::data_group("d16");
  CHECK_FALSE(check_pds_identity(d16, words(d16, {"a", "a^-1", "a^2", "a^-2", "b", "b*a", "b*a^3", "b*a^4", "b*a^6"})));
  ElementSet all = all_elements(z6);
  all.erase(all.begin());
  CHECK_FALSE(check_pds_identity(z6, all));
}

TEST_CASE("second identity and complement identities") {
  auto l3 = lattice_group(3);
  auto s = lattice_set(l3, 3);
  auto c = words(l3, {"e", "a", "a^2"});
  NeumaierConstants k{1, 2, 1};
  CHECK(check_second_identity(l3, s, c, k));
  CHECK(check_complement_identities(l3, s, c, k));
  CHECK_FALSE(check_complement_identities(l3, s, c, {1, 3, 1}));

  auto z6 = build_cyclic(6);
  NeumaierConstants kk{0, 3, 1};
  CHECK(check_second_identity(z6, {1, 3, 5}, {0, 1}, kk));
  CHECK(check_complement_identities(z6, {1, 3, 5}, {0, 1}, kk));
  CHECK_FALSE(check_second_identity(z6, {1, 3, 5}, {0, 1}, {0, 2, 1}));
  // a perturbed nexus is rejected before any comparison
  CHECK_THROWS_AS(check_second_identity(z6, {1, 3, 5}, {0, 1}, {0, 3, 2}), Error);

  auto d16 = oracle::data_group("d16");
  auto sd = words(d16, {"a", "a^-1", "a^2", "a^-2", "b", "b*a", "b*a^3", "b*a^4", "b*a^6"});
  auto cd = words(d16, {"e", "a^2", "b", "a^2*b"});
  for (std::int64_t mu = 0; mu <= 16; ++mu) {
    CHECK_FALSE(check_second_identity(d16, sd, cd, {4, mu, 2}, Side::left));
    CHECK_FALSE(check_second_identity(d16, sd, cd, {4, mu, 2}, Side::right));
  }
}

TEST_CASE("second identity coefficients match common-neighbour counts") {
  // S*(S-C) at g counts neighbours of g inside S minus [g in S].
  auto g = oracle::data_group("f21");
  auto s = words(g, {"a", "a^-1", "b^2", "b^-2", "a*b^2", "b^-2*a^-1", "a*b^4", "b^-4*a^-1", "a^2*b", "b^-1*a^-2"});
  auto adj = oracle::adjacency(g, s);
  auto prod = oracle::product(g, s, s);
  for (Element x = 0; x < g.order(); ++x) CHECK(prod[x] == oracle::common(adj, x, 0));
}

TEST_CASE("Schur closure") {
  auto l4 = lattice_group(4);
  auto s = lattice_set(l4, 4);
  auto c = words(l4, {"e", "b", "b^2", "b^3"});
  auto basis = neumaier_basis(l4, s, c);
  CHECK(basis.blocks.size() == 4);
  auto res = check_schur_closure(l4, basis);
  REQUIRE(std::holds_alternative<StructureConstants>(res));
  const auto& p = std::get<StructureConstants>(res);
  // T1*T1 for C\e = {b, b^2, b^3}: 3 e + 2 (C\e)
  CHECK(p[1][1][0] == 3);
  CHECK(p[1][1][1] == 2);

  auto z5 = build_cyclic(5);
  PartitionBasis singletons;
  for (Element x = 0; x < 5; ++x) singletons.blocks.push_back({x});
  auto rs = check_schur_closure(z5, singletons);
  REQUIRE(std::holds_alternative<StructureConstants>(rs));
  CHECK(std::get<StructureConstants>(rs)[2][4][1] == 1);

  PartitionBasis bad{{{0}, {1, 2, 4}, {3}}};
  CHECK_THROWS_AS(check_schur_closure(z5, bad), Error);
  // {1,2} and {3,4} swap under inversion, which a Schur ring allows
  PartitionBasis swapped{{{0}, {1, 2}, {3, 4}}};
  CHECK_NOTHROW(validate_basis(z5, swapped));
  PartitionBasis open{{{0}, {1, 4}, {2, 3}}};
  CHECK(std::holds_alternative<StructureConstants>(check_schur_closure(z5, open)));
  PartitionBasis not_closed{{{0}, {1, 4}, {2}, {3}}};
  CHECK_NOTHROW(validate_basis(z5, not_closed));

  // Z2 x Z4 split so that products are not constant on a block
  auto z8 = build_cyclic(8);
  PartitionBasis mixed{{{0}, {1, 7}, {2, 6, 4}, {3, 5}}};
  auto rm = check_schur_closure(z8, mixed);
  CHECK(std::holds_alternative<SchurFailure>(rm));
}

TEST_CASE("basis validation") {
  auto z5 = build_cyclic(5);
  CHECK_THROWS_AS(validate_basis(z5, {{{1}, {0, 2, 3, 4}}}), Error);
  CHECK_THROWS_AS(validate_basis(z5, {{{0}, {1, 4}}}), Error);
  CHECK_THROWS_AS(validate_basis(z5, {{{0}, {1, 4}, {1, 2, 3}}}), Error);
  CHECK_THROWS_AS(validate_basis(z5, {{{0}, {1}, {2, 3, 4}}}), Error);
}
