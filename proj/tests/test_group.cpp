#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "neumaier/catalog.hpp"
#include "neumaier/error.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"
#include "oracle.hpp"

using namespace neumaier;

namespace {

void check_axioms(const GroupTable& g) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    REQUIRE(g.mul(0, x) == x);
    REQUIRE(g.mul(x, 0) == x);
    REQUIRE(g.mul(x, g.inv(x)) == 0);
    REQUIRE(g.inv(g.inv(x)) == x);
    std::vector<char> row(n, 0), col(n, 0);
    for (Element y = 0; y < n; ++y) {
      row[g.mul(x, y)] = 1;
      col[g.mul(y, x)] = 1;
    }
    REQUIRE(std::count(row.begin(), row.end(), 1) == static_cast<long>(n));
    REQUIRE(std::count(col.begin(), col.end(), 1) == static_cast<long>(n));
  }
}

}  // namespace

TEST_CASE("cyclic group") {
  auto g = build_cyclic(12);
  CHECK(g.order() == 12);
  CHECK(g.is_abelian());
  CHECK(g.mul(7, 8) == 3);
  CHECK(g.inv(5) == 7);
  CHECK(g.power(1, -1) == 11);
  CHECK(g.power(5, 12) == 0);
  CHECK(g.element_order(4) == 3);
  CHECK(g.element_order(0) == 1);
  CHECK(g.label(0) == "e");
  CHECK(g.label(1) == "a");
  CHECK(g.label(11) == "a^-1");
  check_axioms(g);
}

TEST_CASE("dihedral group D16") {
  auto g = build_dihedral(8);
  CHECK(g.order() == 16);
  CHECK_FALSE(g.is_abelian());
  Element a = *g.find_generator("a"), b = *g.find_generator("b");
  CHECK(g.element_order(a) == 8);
  CHECK(g.element_order(b) == 2);
  CHECK(g.element_order(g.mul(b, a)) == 2);  // (ba)^2 = e
  check_axioms(g);
  auto c = oracle::data_group("d16");
  CHECK(c.order() == 16);
}

TEST_CASE("direct product names and orders") {
  auto g = build_direct_product(build_cyclic(2), build_cyclic(14));
  CHECK(g.order() == 28);
  CHECK(g.is_abelian());
  REQUIRE(g.generator_names().size() == 2);
  CHECK(g.generator_names()[0] == "a1");
  CHECK(g.generator_names()[1] == "a2");
  check_axioms(g);
  std::vector<std::string> names{"a", "b"};
  g.rename_generators(names);
  CHECK(g.label(*g.find_generator("b")) == "b");
  CHECK(resolve_word(g, parse_word("a*b^7")) == g.mul(*g.find_generator("a"), g.power(*g.find_generator("b"), 7)));
}

TEST_CASE("permutation closure gives S4") {
  auto g = oracle::data_group("s4");
  CHECK(g.order() == 24);
  CHECK_FALSE(g.is_abelian());
  check_axioms(g);
  std::map<std::size_t, int> orders;
  for (Element x = 0; x < g.order(); ++x) ++orders[g.element_order(x)];
  CHECK(orders[1] == 1);
  CHECK(orders[2] == 9);
  CHECK(orders[3] == 8);
  CHECK(orders[4] == 6);
}

TEST_CASE("product convention: x*y applies x first") {
  Permutation x{1, 0, 2}, y{0, 2, 1};  // (0 1) then (1 2)
  std::vector<Permutation> gens{x, y};
  auto g = build_from_permutations(3, gens);
  Element gx = *g.find_generator("g1"), gy = *g.find_generator("g2");
  const auto& rep = *g.permutations();
  const Permutation& xy = rep.images[g.mul(gx, gy)];
  // 0 -> 1 under x, then 1 -> 2 under y
  CHECK(xy[0] == 2);
  CHECK(xy[1] == 0);
  CHECK(xy[2] == 1);
}

TEST_CASE("order-21 Frobenius relations") {
  auto g = oracle::data_group("f21");
  CHECK(g.order() == 21);
  CHECK_FALSE(g.is_abelian());
  Element a = *g.find_generator("a"), b = *g.find_generator("b");
  CHECK(g.element_order(a) == 3);
  CHECK(g.element_order(b) == 7);
  CHECK(g.mul(g.mul(g.inv(a), b), a) == g.power(b, 2));
}

TEST_CASE("Z2 x A4 presentation holds for the catalog permutations") {
  auto g = group_from_json(find_entry("z2a4-s2").group);
  CHECK(g.order() == 24);
  auto w = [&](const char* t) { return resolve_element(g, t); };
  CHECK(w("a^2") == 0);
  CHECK(w("b^3") == 0);
  CHECK(w("c^2") == 0);
  CHECK(w("d^2") == 0);
  CHECK(w("a*b") == w("b*a"));
  CHECK(w("a*c") == w("c*a"));
  CHECK(w("a*d") == w("d*a"));
  CHECK(w("c*d") == w("d*c"));
  CHECK(w("b^-1*c*b") == w("d"));
  CHECK(w("b^-1*d*b") == w("c*d"));
  // center is {e, a}
  std::size_t central = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool z = true;
    for (Element y = 0; y < g.order(); ++y) z = z && g.mul(x, y) == g.mul(y, x);
    central += z;
  }
  CHECK(central == 2);
}

TEST_CASE("groups of order 27 from the data directory") {
  for (const char* name : {"z27", "z9xz3", "z3xz3xz3", "heisenberg27", "z9sz3"}) {
    CAPTURE(name);
    auto g = oracle::data_group(name);
    CHECK(g.order() == 27);
    check_axioms(g);
  }
  std::size_t max_order = 0;
  auto h = oracle::data_group("heisenberg27");
  for (Element x = 0; x < 27; ++x) max_order = std::max(max_order, h.element_order(x));
  CHECK(max_order == 3);
  CHECK_FALSE(h.is_abelian());
  CHECK_FALSE(oracle::data_group("z9sz3").is_abelian());
}

TEST_CASE("subgroups and cosets") {
  auto g = build_cyclic(35);
  auto h5 = subgroups_of_order(g, 5);
  REQUIRE(h5.size() == 1);
  CHECK(h5[0] == ElementSet{0, 7, 14, 21, 28});
  CHECK(is_subgroup(g, h5[0]));
  CHECK_FALSE(is_subgroup(g, {0, 7}));
  auto cs = cosets(g, h5[0]);
  CHECK(cs.size() == 7);
  std::set<Element> seen;
  for (auto& c : cs) {
    CHECK(c.size() == 5);
    seen.insert(c.begin(), c.end());
  }
  CHECK(seen.size() == 35);
  CHECK_THROWS_AS(cosets(g, {0, 7}), Error);

  auto s4 = oracle::data_group("s4");
  CHECK(subgroups_of_order(s4, 4).size() == 7);  // 3 cyclic, 4 Klein
  CHECK(subgroups_of_order(s4, 3).size() == 4);
  CHECK(subgroups_of_order(s4, 12).size() == 1);
  CHECK(subgroup_generated(s4, {resolve_element(s4, "(1,2)")}).size() == 2);
}

TEST_CASE("order cap and bad input") {
  CHECK_THROWS_AS(build_cyclic(kOrderCap + 1), Error);
  CHECK_THROWS_AS(group_from_text(R"({"kind":"cyclic"})"), Error);
  CHECK_THROWS_AS(group_from_text(R"({"kind":"torus","n":3})"), Error);
  CHECK_THROWS_AS(group_from_text("{bad"), Error);
  try {
    group_from_text("{bad");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  Permutation not_bij{0, 0, 1};
  std::vector<Permutation> gens{not_bij};
  CHECK_THROWS_AS(build_from_permutations(3, gens), Error);
  // S8 has 40320 elements, above the cap
  CHECK_THROWS_AS(group_from_text(R"j({"kind":"permutation","degree":8,"cycle_base":1,
                                      "generators":["(1,2,3,4,5,6,7,8)","(1,2)"]})j"),
                  Error);
}

TEST_CASE("random associativity, inverse and Latin square per catalog group") {
  std::mt19937 rng(20240611);
  std::set<std::string> done;
  for (const auto& e : catalog_entries()) {
    auto g = group_from_json(e.group);
    if (!done.insert(g.description() + std::to_string(g.order())).second) continue;
    CAPTURE(e.name);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int t = 0; t < 10000; ++t) {
      Element x = pick(rng), y = pick(rng), z = pick(rng);
      REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      REQUIRE(g.inv(g.mul(x, y)) == g.mul(g.inv(y), g.inv(x)));
    }
    check_axioms(g);
  }
}
