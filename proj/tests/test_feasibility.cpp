#include <doctest.h>

#include <fstream>
#include <sstream>

#include "neumaier/catalog.hpp"
#include "neumaier/error.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"

using namespace neumaier;

namespace {

std::vector<std::string> golden_lines() {
  std::ifstream in(std::string(NM_TEST_DATA) + "/feasible_k2_10.golden");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::string golden_line(const FeasibilityVerdict& v) {
  return std::to_string(v.k) + " " + v.tuple_string() + " " + feasibility_status_name(v.status) + " " +
         claim_kind_name(v.claim.kind);
}

const FeasibilityVerdict* find(const std::vector<FeasibilityVerdict>& vs, const std::string& tuple) {
  for (const auto& v : vs)
    if (v.tuple_string() == tuple) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("clique count") {
  CHECK(clique_count_ok(24, 8, 4, 1).pass);
  CHECK(clique_count_ok(35, 10, 5, 1).pass);
  auto bad = clique_count_ok(10, 4, 3, 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.left == 6);
  CHECK(bad.right == 7);
}

TEST_CASE("lambda from the clique split") {
  CHECK(lambda_from_clique(9, 4, 2) == 4);
  CHECK(lambda_from_clique(8, 4, 1) == 2);
  CHECK(lambda_from_clique(10, 5, 3) == 6);
  for (std::int64_t c = 2; c <= 10; ++c) CHECK(lambda_from_clique(10, c, 1) == c - 2);
  // 3*1 = 2(lambda - 1) has no integral solution
  CHECK_FALSE(lambda_from_clique(5, 3, 2));
}

TEST_CASE("nonneighbour count") {
  CHECK(nonneighbour_count_ok(16, 9, 4, 4, 2).pass);
  CHECK(nonneighbour_count_ok(4, 2, 0, 2, 1).pass);
  // n=8, k=5, c=4, a=2 fails for every lambda in range
  for (std::int64_t lambda = 2; lambda <= 4; ++lambda) CHECK_FALSE(nonneighbour_count_ok(8, 5, lambda, 4, 2).pass);
  CHECK_FALSE(lambda_from_nonneighbours(8, 5, 4, 2));
  CHECK(lambda_from_nonneighbours(16, 9, 4, 2) == 4);
}

TEST_CASE("mu from the strongly regular count") {
  CHECK(srg_mu(9, 4, 1, 3, 1) == 2);
  for (std::int64_t k = 3; k <= 12; ++k) CHECK(srg_mu(2 * k, k, 0, 2, 1) == k);
  CHECK(srg_mu(21, 10, 5, 6, 2) == 4);
  CHECK(srg_mu(27, 10, 1, 3, 1) == 5);
  // 5*5 = 15(mu-1) has no integral solution
  CHECK_FALSE(srg_mu(24, 8, 2, 4, 1));
  // arithmetic alone admits mu=6 for the strictly Neumaier parameters
  CHECK(srg_mu(16, 9, 4, 4, 2) == 6);
}

TEST_CASE("vertex bound") {
  CHECK(vertex_bound(2) == 4);
  CHECK(vertex_bound(3) == 7);
  const std::int64_t expect[] = {13, 21, 31, 43, 57, 73, 91};
  for (std::int64_t k = 4; k <= 10; ++k) CHECK(vertex_bound(k) == expect[k - 4]);
}

TEST_CASE("edge lower bound") {
  CHECK(edge_lower_bound_doubled(3, 0, 2, 1) == 18);
  CHECK(edge_bound_check(6, 3, 0, 2, 1).pass);
  CHECK(edge_bound_tight(6, 3, 0, 2, 1));
  CHECK(edge_lower_bound_doubled(8, 2, 4, 1) == 112);
  CHECK(edge_bound_check(24, 8, 2, 4, 1).pass);
  CHECK_FALSE(edge_bound_tight(24, 8, 2, 4, 1));
  CHECK(edge_lower_bound_doubled(10, 6, 5, 3) == 140);
  CHECK(edge_bound_check(15, 10, 6, 5, 3).pass);
}

TEST_CASE("auxiliary checks") {
  CHECK_FALSE(nexus_one_ok(5, 4).pass);
  CHECK(nexus_one_ok(8, 4).pass);
  CHECK_FALSE(lambda_one_parity_ok(5, 1).pass);
  CHECK(lambda_one_parity_ok(4, 1).pass);
  CHECK(lambda_one_parity_ok(5, 2).pass);
  CHECK(large_clique_ok(2, 2).pass);
  CHECK_FALSE(large_clique_ok(5, 5).pass);
  CHECK_FALSE(complete_flag(3, 3).pass);
  CHECK(complete_flag(2, 3).pass);
  CHECK_FALSE(handshake_ok(7, 3).pass);
}

TEST_CASE("sweep survivors") {
  auto k2 = enumerate_feasible(2);
  std::vector<std::string> s2;
  for (const auto& v : k2)
    if (v.survives()) s2.push_back(v.tuple_string());
  CHECK(s2 == std::vector<std::string>{"(4,2,0;1,2)"});

  auto k8 = enumerate_feasible(8);
  for (const char* t : {"(24,8,2;1,4)", "(12,8,4;2,3)"}) {
    auto v = find(k8, t);
    REQUIRE(v);
    CHECK(v->status == FeasibilityStatus::feasible);
  }
  auto k9 = enumerate_feasible(9);
  for (const char* t : {"(28,9,2;1,4)", "(16,9,4;2,4)", "(18,9,0;1,2)", "(12,9,6;3,4)"}) {
    auto v = find(k9, t);
    REQUIRE(v);
    CHECK(v->survives());
  }
  auto k10 = enumerate_feasible(10);
  for (const char* t : {"(27,10,1;1,3)", "(15,10,6;3,5)"}) {
    auto v = find(k10, t);
    REQUIRE(v);
    CHECK(v->status == FeasibilityStatus::existence_unresolved);
  }
  auto t7 = find(enumerate_feasible(7), "(20,7,2;1,4)");
  REQUIRE(t7);
  CHECK(t7->status == FeasibilityStatus::feasible);
  CHECK(t7->claim.kind == ClaimKind::known_nonexistent);

  // k=5 c=4: n=8 (a=2) and n=10 (a=1) both eliminated with named reasons
  auto k5 = enumerate_feasible(5);
  for (const auto& v : k5) {
    if (v.c != 4) continue;
    CHECK(v.status == FeasibilityStatus::eliminated);
    bool named = false;
    for (const auto& r : v.reasons)
      if (!r.pass) named = named || r.name == (v.a == 1 ? "nexus_one_valency" : "nonneighbour_edge_count");
    CHECK(named);
  }

  CHECK_THROWS_AS(enumerate_feasible(1), Error);
  CHECK_THROWS_AS(enumerate_feasible(21), Error);
  for (const auto& v : enumerate_feasible(10, 20)) CHECK(v.n <= 20);
}

TEST_CASE("sweep matches the golden survivor list") {
  std::vector<std::string> got;
  for (std::int64_t k = 2; k <= 10; ++k)
    for (const auto& v : enumerate_feasible(k))
      if (v.survives()) got.push_back(golden_line(v));
  auto want = golden_lines();
  REQUIRE(want.size() == 38);
  CHECK(got == want);
}

TEST_CASE("sweep invariants up to valency 20") {
  for (std::int64_t k = 2; k <= kMaxValency; ++k) {
    std::int64_t prev_c = 0, prev_n = 0;
    for (const auto& v : enumerate_feasible(k)) {
      CAPTURE(v.tuple_string());
      CHECK((v.c > prev_c || (v.c == prev_c && v.n >= prev_n)));
      prev_c = v.c;
      prev_n = v.n;
      if (v.status == FeasibilityStatus::eliminated) {
        bool failed = false;
        for (const auto& r : v.reasons) failed = failed || !r.pass;
        CHECK(failed);
        continue;
      }
      for (const auto& r : v.reasons) CHECK(r.pass);
      REQUIRE(v.lambda);
      NeumaierParameters p{v.n, v.k, *v.lambda, v.a, v.c, v.mu};
      CHECK(violated_identities(p).empty());
      CHECK(v.n <= vertex_bound(k));
      if (v.mu) CHECK(v.eigenvalues.has_value());
      // equality in the edge bound goes with mu = k
      if (v.c >= 2 && v.c < v.k) CHECK(edge_bound_tight(v.n, v.k, *v.lambda, v.c, v.a) == (v.mu == v.k));
    }
  }
}

TEST_CASE("catalog parameters are sweep survivors") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.name);
    if (e.expected_kind == ClassKind::complete) continue;
    auto vs = enumerate_feasible(e.expected.k);
    NeumaierParameters p = e.expected;
    p.mu.reset();
    auto v = find(vs, p.to_string());
    REQUIRE(v);
    CHECK(v->survives());
  }
}
