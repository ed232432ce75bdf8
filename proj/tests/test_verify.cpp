#include "cayley/verify.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"

using namespace cayley;

TEST_CASE("group enumeration by multisets of cyclic factors") {
  auto upto4 = abelian_groups_up_to(4);
  REQUIRE(upto4.size() == 4);
  CHECK(upto4[0].moduli == std::vector<int64_t>{2});
  CHECK(upto4[1].moduli == std::vector<int64_t>{3});
  CHECK(upto4[2].moduli == std::vector<int64_t>{2, 2});
  CHECK(upto4[3].moduli == std::vector<int64_t>{4});

  CHECK(abelian_groups_up_to(1).empty());

  // order 12 contributes [12], [2,6], [3,4], [2,2,3]
  auto upto12 = abelian_groups_up_to(12);
  int order12 = 0;
  for (const auto& G : upto12) {
    if (G.order == 12) ++order12;
  }
  CHECK(order12 == 4);
}

TEST_CASE("connection set enumeration counts") {
  // 4^pairs * 2^involutions
  CHECK(enumerate_connection_sets(make_group({2})).size() == 2);
  CHECK(enumerate_connection_sets(make_group({3})).size() == 4);
  CHECK(enumerate_connection_sets(make_group({4})).size() == 8);
  CHECK(enumerate_connection_sets(make_group({2, 2})).size() == 8);
  CHECK(enumerate_connection_sets(make_group({12})).size() == 2048);

  // all distinct and all valid by construction
  auto sets = enumerate_connection_sets(make_group({5}));
  CHECK(sets.size() == 16);
  std::sort(sets.begin(), sets.end(), [](const ConnectionSet& a, const ConnectionSet& b) {
    return std::pair(a.A, a.B) < std::pair(b.A, b.B);
  });
  CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
}

TEST_CASE("random connection sets are valid and seed-deterministic") {
  auto G = make_group({2, 4});
  std::mt19937_64 rng1(42), rng2(42);
  for (int i = 0; i < 20; ++i) {
    auto a = random_connection_set(G, rng1);
    auto b = random_connection_set(G, rng2);
    CHECK(a == b);
  }
}

TEST_CASE("per-set invariant bundle passes on known instances") {
  auto Z5 = make_group({5});
  auto cs = make_connection_set(Z5, {element(Z5, {1}), element(Z5, {4})}, {});
  auto r = check_connection_set_invariants(cs);
  CHECK(r.all_ok());
  CHECK(r.undirected);

  auto Z3 = make_group({3});
  auto dir = make_connection_set(Z3, {}, {element(Z3, {1})});
  auto r3 = check_connection_set_invariants(dir);
  CHECK(r3.all_ok());
  CHECK_FALSE(r3.undirected);
}

TEST_CASE("run_verify passes on a small exhaustive sweep") {
  VerifyOptions opts;
  opts.max_order = 4;
  opts.seed = 7;
  auto s = run_verify(opts);
  CHECK(s.groups == 4);
  CHECK(s.connection_sets == 2 + 4 + 8 + 8);
  CHECK(s.failures.empty());
  CHECK(s.checks > 0);
}

TEST_CASE("run_verify with max_order 1 trivially passes") {
  VerifyOptions opts;
  opts.max_order = 1;
  auto s = run_verify(opts);
  CHECK(s.groups == 0);
  CHECK(s.connection_sets == 0);
  CHECK(s.ok());
}

TEST_CASE("run_verify is deterministic across jobs") {
  VerifyOptions serial, parallel;
  serial.max_order = parallel.max_order = 5;
  serial.seed = parallel.seed = 11;
  serial.jobs = 1;
  parallel.jobs = 4;
  auto a = run_verify(serial);
  auto b = run_verify(parallel);
  CHECK(a.groups == b.groups);
  CHECK(a.connection_sets == b.connection_sets);
  CHECK(a.checks == b.checks);
  CHECK(a.failures.size() == b.failures.size());
}

TEST_CASE("injected fault is detected and reported") {
  VerifyOptions opts;
  opts.max_order = 3;
  opts.self_test_negative = true;
  auto s = run_verify(opts);
  REQUIRE_FALSE(s.ok());
  CHECK(s.failures.size() == 1);
  CHECK(s.failures[0].check == "stabilizer-oracle-equivalence");
  CHECK_FALSE(s.failures[0].where.empty());
}
