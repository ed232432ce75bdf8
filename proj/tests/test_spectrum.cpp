#include "cayley/spectrum.hpp"

#include <cmath>

#include "cayley/splitting_field.hpp"
#include "doctest.h"

using namespace cayley;

namespace {

ConnectionSet cset(const AbelianGroup& G, std::vector<std::vector<int64_t>> A,
                   std::vector<std::vector<int64_t>> B) {
  std::vector<GroupElement> a, b;
  for (auto& c : A) a.push_back(element(G, std::move(c)));
  for (auto& c : B) b.push_back(element(G, std::move(c)));
  return make_connection_set(G, std::move(a), std::move(b));
}

ConnectionSet complete_graph(const AbelianGroup& G) {
  std::vector<GroupElement> a;
  for (const GroupElement& g : elements(G)) {
    if (!is_zero(g)) a.push_back(g);
  }
  return make_connection_set(G, std::move(a), {});
}

}  // namespace

TEST_CASE("connection set validation errors are distinct") {
  auto Z4 = make_group({4});
  CHECK_NOTHROW(cset(Z4, {{2}}, {{1}}));

  CHECK_THROWS_WITH_AS(cset(Z4, {}, {{1}, {3}}), doctest::Contains("B-meets-minus-B"),
                       validation_error);
  auto Z5 = make_group({5});
  CHECK_THROWS_WITH_AS(cset(Z5, {{1}}, {}), doctest::Contains("A-not-symmetric"),
                       validation_error);
  CHECK_THROWS_WITH_AS(cset(Z5, {{0}}, {}), doctest::Contains("contains-zero"),
                       validation_error);
  CHECK_THROWS_WITH_AS(cset(Z5, {{1}, {4}}, {{1}}), doctest::Contains("A-B-overlap"),
                       validation_error);
}

TEST_CASE("split_connection_set extracts the symmetric part") {
  auto Z4 = make_group({4});
  auto cs = split_connection_set(Z4, {element(Z4, {1}), element(Z4, {2})});
  CHECK(cs.A == ElementSet{element(Z4, {2})});
  CHECK(cs.B == ElementSet{element(Z4, {1})});

  auto Z5 = make_group({5});
  auto cs5 = split_connection_set(Z5, {element(Z5, {1}), element(Z5, {4})});
  CHECK(cs5.A.size() == 2);
  CHECK(cs5.B.empty());

  auto Z3 = make_group({3});
  auto cs3 = split_connection_set(Z3, {element(Z3, {1})});
  CHECK(cs3.A.empty());
  CHECK(cs3.B == ElementSet{element(Z3, {1})});

  CHECK_THROWS_WITH_AS(split_connection_set(Z3, {element(Z3, {0})}),
                       doctest::Contains("contains-zero"), validation_error);
}

TEST_CASE("hermitian entries") {
  auto Z4 = make_group({4});
  auto cs = cset(Z4, {}, {{1}});
  CHECK(hermitian_entry(cs, element(Z4, {0}), element(Z4, {1})) == HermitianEntry{0, 1});
  CHECK(hermitian_entry(cs, element(Z4, {1}), element(Z4, {0})) == HermitianEntry{0, -1});
  CHECK(hermitian_entry(cs, element(Z4, {2}), element(Z4, {2})) == HermitianEntry{0, 0});

  auto undirected = cset(Z4, {{2}}, {});
  CHECK(hermitian_entry(undirected, element(Z4, {1}), element(Z4, {3})) == HermitianEntry{1, 0});
}

TEST_CASE("lambda and mu parts on frozen values") {
  auto Z5 = make_group({5});
  auto c5 = cset(Z5, {{1}, {4}}, {});
  CHECK(lambda_part(c5, element(Z5, {0})) == cyc_integer(20, 2));
  CHECK(mu_part(c5, element(Z5, {0})) == cyc_zero(20));
  // zeta_5 + zeta_5^4 expressed in Z[zeta_20]
  auto expected = cyc_add(root_power(20, 4), root_power(20, 16));
  CHECK(lambda_part(c5, element(Z5, {1})) == expected);

  auto Z4 = make_group({4});
  auto dir4 = cset(Z4, {}, {{1}});
  CHECK(mu_part(dir4, element(Z4, {1})) == cyc_integer(16, -2));
}

TEST_CASE("directed 4-cycle spectrum is 0, -2, 0, 2") {
  auto Z4 = make_group({4});
  auto cs = cset(Z4, {}, {{1}});
  auto spec = full_spectrum(cs);
  REQUIRE(spec.entries.size() == 4);
  CHECK(spec.entries[0].gamma == cyc_integer(16, 0));
  CHECK(spec.entries[1].gamma == cyc_integer(16, -2));
  CHECK(spec.entries[2].gamma == cyc_integer(16, 0));
  CHECK(spec.entries[3].gamma == cyc_integer(16, 2));
}

TEST_CASE("directed triangle spectrum is 0, -sqrt(3), sqrt(3)") {
  auto Z3 = make_group({3});
  auto cs = cset(Z3, {}, {{1}});
  auto spec = full_spectrum(cs);
  REQUIRE(spec.entries.size() == 3);
  CHECK(is_rational(spec.entries[0].gamma));
  CHECK(complex_embed(spec.entries[1].gamma).real() == doctest::Approx(-1.7320508).epsilon(1e-6));
  CHECK(complex_embed(spec.entries[2].gamma).real() == doctest::Approx(1.7320508).epsilon(1e-6));
  for (const auto& e : spec.entries) {
    CHECK(std::abs(complex_embed(e.gamma).imag()) < 1e-9);
  }
}

TEST_CASE("empty and complete connection sets") {
  auto G = make_group({2, 3});
  auto empty = make_connection_set(G, {}, {});
  for (const auto& e : full_spectrum(empty).entries) {
    CHECK(e.gamma.is_zero());
  }

  auto spec = full_spectrum(complete_graph(G));
  int64_t big = 0, minus1 = 0;
  for (const auto& e : spec.entries) {
    REQUIRE(is_rational(e.gamma));
    if (as_integer(e.gamma) == G.order - 1) ++big;
    if (as_integer(e.gamma) == -1) ++minus1;
  }
  CHECK(big == 1);
  CHECK(minus1 == G.order - 1);
}

TEST_CASE("char_poly frozen cases") {
  auto Z4 = make_group({4});
  CHECK(char_poly(cset(Z4, {}, {{1}})) == std::vector<BigInt>{0, 0, -4, 0, 1});

  auto G = make_group({2, 3});
  CHECK(char_poly(make_connection_set(G, {}, {})) ==
        std::vector<BigInt>{0, 0, 0, 0, 0, 0, 1});

  // C5 cycle: x^5 - 5x^3 + 5x - 2
  auto Z5 = make_group({5});
  CHECK(char_poly(cset(Z5, {{1}, {4}}, {})) == std::vector<BigInt>{-2, 5, 0, -5, 0, 1});
}

TEST_CASE("numeric spectrum agrees with frozen values") {
  auto Z4 = make_group({4});
  auto vals = numeric_spectrum(cset(Z4, {}, {{1}}), 1e-8);
  REQUIRE(vals.size() == 4);
  CHECK(vals[0] == doctest::Approx(-2).epsilon(1e-9));
  CHECK(vals[1] == doctest::Approx(0).scale(1).epsilon(1e-9));
  CHECK(vals[2] == doctest::Approx(0).scale(1).epsilon(1e-9));
  CHECK(vals[3] == doctest::Approx(2).epsilon(1e-9));

  auto Z5 = make_group({5});
  auto c5 = numeric_spectrum(cset(Z5, {{1}, {4}}, {}), 1e-8);
  REQUIRE(c5.size() == 5);
  CHECK(c5[0] == doctest::Approx(-1.6180339887).epsilon(1e-8));
  CHECK(c5[1] == doctest::Approx(-1.6180339887).epsilon(1e-8));
  CHECK(c5[2] == doctest::Approx(0.6180339887).epsilon(1e-8));
  CHECK(c5[3] == doctest::Approx(0.6180339887).epsilon(1e-8));
  CHECK(c5[4] == doctest::Approx(2.0).epsilon(1e-8));

  for (double v : numeric_spectrum(make_connection_set(Z5, {}, {}), 1e-8)) {
    CHECK(std::abs(v) < 1e-10);
  }

  CHECK_THROWS_AS(numeric_spectrum(make_connection_set(Z5, {}, {}), 0.0), validation_error);
}

TEST_CASE("spectrum invariants on a mixed example") {
  auto G = make_group({4, 3});
  auto cs = cset(G, {{2, 0}, {2, 1}, {2, 2}}, {{1, 0}, {0, 1}});
  auto spec = full_spectrum(cs);
  const int64_t m = spec.modulus;
  REQUIRE(m == 48);

  CycInt sum = cyc_zero(m), sum_sq = cyc_zero(m);
  for (const auto& e : spec.entries) {
    const auto& g = e.g;
    const auto& mirrored = spec.at(neg(G, g));
    // negation symmetry: lambda is even, mu is odd in g
    CHECK(mirrored.lambda == e.lambda);
    CHECK(mirrored.mu == cyc_neg(e.mu));
    // reality: fixed by conjugation
    CHECK(galois_apply(m - 1, e.gamma) == e.gamma);
    sum = cyc_add(sum, e.gamma);
    sum_sq = cyc_add(sum_sq, cyc_mul(e.gamma, e.gamma));
  }
  CHECK(as_integer(sum) == 0);
  CHECK(as_integer(sum_sq) ==
        G.order * (static_cast<int64_t>(cs.A.size()) + 2 * static_cast<int64_t>(cs.B.size())));

  // Galois action permutes the spectrum
  for (int64_t k : units(m).elements) {
    for (const auto& e : spec.entries) {
      const GroupElement target = mod4_class(k) == Mod4Class::F
                                      ? scalar_mul(G, k, e.g)
                                      : neg(G, scalar_mul(G, k, e.g));
      CHECK(galois_apply(k, e.gamma) == spec.at(target).gamma);
    }
  }

  // numeric cross-check
  auto numeric = numeric_spectrum(cs, 1e-8);
  std::vector<double> exact;
  for (const auto& e : spec.entries) {
    auto z = complex_embed(e.gamma);
    CHECK(std::abs(z.imag()) < 1e-9);
    exact.push_back(z.real());
  }
  std::sort(exact.begin(), exact.end());
  REQUIRE(exact.size() == numeric.size());
  for (size_t i = 0; i < exact.size(); ++i) {
    CHECK(std::abs(exact[i] - numeric[i]) < 1e-8);
  }
}
