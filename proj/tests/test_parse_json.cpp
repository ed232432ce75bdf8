#include "cayley/json_io.hpp"
#include "cayley/parse.hpp"
#include "doctest.h"

using namespace cayley;

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("Z4xZ3").moduli == std::vector<int64_t>{4, 3});
  CHECK(parse_group_spec("z2Xz2").moduli == std::vector<int64_t>{2, 2});
  CHECK(parse_group_spec("5").moduli == std::vector<int64_t>{5});
  CHECK(parse_group_spec("4,3").moduli == std::vector<int64_t>{4, 3});
  CHECK(parse_group_spec(" Z12 ").moduli == std::vector<int64_t>{12});

  CHECK_THROWS_AS(parse_group_spec("Z0"), parse_error);
  CHECK_THROWS_AS(parse_group_spec(""), parse_error);
  CHECK_THROWS_AS(parse_group_spec("Z4x"), parse_error);
  CHECK_THROWS_AS(parse_group_spec("4;3"), parse_error);
}

TEST_CASE("group spec round-trips") {
  for (const auto& spec : {"Z4xZ3", "Z5", "Z2xZ2xZ3"}) {
    auto G = parse_group_spec(spec);
    CHECK(format_group_spec(G) == spec);
    CHECK(parse_group_spec(format_group_spec(G)).moduli == G.moduli);
  }
}

TEST_CASE("element list parsing") {
  auto G = parse_group_spec("Z4xZ3");
  auto xs = parse_element_list(G, "(1,0),(3,0)");
  REQUIRE(xs.size() == 2);
  CHECK(xs[0] == element(G, {1, 0}));
  CHECK(xs[1] == element(G, {3, 0}));

  auto Z4 = parse_group_spec("Z4");
  auto bare = parse_element_list(Z4, "1,3");
  REQUIRE(bare.size() == 2);
  CHECK(bare[0] == element(Z4, {1}));

  CHECK(parse_element_list(Z4, "").empty());
  CHECK(parse_element_list(Z4, "(2)") == std::vector<GroupElement>{element(Z4, {2})});

  CHECK_THROWS_AS(parse_element_list(G, "1,2"), parse_error);       // bare needs rank 1
  CHECK_THROWS_AS(parse_element_list(G, "(1,2,3)"), parse_error);   // wrong arity
  CHECK_THROWS_AS(parse_element_list(Z4, "1,"), parse_error);       // trailing comma
}

TEST_CASE("element list round-trips") {
  auto G = parse_group_spec("Z4xZ3");
  auto set = make_element_set({element(G, {1, 0}), element(G, {3, 0}), element(G, {0, 2})});
  CHECK(parse_element_list(G, format_element_list(G, set)) == set);

  auto Z4 = parse_group_spec("Z4");
  auto s4 = make_element_set({element(Z4, {1}), element(Z4, {3})});
  CHECK(format_element_list(Z4, s4) == "1,3");
  CHECK(make_element_set(parse_element_list(Z4, "1,3")) == s4);
}

TEST_CASE("parse_set_spec") {
  auto Z4 = parse_group_spec("Z4");
  auto cs = parse_set_spec(Z4, std::string("2"), std::string("1"), std::nullopt);
  CHECK(cs.A == ElementSet{element(Z4, {2})});
  CHECK(cs.B == ElementSet{element(Z4, {1})});

  auto split = parse_set_spec(Z4, std::nullopt, std::nullopt, std::string("1,2"));
  CHECK(split.A == ElementSet{element(Z4, {2})});
  CHECK(split.B == ElementSet{element(Z4, {1})});

  CHECK_THROWS_AS(parse_set_spec(Z4, std::string("2"), std::nullopt, std::string("1")),
                  parse_error);
  CHECK_THROWS_AS(parse_set_spec(Z4, std::nullopt, std::nullopt, std::nullopt), parse_error);
  CHECK_THROWS_AS(parse_set_spec(Z4, std::nullopt, std::string("1,3"), std::nullopt),
                  validation_error);
}

TEST_CASE("bigint JSON uses strings beyond 53 bits") {
  BigInt small = 123456789;
  CHECK(bigint_to_json(small).is_number_integer());
  CHECK(bigint_from_json(bigint_to_json(small)) == small);

  BigInt big = BigInt("123456789012345678901234567890");
  auto j = bigint_to_json(big);
  CHECK(j.is_string());
  CHECK(bigint_from_json(j) == big);

  BigInt negative_big = -BigInt(1) << 60;
  CHECK(bigint_to_json(negative_big).is_string());
  CHECK(bigint_from_json(bigint_to_json(negative_big)) == negative_big);
}

TEST_CASE("CycInt JSON round-trip") {
  auto v = cyc_add(root_power(20, 3), cyc_integer(20, -7));
  auto j = to_json(v);
  CHECK(j.at("modulus") == 20);
  CHECK(cycint_from_json(j) == v);

  // huge coefficients survive exactly
  auto w = cyc_zero(5);
  w.coeffs[2] = BigInt("99999999999999999999999999");
  CHECK(cycint_from_json(to_json(w)) == w);
}

TEST_CASE("connection set JSON round-trip matches the documented shape") {
  auto G = parse_group_spec("Z4xZ3");
  auto cs = make_connection_set(
      G, {element(G, {1, 0}), element(G, {3, 0})}, {element(G, {0, 1})});
  auto j = to_json(cs);
  CHECK(j.at("group") == Json({4, 3}));
  CHECK(j.at("A") == Json({{1, 0}, {3, 0}}));
  CHECK(j.at("B") == Json({{0, 1}}));
  CHECK(connection_set_from_json(j) == cs);
}

TEST_CASE("splitting field report JSON round-trip") {
  auto Z5 = parse_group_spec("Z5");
  auto cs = make_connection_set(Z5, {element(Z5, {1}), element(Z5, {4})}, {});
  auto rep = splitting_field_report(cs);
  auto j = to_json(rep);
  auto back = splitting_field_report_from_json(j);
  CHECK(back.modulus == rep.modulus);
  CHECK(back.stabilizer.elements == rep.stabilizer.elements);
  CHECK(back.degree == rep.degree);
  CHECK(back.coset_reps == rep.coset_reps);
  REQUIRE(back.generator.has_value());
  CHECK(back.generator->theta == rep.generator->theta);
  CHECK(back.generator->min_poly == rep.generator->min_poly);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("spectrum JSON carries exact values and approximations") {
  auto Z4 = parse_group_spec("Z4");
  auto cs = make_connection_set(Z4, {}, {element(Z4, {1})});
  auto j = to_json(full_spectrum(cs));
  REQUIRE(j.at("entries").size() == 4);
  CHECK(j.at("modulus") == 16);
  CHECK(cycint_from_json(j.at("entries")[1].at("gamma")) == cyc_integer(16, -2));
  CHECK(j.at("entries")[1].at("approx").get<double>() == doctest::Approx(-2.0));
}
