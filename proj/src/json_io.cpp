#include "cayley/json_io.hpp"

namespace cayley {

namespace {

constexpr int64_t kJsonSafeMax = (int64_t{1} << 53) - 1;

std::vector<GroupElement> elements_from_json(const Json& j) {
  std::vector<GroupElement> out;
  for (const auto& e : j) {
    out.push_back(GroupElement{e.get<std::vector<int64_t>>()});
  }
  return out;
}

Json bigints_to_json(const std::vector<BigInt>& vs) {
  Json arr = Json::array();
  for (const BigInt& v : vs) arr.push_back(bigint_to_json(v));
  return arr;
}

std::vector<BigInt> bigints_from_json(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(bigint_from_json(e));
  return out;
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (v <= kJsonSafeMax && v >= -kJsonSafeMax) {
    return v.convert_to<int64_t>();
  }
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw parse_error("expected an integer or decimal string, got " + j.dump());
}

Json to_json(const CycInt& v) {
  return Json{{"modulus", v.modulus}, {"coeffs", bigints_to_json(v.coeffs)}};
}

CycInt cycint_from_json(const Json& j) {
  CycInt v = cyc_zero(j.at("modulus").get<int64_t>());
  auto cs = bigints_from_json(j.at("coeffs"));
  if (cs.size() != v.coeffs.size()) {
    throw parse_error("coefficient vector has length " + std::to_string(cs.size()) +
                      ", expected phi(m) = " + std::to_string(v.coeffs.size()));
  }
  v.coeffs = std::move(cs);
  return v;
}

Json to_json(const AbelianGroup& G) { return Json(G.moduli); }

Json element_to_json(const GroupElement& x) { return Json(x.coords); }

Json element_set_to_json(const ElementSet& s) {
  Json arr = Json::array();
  for (const GroupElement& x : s) arr.push_back(element_to_json(x));
  return arr;
}

Json to_json(const ConnectionSet& cs) {
  return Json{{"group", to_json(cs.group)},
              {"A", element_set_to_json(cs.A)},
              {"B", element_set_to_json(cs.B)}};
}

ConnectionSet connection_set_from_json(const Json& j) {
  auto G = make_group(j.at("group").get<std::vector<int64_t>>());
  return make_connection_set(G, elements_from_json(j.at("A")), elements_from_json(j.at("B")));
}

Json to_json(const Spectrum& spec) {
  Json entries = Json::array();
  for (const SpectrumEntry& e : spec.entries) {
    entries.push_back(Json{{"g", element_to_json(e.g)},
                           {"gamma", to_json(e.gamma)},
                           {"approx", complex_embed(e.gamma).real()}});
  }
  return Json{{"group", to_json(spec.group)}, {"modulus", spec.modulus}, {"entries", entries}};
}

Json to_json(const SplittingFieldReport& rep) {
  Json j{{"modulus", rep.modulus},
         {"stabilizer", rep.stabilizer.elements},
         {"degree", rep.degree},
         {"coset_reps", rep.coset_reps}};
  if (rep.generator) {
    j["generator"] = Json{{"coeffs", bigints_to_json(rep.generator->theta.coeffs)},
                          {"min_poly", bigints_to_json(rep.generator->min_poly)}};
  } else {
    j["generator"] = nullptr;
  }
  return j;
}

SplittingFieldReport splitting_field_report_from_json(const Json& j) {
  SplittingFieldReport rep;
  rep.modulus = j.at("modulus").get<int64_t>();
  rep.stabilizer.modulus = rep.modulus;
  rep.stabilizer.elements = j.at("stabilizer").get<std::vector<int64_t>>();
  rep.stabilizer.is_subgroup = true;
  rep.degree = j.at("degree").get<int64_t>();
  rep.coset_reps = j.at("coset_reps").get<std::vector<int64_t>>();
  if (!j.at("generator").is_null()) {
    FieldGenerator gen;
    gen.theta = cyc_zero(rep.modulus);
    auto cs = bigints_from_json(j.at("generator").at("coeffs"));
    if (cs.size() != gen.theta.coeffs.size()) {
      throw parse_error("generator coefficient vector has the wrong length");
    }
    gen.theta.coeffs = std::move(cs);
    gen.min_poly = bigints_from_json(j.at("generator").at("min_poly"));
    rep.generator = std::move(gen);
  }
  return rep;
}

}  // namespace cayley
