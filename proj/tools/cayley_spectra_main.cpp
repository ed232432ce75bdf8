#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cayley/json_io.hpp"
#include "cayley/parse.hpp"
#include "cayley/splitting_field.hpp"
#include "cayley/verify.hpp"

namespace {

using namespace cayley;

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << std::fixed << x;
  return out.str();
}

struct SetArgs {
  std::string group_spec;
  std::optional<std::string> a_str, b_str, s_str;

  ConnectionSet resolve() const {
    const AbelianGroup G = parse_group_spec(group_spec);
    return parse_set_spec(G, a_str, b_str, s_str);
  }
};

void add_set_options(CLI::App* sub, SetArgs& args) {
  sub->add_option("--group", args.group_spec, "group spec, e.g. Z4xZ3 or 4,3")->required();
  sub->add_option("--A", args.a_str, "undirected part, e.g. (1,0),(3,0)");
  sub->add_option("--B", args.b_str, "directed part");
  sub->add_option("--S", args.s_str, "full connection set; split into A and B automatically");
}

int cmd_spectrum(const SetArgs& args, bool json, double tol) {
  const ConnectionSet cs = args.resolve();
  const Spectrum spec = full_spectrum(cs);

  // numeric cross-check of the exact values
  std::vector<double> exact;
  for (const SpectrumEntry& e : spec.entries) {
    const auto z = complex_embed(e.gamma);
    if (std::abs(z.imag()) >= 1e-9) {
      std::cerr << "verification failure: eigenvalue has nonreal embedding\n";
      return 3;
    }
    exact.push_back(z.real());
  }
  std::vector<double> sorted_exact = exact;
  std::sort(sorted_exact.begin(), sorted_exact.end());
  const std::vector<double> numeric = numeric_spectrum(cs, tol);
  for (size_t i = 0; i < sorted_exact.size(); ++i) {
    if (std::abs(sorted_exact[i] - numeric[i]) >= tol) {
      std::cerr << "verification failure: exact and numeric spectra differ at index " << i << "\n";
      return 3;
    }
  }

  if (json) {
    std::cout << to_json(spec).dump() << "\n";
    return 0;
  }
  std::cout << "group " << format_group_spec(cs.group) << ", A={"
            << format_element_list(cs.group, cs.A) << "}, B={"
            << format_element_list(cs.group, cs.B) << "}\n";
  std::cout << "eigenvalues in Z[zeta_" << spec.modulus << "] (z = zeta_" << spec.modulus
            << "):\n";
  for (size_t i = 0; i < spec.entries.size(); ++i) {
    const SpectrumEntry& e = spec.entries[i];
    std::cout << "  g=" << format_element_list(cs.group, {e.g}) << "  gamma = "
              << to_string(e.gamma) << "  ~ " << fmt_double(exact[i]) << "\n";
  }
  return 0;
}

int cmd_charpoly(const SetArgs& args, bool json) {
  const ConnectionSet cs = args.resolve();
  const std::vector<BigInt> poly = char_poly(cs);
  if (json) {
    Json arr = Json::array();
    for (const BigInt& c : poly) arr.push_back(bigint_to_json(c));
    std::cout << Json{{"group", to_json(cs.group)}, {"coeffs", arr}}.dump() << "\n";
    return 0;
  }
  std::cout << "p_H = " << poly_to_string(poly, "x") << "\n";
  std::cout << "coefficients (ascending): [";
  for (size_t i = 0; i < poly.size(); ++i) std::cout << (i ? "," : "") << poly[i].str();
  std::cout << "]\n";
  return 0;
}

int cmd_degree(const SetArgs& args, bool json) {
  const ConnectionSet cs = args.resolve();
  const SplittingFieldReport rep = splitting_field_report(cs);
  if (json) {
    std::cout << Json{{"group", to_json(cs.group)},
                      {"modulus", rep.modulus},
                      {"degree", rep.degree},
                      {"stabilizer_size", rep.stabilizer.size()},
                      {"phi", euler_phi(rep.modulus)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "algebraic degree = " << rep.degree << "  (phi(" << rep.modulus << ") = "
            << euler_phi(rep.modulus) << ", |H| = " << rep.stabilizer.size() << ")\n";
  return 0;
}

int cmd_splitting_field(const SetArgs& args, bool json) {
  const ConnectionSet cs = args.resolve();
  const SplittingFieldReport rep = splitting_field_report(cs);
  if (json) {
    std::cout << to_json(rep).dump() << "\n";
    return 0;
  }
  std::cout << "splitting field inside Q(zeta_" << rep.modulus << ")\n";
  std::cout << "  stabilizer H (|H|=" << rep.stabilizer.size() << "): {";
  for (size_t i = 0; i < rep.stabilizer.elements.size(); ++i) {
    std::cout << (i ? "," : "") << rep.stabilizer.elements[i];
  }
  std::cout << "}\n  degree = " << rep.degree << "\n  coset representatives: {";
  for (size_t i = 0; i < rep.coset_reps.size(); ++i) {
    std::cout << (i ? "," : "") << rep.coset_reps[i];
  }
  std::cout << "}\n";
  if (rep.generator) {
    std::cout << "  generator theta = " << to_string(rep.generator->theta) << "  ~ "
              << fmt_double(complex_embed(rep.generator->theta).real()) << "\n";
    std::cout << "  minimal polynomial: " << poly_to_string(rep.generator->min_poly, "x") << "\n";
  } else {
    std::cout << "  generator: none found among Gauss periods\n";
  }
  return 0;
}

int cmd_integral(const SetArgs& args, bool json) {
  const ConnectionSet cs = args.resolve();
  const bool exact = is_integral_exact(cs);
  const bool characterized = is_integral_characterized(cs);
  const int64_t degree = splitting_field_report(cs).degree;
  if (exact != characterized) {
    std::cerr << "verification failure: exact and characterized integrality disagree\n";
    return 3;
  }
  if (json) {
    std::cout << Json{{"group", to_json(cs.group)},
                      {"integral", exact},
                      {"exact", exact},
                      {"characterized", characterized},
                      {"degree", degree}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "integral: " << (exact ? "yes" : "no") << "  (degree " << degree << ")\n";
  return 0;
}

int cmd_enumerate(const std::string& group_spec, bool json) {
  const AbelianGroup G = parse_group_spec(group_spec);
  const std::vector<ConnectionSet> sets = enumerate_integral_sets(G);
  if (json) {
    Json arr = Json::array();
    for (const ConnectionSet& cs : sets) arr.push_back(to_json(cs));
    std::cout << arr.dump() << "\n";
    return 0;
  }
  std::cout << sets.size() << " integral connection sets on " << format_group_spec(G) << "\n";
  for (const ConnectionSet& cs : sets) {
    std::cout << "  A={" << format_element_list(G, cs.A) << "} B={"
              << format_element_list(G, cs.B) << "}\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts, bool json) {
  const VerificationSummary s = run_verify(opts);
  if (json) {
    Json failures = Json::array();
    for (const VerifyFailure& f : s.failures) {
      failures.push_back(Json{{"check", f.check}, {"where", f.where}, {"detail", f.detail}});
    }
    std::cout << Json{{"groups", s.groups},
                      {"connection_sets", s.connection_sets},
                      {"checks", s.checks},
                      {"failures", failures}}
                     .dump()
              << "\n";
  } else {
    std::cout << "groups: " << s.groups << "\nconnection sets: " << s.connection_sets
              << "\nchecks: " << s.checks << "\nfailures: " << s.failures.size() << "\n";
    size_t shown = 0;
    for (const VerifyFailure& f : s.failures) {
      if (++shown > 10) {
        std::cout << "  ... " << s.failures.size() - 10 << " more\n";
        break;
      }
      std::cout << "  FAIL " << f.check << " at " << f.where << ": " << f.detail << "\n";
    }
  }
  return s.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hermitian spectra, splitting fields and algebraic degrees of mixed "
               "Cayley graphs over finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand

  SetArgs spectrum_args, charpoly_args, degree_args, field_args, integral_args;
  std::string enum_group;
  bool json = false;
  double tol = 1e-8;
  VerifyOptions vopts;

  app.add_flag("--json", json, "emit machine-readable JSON");

  auto* sub_spectrum = app.add_subcommand("spectrum", "exact eigenvalues with numeric cross-check");
  add_set_options(sub_spectrum, spectrum_args);
  sub_spectrum->add_option("--tol", tol, "numeric cross-check tolerance");

  auto* sub_charpoly = app.add_subcommand("charpoly", "Hermitian characteristic polynomial");
  add_set_options(sub_charpoly, charpoly_args);

  auto* sub_degree = app.add_subcommand("degree", "algebraic degree phi(4n)/|H|");
  add_set_options(sub_degree, degree_args);

  auto* sub_field = app.add_subcommand("splitting-field", "stabilizer, degree and generator");
  add_set_options(sub_field, field_args);

  auto* sub_integral = app.add_subcommand("integral", "integrality by both routes");
  add_set_options(sub_integral, integral_args);

  auto* sub_enum = app.add_subcommand("enumerate-integral", "all integral connection sets on G");
  sub_enum->add_option("--group", enum_group, "group spec")->required();

  auto* sub_verify = app.add_subcommand("verify", "exhaustive invariant sweep");
  sub_verify->add_option("--max-order", vopts.max_order, "largest group order to sweep");
  sub_verify->add_option("--seed", vopts.seed, "seed for numeric spot checks");
  sub_verify->add_option("--jobs", vopts.jobs, "worker threads");
  sub_verify->add_option("--tol", vopts.tol, "numeric agreement tolerance");
  sub_verify->add_flag("--self-test-negative", vopts.self_test_negative,
                       "inject one stabilizer fault; the sweep must report it");

  try {
    app.parse(argc, argv);
    if (sub_spectrum->parsed()) return cmd_spectrum(spectrum_args, json, tol);
    if (sub_charpoly->parsed()) return cmd_charpoly(charpoly_args, json);
    if (sub_degree->parsed()) return cmd_degree(degree_args, json);
    if (sub_field->parsed()) return cmd_splitting_field(field_args, json);
    if (sub_integral->parsed()) return cmd_integral(integral_args, json);
    if (sub_enum->parsed()) return cmd_enumerate(enum_group, json);
    if (sub_verify->parsed()) return cmd_verify(vopts, json);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
