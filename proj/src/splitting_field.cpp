#include "cayley/splitting_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cayley {

namespace {

bool closed_under_multiplication(int64_t modulus, const std::vector<int64_t>& elems) {
  if (elems.empty()) return false;
  if (!std::binary_search(elems.begin(), elems.end(), int64_t{1})) return false;
  if (modulus <= 2) return elems == std::vector<int64_t>{1};  // canonical identity class
  for (int64_t a : elems) {
    for (int64_t b : elems) {
      if (!std::binary_search(elems.begin(), elems.end(), (a * b) % modulus)) return false;
    }
  }
  return true;
}

StabilizerSubgroup finish_subgroup(int64_t modulus, std::vector<int64_t> elems,
                                   const char* who) {
  StabilizerSubgroup s;
  s.modulus = modulus;
  s.elements = std::move(elems);
  s.is_subgroup = closed_under_multiplication(modulus, s.elements);
  if (!s.is_subgroup) {
    throw internal_error(std::string(who) + ": result is not a subgroup");
  }
  return s;
}

}  // namespace

Mod4Class mod4_class(int64_t k) {
  int64_t r = k % 4;
  if (r < 0) r += 4;
  if (r == 1) return Mod4Class::F;
  if (r == 3) return Mod4Class::MinusF;
  throw validation_error("invalid-unit", "mod-4 class is defined for odd k, got " +
                                             std::to_string(k));
}

StabilizerSubgroup combinatorial_stabilizer(const ConnectionSet& cs) {
  const AbelianGroup& G = cs.group;
  const int64_t m = spectrum_modulus(G);
  const ElementSet minusB = negate_set(G, cs.B);

  std::vector<int64_t> hits;
  for (int64_t h : units(m).elements) {
    if (scale_set(G, h, cs.A) != cs.A) continue;
    const ElementSet hB = scale_set(G, h, cs.B);
    if (mod4_class(h) == Mod4Class::F ? hB == cs.B : hB == minusB) {
      hits.push_back(h);
    }
  }
  return finish_subgroup(m, std::move(hits), "combinatorial_stabilizer");
}

StabilizerSubgroup galois_fixing_stabilizer(const Spectrum& spec) {
  std::vector<int64_t> hits;
  for (int64_t k : units(spec.modulus).elements) {
    bool fixes_all = true;
    for (const SpectrumEntry& e : spec.entries) {
      if (galois_apply(k, e.gamma) != e.gamma) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) hits.push_back(k);
  }
  return finish_subgroup(spec.modulus, std::move(hits), "galois_fixing_stabilizer");
}

SplittingFieldReport splitting_field_report(const ConnectionSet& cs) {
  SplittingFieldReport rep;
  rep.modulus = spectrum_modulus(cs.group);
  rep.stabilizer = combinatorial_stabilizer(cs);

  const UnitSet us = units(rep.modulus);
  const int64_t phi = static_cast<int64_t>(us.size());
  const int64_t hsize = static_cast<int64_t>(rep.stabilizer.size());
  if (phi % hsize != 0) {
    throw internal_error("splitting_field_report: |H| does not divide phi(4n)");
  }
  rep.degree = phi / hsize;

  // coset representatives: smallest unit of each coset, in ascending order
  std::set<int64_t> covered;
  for (int64_t u : us.elements) {
    if (covered.count(u)) continue;
    rep.coset_reps.push_back(u);
    for (int64_t h : rep.stabilizer.elements) {
      covered.insert((u * h) % rep.modulus);
    }
  }
  if (static_cast<int64_t>(rep.coset_reps.size()) != rep.degree) {
    throw internal_error("splitting_field_report: coset count mismatch");
  }

  // Generator search over Gauss periods theta_c = sum_{h in H} zeta^{ch}.
  // Some periods collapse (fewer conjugates than the degree); the first c
  // whose period has exactly `degree` distinct conjugates wins.  Finding
  // none is a legal outcome; the field is reported through H regardless.
  for (int64_t c = 1; c <= rep.modulus; ++c) {
    CycInt theta = cyc_zero(rep.modulus);
    for (int64_t h : rep.stabilizer.elements) {
      theta = cyc_add(theta, root_power(rep.modulus, c * h));
    }
    std::vector<CycInt> conjugates;
    for (int64_t r : rep.coset_reps) {
      conjugates.push_back(galois_apply(r, theta));
    }
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    if (static_cast<int64_t>(conjugates.size()) != rep.degree) continue;

    // minimal polynomial: product of (x - conjugate) over the orbit
    std::vector<CycInt> poly{cyc_integer(rep.modulus, 1)};
    for (const CycInt& conj : conjugates) {
      poly.push_back(poly.back());
      for (size_t j = poly.size() - 1; j-- > 0;) {
        CycInt t = cyc_mul(conj, poly[j]);
        poly[j] = (j > 0) ? cyc_sub(poly[j - 1], t) : cyc_neg(t);
      }
    }
    FieldGenerator gen;
    gen.theta = theta;
    for (const CycInt& v : poly) {
      if (!is_rational(v)) {
        throw internal_error("splitting_field_report: generator minimal polynomial not rational");
      }
      gen.min_poly.push_back(v.coeffs[0]);
    }
    for (int64_t h : rep.stabilizer.elements) {
      if (galois_apply(h, theta) != theta) {
        throw internal_error("splitting_field_report: period not fixed by its own stabilizer");
      }
    }
    rep.generator = std::move(gen);
    break;
  }
  return rep;
}

StabilizerSubgroup undirected_stabilizer(const ConnectionSet& cs) {
  if (!cs.B.empty()) {
    throw validation_error("not-undirected", "connection set has a nonempty directed part");
  }
  const int64_t n = cs.group.exponent;
  std::vector<int64_t> hits;
  for (int64_t h : units(n).elements) {
    if (scale_set(cs.group, h, cs.A) == cs.A) hits.push_back(h);
  }
  return finish_subgroup(n, std::move(hits), "undirected_stabilizer");
}

int64_t lift_unit(int64_t n, int64_t m, int64_t h_prime) {
  if (n < 1 || m < 1) {
    throw validation_error("invalid-unit", "moduli must be positive");
  }
  if (h_prime < 1 || std::gcd(h_prime, n) != 1) {
    throw validation_error("invalid-unit",
                           std::to_string(h_prime) + " is not a unit mod " + std::to_string(n));
  }
  for (int64_t i = 0; i < m; ++i) {
    const int64_t h = h_prime + i * n;
    if (std::gcd(h, m * n) == 1) return h;
  }
  throw internal_error("lift_unit: no coprime lift exists; arithmetic bug");
}

bool is_integral_exact(const ConnectionSet& cs) {
  return is_integral_exact(cs, full_spectrum(cs));
}

bool is_integral_exact(const ConnectionSet& cs, const Spectrum& spec) {
  if (cs.group != spec.group) {
    throw validation_error("modulus-mismatch", "spectrum belongs to a different group");
  }
  bool all_rational = true;
  for (const SpectrumEntry& e : spec.entries) {
    if (!is_rational(e.gamma)) {
      all_rational = false;
      break;
    }
  }
  // second route: rational spectrum == fixed by the whole Galois group
  const bool degree_one = galois_fixing_stabilizer(spec).size() == units(spec.modulus).size();
  if (all_rational != degree_one) {
    throw internal_error("is_integral_exact: rationality and degree-1 routes disagree");
  }
  return all_rational;
}

bool is_integral_characterized(const ConnectionSet& cs) {
  const AbelianGroup& G = cs.group;
  const int64_t n = G.exponent;

  // atom route
  bool atoms_ok = true;
  for (const GroupElement& a : cs.A) {
    if (!is_subset(atom(G, a), cs.A)) {
      atoms_ok = false;
      break;
    }
  }
  if (atoms_ok) {
    if (n % 4 != 0) {
      atoms_ok = cs.B.empty();
    } else {
      const ElementSet g4 = g4_subset(G);
      for (const GroupElement& b : cs.B) {
        if (!set_contains(g4, b) || !is_subset(atom_mod4(G, b), cs.B)) {
          atoms_ok = false;
          break;
        }
      }
    }
  }

  // raw multiplier route: kA = A for all units mod 4n, k1*B = B for k1 in F
  bool multipliers_ok = true;
  for (int64_t k : units(4 * n).elements) {
    if (scale_set(G, k, cs.A) != cs.A) {
      multipliers_ok = false;
      break;
    }
    if (mod4_class(k) == Mod4Class::F && scale_set(G, k, cs.B) != cs.B) {
      multipliers_ok = false;
      break;
    }
  }

  if (atoms_ok != multipliers_ok) {
    throw internal_error("is_integral_characterized: atom and multiplier routes disagree");
  }
  return atoms_ok;
}

std::vector<ConnectionSet> enumerate_integral_sets(const AbelianGroup& G, int64_t cap) {
  // nonzero atoms, ordered by smallest member
  std::vector<ElementSet> atoms;
  {
    ElementSet assigned;
    for (const GroupElement& g : elements(G)) {
      if (is_zero(g) || set_contains(assigned, g)) continue;
      ElementSet a = atom(G, g);
      assigned = set_union(assigned, a);
      atoms.push_back(std::move(a));
    }
  }

  // mod-4 orbit classes, paired with their negatives
  std::vector<ElementSet> classes;
  {
    ElementSet assigned;
    for (const GroupElement& g : g4_subset(G)) {
      if (set_contains(assigned, g)) continue;
      ElementSet c = atom_mod4(G, g);
      assigned = set_union(assigned, c);
      classes.push_back(std::move(c));
    }
  }

  if (static_cast<int64_t>(atoms.size() + classes.size()) > cap) {
    throw validation_error("enumeration-too-large",
                           std::to_string(atoms.size()) + " atoms + " +
                               std::to_string(classes.size()) +
                               " mod-4 classes exceed the cap of " + std::to_string(cap));
  }

  std::vector<std::pair<size_t, size_t>> class_pairs;  // (class, its negative)
  {
    std::vector<bool> used(classes.size(), false);
    for (size_t i = 0; i < classes.size(); ++i) {
      if (used[i]) continue;
      const ElementSet neg_i = negate_set(G, classes[i]);
      size_t j = i;
      while (j < classes.size() && classes[j] != neg_i) ++j;
      if (j == i || j >= classes.size()) {
        throw internal_error("enumerate_integral_sets: mod-4 class negation pairing failed");
      }
      used[i] = used[j] = true;
      class_pairs.emplace_back(i, j);
    }
  }

  // B candidates: per pair pick none, the class, or its negative
  std::vector<ElementSet> b_options{{}};
  for (const auto& [i, j] : class_pairs) {
    std::vector<ElementSet> next;
    next.reserve(b_options.size() * 3);
    for (const ElementSet& base : b_options) {
      next.push_back(base);
      next.push_back(set_union(base, classes[i]));
      next.push_back(set_union(base, classes[j]));
    }
    b_options = std::move(next);
  }

  std::vector<ConnectionSet> out;
  const size_t na = atoms.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << na); ++mask) {
    ElementSet A;
    for (size_t i = 0; i < na; ++i) {
      if (mask & (uint64_t{1} << i)) A = set_union(A, atoms[i]);
    }
    for (const ElementSet& B : b_options) {
      if (!set_intersection(A, B).empty()) continue;
      ConnectionSet cs = make_connection_set(G, A, B);
      if (!is_integral_exact(cs)) {
        throw internal_error("enumerate_integral_sets: emitted a non-integral set");
      }
      out.push_back(std::move(cs));
    }
  }
  return out;
}

}  // namespace cayley
