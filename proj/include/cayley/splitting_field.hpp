#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/cyclotomic.hpp"
#include "cayley/group.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

// Units mod 4n split by residue class mod 4.
enum class Mod4Class { F, MinusF };

// F when k = 1 (mod 4), MinusF when k = 3 (mod 4); k must be odd.
Mod4Class mod4_class(int64_t k);

// A subgroup of Z_m^* given as a sorted element set; describes the
// splitting field as the fixed field of the matching automorphisms.
struct StabilizerSubgroup {
  int64_t modulus = 4;
  std::vector<int64_t> elements;
  bool is_subgroup = false;

  bool operator==(const StabilizerSubgroup& o) const {
    return modulus == o.modulus && elements == o.elements;
  }
  size_t size() const { return elements.size(); }
};

struct FieldGenerator {
  CycInt theta;                 // a Gauss period generating the fixed field
  std::vector<BigInt> min_poly; // its minimal polynomial, ascending, monic
};

struct SplittingFieldReport {
  int64_t modulus = 4;                    // 4n
  StabilizerSubgroup stabilizer;          // the set stabilizer H
  int64_t degree = 1;                     // phi(4n) / |H|
  std::vector<int64_t> coset_reps;        // smallest unit per coset, ascending
  std::optional<FieldGenerator> generator;
};

// { h in Z_{4n}^* : hA = A, and hB = B for h in F, hB = -B for h in -F }.
StabilizerSubgroup combinatorial_stabilizer(const ConnectionSet& cs);

// Independent oracle: units whose cyclotomic automorphism fixes every
// eigenvalue elementwise.  Computed purely from the exact spectrum, with
// no reference to A or B.
StabilizerSubgroup galois_fixing_stabilizer(const Spectrum& spec);

SplittingFieldReport splitting_field_report(const ConnectionSet& cs);

// { h' in Z_n^* : h'S = S } for an undirected connection set (B empty).
StabilizerSubgroup undirected_stabilizer(const ConnectionSet& cs);

// Smallest h in {h', h'+n, ..., h'+(m-1)n} coprime to mn; exists for
// every unit h' mod n.
int64_t lift_unit(int64_t n, int64_t m, int64_t h_prime);

// True iff every eigenvalue is a rational integer.  Cross-checked against
// the degree-1 route through the Galois-fixing stabilizer.
bool is_integral_exact(const ConnectionSet& cs);
bool is_integral_exact(const ConnectionSet& cs, const Spectrum& spec);

// Atom/orbit characterization of integrality; the raw multiplier form is
// evaluated as a second route and both must agree.
bool is_integral_characterized(const ConnectionSet& cs);

// All integral connection sets on G: A any union of nonzero atoms, B any
// union of mod-4 orbit classes with B ∩ (-B) = ∅ and A ∩ B = ∅.  The
// guard rejects groups with more than `cap` atoms plus classes.
std::vector<ConnectionSet> enumerate_integral_sets(const AbelianGroup& G, int64_t cap = 20);

}  // namespace cayley
