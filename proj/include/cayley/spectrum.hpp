#pragma once

#include <cstdint>
#include <vector>

#include "cayley/cyclotomic.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Connection set of a mixed Cayley graph: A holds the undirected part
// (A = -A), B the directed part (B and -B disjoint).  Always loopless.
struct ConnectionSet {
  AbelianGroup group;
  ElementSet A;
  ElementSet B;

  bool operator==(const ConnectionSet&) const = default;
};

// One entry of the Hermitian adjacency matrix: 0, 1, i or -i.
struct HermitianEntry {
  int re = 0;
  int im = 0;

  bool operator==(const HermitianEntry&) const = default;
};

struct SpectrumEntry {
  GroupElement g;
  CycInt lambda;  // character sum over A
  CycInt mu;      // i * (chi_g(B) - chi_g(-B))
  CycInt gamma;   // lambda + mu
};

// Exact Hermitian spectrum, indexed by group element in lexicographic
// order; every value lives in Z[zeta_{4n}] with n = exp(G).
struct Spectrum {
  AbelianGroup group;
  int64_t modulus = 4;  // 4 * exp(G)
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry& at(const GroupElement& g) const;
};

// Modulus of the cyclotomic ring housing the spectrum: 4 * exp(G).
int64_t spectrum_modulus(const AbelianGroup& G);

// Validates the connection-set axioms; error kinds: "contains-zero",
// "A-not-symmetric", "B-meets-minus-B", "A-B-overlap".
ConnectionSet make_connection_set(const AbelianGroup& G, std::vector<GroupElement> A,
                                  std::vector<GroupElement> B);

// Splits S into its symmetric part A = S ∩ (-S) and the antisymmetric
// remainder B = S \ A; the partition is unique.
ConnectionSet split_connection_set(const AbelianGroup& G, std::vector<GroupElement> S);

HermitianEntry hermitian_entry(const ConnectionSet& cs, const GroupElement& u,
                               const GroupElement& v);

CycInt lambda_part(const ConnectionSet& cs, const GroupElement& g);
CycInt mu_part(const ConnectionSet& cs, const GroupElement& g);
CycInt eigenvalue(const ConnectionSet& cs, const GroupElement& g);

Spectrum full_spectrum(const ConnectionSet& cs);

// Coefficients of prod_g (x - gamma_g), ascending degree, monic.  Expands
// with exact cyclotomic arithmetic and aborts if any coefficient fails to
// collapse to a rational integer.
std::vector<BigInt> char_poly(const ConnectionSet& cs);
std::vector<BigInt> char_poly(const Spectrum& spec);

// Independent numeric eigensolver: realifies H to the symmetric matrix
// [[Re H, -Im H], [Im H, Re H]] and runs cyclic Jacobi sweeps until the
// off-diagonal Frobenius mass drops below 1e-12 (at most 100 sweeps).
// Returns the |G| eigenvalues sorted ascending.
std::vector<double> numeric_spectrum(const ConnectionSet& cs, double tol);

}  // namespace cayley
