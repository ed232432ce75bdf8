#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <compare>
#include <cstdint>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

// The m-th cyclotomic polynomial: integer coefficients, ascending degree,
// monic, degree phi(m).
struct CycPoly {
  int64_t modulus = 1;
  std::vector<BigInt> coeffs;

  bool operator==(const CycPoly&) const = default;
  size_t degree() const { return coeffs.size() - 1; }
};

// Exact element of Z[zeta_m]: coefficient vector of length phi(m) in the
// power basis 1, zeta, ..., zeta^{phi(m)-1}, i.e. a residue mod Phi_m.
// The basis is a Q-basis, so two values are equal iff their vectors are.
struct CycInt {
  int64_t modulus = 1;
  std::vector<BigInt> coeffs;

  bool operator==(const CycInt&) const = default;
  // Lexicographic on (modulus, coeffs); used for deterministic dedup only.
  bool operator<(const CycInt& o) const {
    if (modulus != o.modulus) return modulus < o.modulus;
    return coeffs < o.coeffs;
  }
  bool is_zero() const;
};

CycPoly cyclotomic_polynomial(int64_t m);

// Zero and integer constants of Z[zeta_m].
CycInt cyc_zero(int64_t m);
CycInt cyc_integer(int64_t m, BigInt value);

// zeta_m^j, reduced mod Phi_m.  j may be any integer.
CycInt root_power(int64_t m, int64_t j);

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);

// The ring automorphism zeta_m -> zeta_m^k; requires gcd(k, m) = 1.
CycInt galois_apply(int64_t k, const CycInt& a);

// A value is rational iff every non-constant coordinate vanishes; a
// rational algebraic integer is a rational integer, so the constant
// coordinate is the value itself.
bool is_rational(const CycInt& a);
BigInt as_integer(const CycInt& a);

// Numeric embedding sum_j coeffs[j] * exp(2*pi*i*j/m).  Accumulated in
// long double; the error is bounded by a few ulps of sum |coeffs[j]|.
std::complex<double> complex_embed(const CycInt& a);

// "2*z^3 - z" style rendering with z standing for zeta_m.
std::string to_string(const CycInt& a);

// Integer polynomial rendering in the given variable, highest power first.
std::string poly_to_string(const std::vector<BigInt>& coeffs, const char* var);

}  // namespace cayley
