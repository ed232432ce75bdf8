#include "cayley/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "cayley/group.hpp"

namespace cayley {

namespace {

using Poly = std::vector<BigInt>;  // ascending degree, no trailing zeros implied

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b; throws internal_error unless the division is exact.
Poly exact_div(Poly a, const Poly& b) {
  if (b.empty() || b.back() != 1) {
    throw internal_error("exact_div: divisor must be monic");
  }
  const size_t db = b.size() - 1;
  trim(a);
  if (a.size() < b.size()) {
    if (!a.empty()) throw internal_error("exact_div: inexact division");
    return {};
  }
  Poly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) {
      a[i - db + j] -= c * b[j];
    }
  }
  for (const BigInt& r : a) {
    if (r != 0) throw internal_error("exact_div: inexact division");
  }
  return q;
}

// Phi_m for all m, memoized: Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
const Poly& phi_poly(int64_t m) {
  static std::mutex mu;
  static std::map<int64_t, Poly> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Iterative in increasing divisor order so recursion depth stays 0.
  for (int64_t d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    Poly num(static_cast<size_t>(d) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (int64_t e = 1; e < d; ++e) {
      if (d % e == 0) num = exact_div(std::move(num), cache.at(e));
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

// Per-modulus reduction table: x^e mod Phi_m for every e in [0, m).
struct RingTable {
  int64_t m;
  size_t phi;                   // degree of Phi_m
  Poly phi_coeffs;              // Phi_m, length phi+1, monic
  std::vector<Poly> powers;     // m rows, each of length phi
};

const RingTable& ring_table(int64_t m) {
  if (m <= 0) {
    throw validation_error("invalid-group", "cyclotomic modulus must be >= 1");
  }
  // dense power tables are m*phi(m) big integers; keep this a desk tool
  if (m > 4096) {
    throw validation_error("modulus-too-large",
                           "cyclotomic modulus " + std::to_string(m) + " exceeds 4096");
  }
  static std::mutex mu;
  static std::map<int64_t, std::unique_ptr<RingTable>> cache;
  // Tables are immutable once built; cache the last hit per thread since
  // callers typically loop over one modulus.
  thread_local const RingTable* last = nullptr;
  if (last && last->m == m) return *last;

  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    auto t = std::make_unique<RingTable>();
    t->m = m;
    t->phi_coeffs = phi_poly(m);
    t->phi = t->phi_coeffs.size() - 1;
    t->powers.resize(static_cast<size_t>(m));
    Poly cur(t->phi, 0);
    cur[0] = 1;
    for (int64_t e = 0; e < m; ++e) {
      t->powers[static_cast<size_t>(e)] = cur;
      // multiply by x, then fold x^phi = -sum_{j<phi} Phi[j] x^j
      BigInt carry = t->phi == 0 ? BigInt(0) : cur[t->phi - 1];
      for (size_t j = t->phi; j-- > 1;) cur[j] = cur[j - 1];
      if (!cur.empty()) cur[0] = 0;
      if (carry != 0) {
        for (size_t j = 0; j < t->phi; ++j) cur[j] -= carry * t->phi_coeffs[j];
      }
    }
    it = cache.emplace(m, std::move(t)).first;
  }
  last = it->second.get();
  return *last;
}

void check_same_modulus(const CycInt& a, const CycInt& b) {
  if (a.modulus != b.modulus) {
    throw validation_error("modulus-mismatch",
                           "operands live in Z[zeta_" + std::to_string(a.modulus) +
                               "] and Z[zeta_" + std::to_string(b.modulus) + "]");
  }
}

int64_t mod_reduce(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool CycInt::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
}

CycPoly cyclotomic_polynomial(int64_t m) {
  if (m <= 0) {
    throw validation_error("invalid-group", "cyclotomic index must be >= 1");
  }
  CycPoly p;
  p.modulus = m;
  p.coeffs = phi_poly(m);  // cache entries are write-once, copy is safe
  return p;
}

CycInt cyc_zero(int64_t m) {
  const RingTable& t = ring_table(m);
  return CycInt{m, std::vector<BigInt>(t.phi, 0)};
}

CycInt cyc_integer(int64_t m, BigInt value) {
  CycInt out = cyc_zero(m);
  out.coeffs[0] = std::move(value);
  return out;
}

CycInt root_power(int64_t m, int64_t j) {
  const RingTable& t = ring_table(m);
  return CycInt{m, t.powers[static_cast<size_t>(mod_reduce(j, m))]};
}

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  check_same_modulus(a, b);
  CycInt out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  check_same_modulus(a, b);
  CycInt out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

CycInt cyc_neg(const CycInt& a) {
  CycInt out = a;
  for (BigInt& c : out.coeffs) c = -c;
  return out;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  check_same_modulus(a, b);
  const RingTable& t = ring_table(a.modulus);
  const size_t phi = t.phi;
  std::vector<BigInt> conv(phi == 0 ? 1 : 2 * phi - 1, 0);
  for (size_t i = 0; i < phi; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (b.coeffs[j] == 0) continue;
      conv[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  // long division by the monic Phi_m
  for (size_t e = conv.size(); e-- > phi;) {
    BigInt c = conv[e];
    if (c == 0) continue;
    conv[e] = 0;
    for (size_t j = 0; j < phi; ++j) {
      conv[e - phi + j] -= c * t.phi_coeffs[j];
    }
  }
  conv.resize(phi);
  return CycInt{a.modulus, std::move(conv)};
}

CycInt galois_apply(int64_t k, const CycInt& a) {
  const int64_t m = a.modulus;
  const int64_t kr = mod_reduce(k, m);
  if (std::gcd(kr, m) != 1) {
    throw validation_error("invalid-automorphism",
                           std::to_string(k) + " is not a unit mod " + std::to_string(m));
  }
  const RingTable& t = ring_table(m);
  CycInt out = cyc_zero(m);
  for (size_t j = 0; j < t.phi; ++j) {
    const BigInt& c = a.coeffs[j];
    if (c == 0) continue;
    const Poly& row = t.powers[static_cast<size_t>((static_cast<int64_t>(j) * kr) % m)];
    for (size_t i = 0; i < t.phi; ++i) out.coeffs[i] += c * row[i];
  }
  return out;
}

bool is_rational(const CycInt& a) {
  for (size_t i = 1; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != 0) return false;
  }
  return true;
}

BigInt as_integer(const CycInt& a) {
  if (!is_rational(a)) {
    throw validation_error("not-rational", "value has nonzero non-constant coordinates");
  }
  return a.coeffs[0];
}

namespace {

void append_term(std::string& out, const BigInt& c, size_t power, const char* var) {
  const BigInt mag = c < 0 ? BigInt(-c) : c;
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1 || power == 0) out += mag.str();
  if (power > 0) {
    if (mag != 1) out += "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  }
}

}  // namespace

std::string to_string(const CycInt& a) {
  std::string out;
  for (size_t j = 0; j < a.coeffs.size(); ++j) {
    if (a.coeffs[j] != 0) append_term(out, a.coeffs[j], j, "z");
  }
  return out.empty() ? "0" : out;
}

std::string poly_to_string(const std::vector<BigInt>& coeffs, const char* var) {
  std::string out;
  for (size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j] != 0) append_term(out, coeffs[j], j, var);
  }
  return out.empty() ? "0" : out;
}

std::complex<double> complex_embed(const CycInt& a) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  for (size_t j = 0; j < a.coeffs.size(); ++j) {
    if (a.coeffs[j] == 0) continue;
    const long double c = a.coeffs[j].convert_to<long double>();
    const long double ang = two_pi * static_cast<long double>(j) / static_cast<long double>(a.modulus);
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace cayley
