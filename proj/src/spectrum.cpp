#include "cayley/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cayley {

namespace {

// Exponent of zeta_{4n} in chi_g(x): sum_i (4n/n_i) * g_i * x_i  (mod 4n).
int64_t character_exponent(const AbelianGroup& G, int64_t four_n, const GroupElement& g,
                           const GroupElement& x) {
  int64_t e = 0;
  for (size_t i = 0; i < G.moduli.size(); ++i) {
    const int64_t stride = four_n / G.moduli[i];
    e = (e + (stride % four_n) * ((g.coords[i] * x.coords[i]) % G.moduli[i])) % four_n;
  }
  return e;
}

void add_root(CycInt& acc, int64_t e) {
  acc = cyc_add(acc, root_power(acc.modulus, e));
}

}  // namespace

int64_t spectrum_modulus(const AbelianGroup& G) { return 4 * G.exponent; }

const SpectrumEntry& Spectrum::at(const GroupElement& g) const {
  return entries[static_cast<size_t>(element_index(group, g))];
}

ConnectionSet make_connection_set(const AbelianGroup& G, std::vector<GroupElement> A,
                                  std::vector<GroupElement> B) {
  ConnectionSet cs;
  cs.group = G;
  for (auto& x : A) x = element(G, std::move(x.coords));
  for (auto& x : B) x = element(G, std::move(x.coords));
  cs.A = make_element_set(std::move(A));
  cs.B = make_element_set(std::move(B));

  if (set_contains(cs.A, zero(G)) || set_contains(cs.B, zero(G))) {
    throw validation_error("contains-zero", "connection sets must exclude the identity");
  }
  if (cs.A != negate_set(G, cs.A)) {
    throw validation_error("A-not-symmetric", "A must satisfy A = -A");
  }
  if (!set_intersection(cs.B, negate_set(G, cs.B)).empty()) {
    throw validation_error("B-meets-minus-B", "B must satisfy B ∩ (-B) = ∅");
  }
  if (!set_intersection(cs.A, cs.B).empty()) {
    throw validation_error("A-B-overlap", "A and B must be disjoint");
  }
  return cs;
}

ConnectionSet split_connection_set(const AbelianGroup& G, std::vector<GroupElement> S) {
  for (auto& x : S) x = element(G, std::move(x.coords));
  ElementSet s = make_element_set(std::move(S));
  if (set_contains(s, zero(G))) {
    throw validation_error("contains-zero", "connection sets must exclude the identity");
  }
  std::vector<GroupElement> A, B;
  for (const GroupElement& x : s) {
    (set_contains(s, neg(G, x)) ? A : B).push_back(x);
  }
  return make_connection_set(G, std::move(A), std::move(B));
}

HermitianEntry hermitian_entry(const ConnectionSet& cs, const GroupElement& u,
                               const GroupElement& v) {
  const GroupElement d = add(cs.group, v, neg(cs.group, u));
  if (set_contains(cs.A, d)) return {1, 0};
  if (set_contains(cs.B, d)) return {0, 1};
  if (set_contains(cs.B, neg(cs.group, d))) return {0, -1};
  return {0, 0};
}

CycInt lambda_part(const ConnectionSet& cs, const GroupElement& g) {
  const int64_t m = spectrum_modulus(cs.group);
  CycInt acc = cyc_zero(m);
  for (const GroupElement& a : cs.A) {
    add_root(acc, character_exponent(cs.group, m, g, a));
  }
  return acc;
}

CycInt mu_part(const ConnectionSet& cs, const GroupElement& g) {
  const int64_t m = spectrum_modulus(cs.group);
  const int64_t n = cs.group.exponent;  // i = zeta_{4n}^n
  CycInt acc = cyc_zero(m);
  for (const GroupElement& b : cs.B) {
    const int64_t e = character_exponent(cs.group, m, g, b);
    add_root(acc, n + e);
    acc = cyc_sub(acc, root_power(m, n - e));
  }
  return acc;
}

CycInt eigenvalue(const ConnectionSet& cs, const GroupElement& g) {
  return cyc_add(lambda_part(cs, g), mu_part(cs, g));
}

Spectrum full_spectrum(const ConnectionSet& cs) {
  Spectrum spec;
  spec.group = cs.group;
  spec.modulus = spectrum_modulus(cs.group);
  spec.entries.reserve(static_cast<size_t>(cs.group.order));
  for (const GroupElement& g : elements(cs.group)) {
    SpectrumEntry e{g, lambda_part(cs, g), mu_part(cs, g), cyc_zero(spec.modulus)};
    e.gamma = cyc_add(e.lambda, e.mu);
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

std::vector<BigInt> char_poly(const Spectrum& spec) {
  // Expand prod (x - gamma_g) with coefficients in Z[zeta_{4n}].
  std::vector<CycInt> c{cyc_integer(spec.modulus, 1)};
  for (const SpectrumEntry& e : spec.entries) {
    c.push_back(c.back());
    for (size_t j = c.size() - 1; j-- > 0;) {
      CycInt t = cyc_mul(e.gamma, c[j]);
      if (j > 0) {
        c[j] = cyc_sub(c[j - 1], t);
      } else {
        c[j] = cyc_neg(t);
      }
    }
  }
  std::vector<BigInt> out;
  out.reserve(c.size());
  for (const CycInt& v : c) {
    if (!is_rational(v)) {
      throw internal_error("char_poly: non-rational coefficient, arithmetic bug");
    }
    out.push_back(v.coeffs[0]);
  }
  return out;
}

std::vector<BigInt> char_poly(const ConnectionSet& cs) { return char_poly(full_spectrum(cs)); }

std::vector<double> numeric_spectrum(const ConnectionSet& cs, double tol) {
  if (!(tol > 0)) {
    throw validation_error("invalid-tolerance", "tolerance must be positive");
  }
  const auto all = elements(cs.group);
  const size_t N = all.size();
  const size_t d = 2 * N;

  // realified Hermitian matrix [[Re, -Im], [Im, Re]]
  std::vector<double> a(d * d, 0.0);
  auto at = [&](size_t r, size_t c) -> double& { return a[r * d + c]; };
  for (size_t u = 0; u < N; ++u) {
    for (size_t v = 0; v < N; ++v) {
      const HermitianEntry h = hermitian_entry(cs, all[u], all[v]);
      at(u, v) = h.re;
      at(N + u, N + v) = h.re;
      at(u, N + v) = -h.im;
      at(N + u, v) = h.im;
    }
  }

  const double threshold = std::min(tol, 1e-12);
  auto off_mass = [&] {
    double s = 0;
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) {
        if (r != c) s += at(r, c) * at(r, c);
      }
    }
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (off_mass() < threshold) {
      converged = true;
      break;
    }
    for (size_t p = 0; p + 1 < d; ++p) {
      for (size_t q = p + 1; q < d; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (size_t k = 0; k < d; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (size_t k = 0; k < d; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (!converged && off_mass() >= threshold) {
    throw internal_error("numeric_spectrum: Jacobi did not converge within 100 sweeps");
  }

  std::vector<double> diag(d);
  for (size_t r = 0; r < d; ++r) diag[r] = at(r, r);
  std::sort(diag.begin(), diag.end());

  // every Hermitian eigenvalue shows up twice in the realified matrix
  std::vector<double> out;
  out.reserve(N);
  for (size_t r = 0; r < d; r += 2) {
    if (std::abs(diag[r] - diag[r + 1]) >= 1e-10) {
      throw internal_error("numeric_spectrum: realified eigenvalues failed to pair");
    }
    out.push_back(0.5 * (diag[r] + diag[r + 1]));
  }
  return out;
}

}  // namespace cayley
