#include "cayley/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cayley {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > (static_cast<__int128>(1) << 62)) {
    throw validation_error("invalid-group", "group order exceeds 2^62");
  }
  return static_cast<int64_t>(p);
}

int64_t mod_reduce(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void check_dimension(const AbelianGroup& G, const GroupElement& x) {
  if (x.coords.size() != G.moduli.size()) {
    throw validation_error("invalid-element",
                           "element has " + std::to_string(x.coords.size()) +
                               " coordinates, group has rank " +
                               std::to_string(G.moduli.size()));
  }
}

}  // namespace

bool UnitSet::contains(int64_t k) const {
  return std::binary_search(elements.begin(), elements.end(), k);
}

AbelianGroup make_group(const std::vector<int64_t>& moduli) {
  if (moduli.empty()) {
    throw validation_error("invalid-group", "at least one cyclic factor required");
  }
  AbelianGroup G;
  G.moduli = moduli;
  for (int64_t m : moduli) {
    if (m <= 0) {
      throw validation_error("invalid-group",
                             "cyclic factor size must be >= 1, got " + std::to_string(m));
    }
    G.order = checked_mul(G.order, m);
    G.exponent = std::lcm(G.exponent, m);
  }
  return G;
}

GroupElement element(const AbelianGroup& G, std::vector<int64_t> coords) {
  GroupElement x{std::move(coords)};
  check_dimension(G, x);
  for (size_t i = 0; i < x.coords.size(); ++i) {
    x.coords[i] = mod_reduce(x.coords[i], G.moduli[i]);
  }
  return x;
}

GroupElement zero(const AbelianGroup& G) {
  return GroupElement{std::vector<int64_t>(G.moduli.size(), 0)};
}

bool is_zero(const GroupElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](int64_t c) { return c == 0; });
}

GroupElement add(const AbelianGroup& G, const GroupElement& x, const GroupElement& y) {
  check_dimension(G, x);
  check_dimension(G, y);
  GroupElement out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = mod_reduce(out.coords[i] + y.coords[i], G.moduli[i]);
  }
  return out;
}

GroupElement neg(const AbelianGroup& G, const GroupElement& x) {
  check_dimension(G, x);
  GroupElement out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = mod_reduce(-out.coords[i], G.moduli[i]);
  }
  return out;
}

GroupElement scalar_mul(const AbelianGroup& G, int64_t k, const GroupElement& x) {
  check_dimension(G, x);
  GroupElement out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) {
    int64_t ki = mod_reduce(k, G.moduli[i]);
    out.coords[i] = mod_reduce(ki * out.coords[i], G.moduli[i]);
  }
  return out;
}

int64_t order_of(const AbelianGroup& G, const GroupElement& x) {
  check_dimension(G, x);
  int64_t t = 1;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    t = std::lcm(t, G.moduli[i] / std::gcd(x.coords[i], G.moduli[i]));
  }
  return t;
}

UnitSet units(int64_t m) {
  if (m <= 0) {
    throw validation_error("invalid-group", "unit group modulus must be >= 1");
  }
  UnitSet u;
  u.modulus = m;
  if (m <= 2) {
    u.elements = {1};  // canonical identity class; phi(1) = phi(2) = 1
    return u;
  }
  for (int64_t k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) u.elements.push_back(k);
  }
  return u;
}

int64_t euler_phi(int64_t m) {
  if (m <= 0) {
    throw validation_error("invalid-group", "phi argument must be >= 1");
  }
  int64_t result = m;
  int64_t rest = m;
  for (int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      result -= result / p;
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<GroupElement> elements(const AbelianGroup& G) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(G.order));
  GroupElement cur = zero(G);
  const size_t r = G.moduli.size();
  while (true) {
    out.push_back(cur);
    size_t i = r;
    while (i > 0) {
      --i;
      if (++cur.coords[i] < G.moduli[i]) break;
      cur.coords[i] = 0;
      if (i == 0) return out;
    }
    if (r == 0) return out;
  }
}

int64_t element_index(const AbelianGroup& G, const GroupElement& x) {
  check_dimension(G, x);
  int64_t idx = 0;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    idx = idx * G.moduli[i] + x.coords[i];
  }
  return idx;
}

ElementSet orbit(const AbelianGroup& G, const UnitSet& multipliers, const GroupElement& x) {
  std::vector<GroupElement> out;
  out.reserve(multipliers.size());
  for (int64_t k : multipliers.elements) {
    out.push_back(scalar_mul(G, k, x));
  }
  return make_element_set(std::move(out));
}

ElementSet atom(const AbelianGroup& G, const GroupElement& g) {
  return orbit(G, units(order_of(G, g)), g);
}

ElementSet atom_mod4(const AbelianGroup& G, const GroupElement& g) {
  const int64_t o = order_of(G, g);
  if (o % 4 != 0) {
    throw validation_error("not-in-G4",
                           "element order " + std::to_string(o) + " is not divisible by 4");
  }
  std::vector<GroupElement> out;
  for (int64_t k : units(o).elements) {
    if (k % 4 == 1) out.push_back(scalar_mul(G, k, g));
  }
  return make_element_set(std::move(out));
}

ElementSet g4_subset(const AbelianGroup& G) {
  std::vector<GroupElement> out;
  for (const GroupElement& g : elements(G)) {
    if (order_of(G, g) % 4 == 0) out.push_back(g);
  }
  return make_element_set(std::move(out));
}

ElementSet make_element_set(std::vector<GroupElement> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool set_contains(const ElementSet& s, const GroupElement& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet negate_set(const AbelianGroup& G, const ElementSet& s) {
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (const GroupElement& x : s) out.push_back(neg(G, x));
  return make_element_set(std::move(out));
}

ElementSet scale_set(const AbelianGroup& G, int64_t k, const ElementSet& s) {
  std::vector<GroupElement> out;
  out.reserve(s.size());
  for (const GroupElement& x : s) out.push_back(scalar_mul(G, k, x));
  return make_element_set(std::move(out));
}

}  // namespace cayley
