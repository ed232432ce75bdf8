#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

// One element of a finite abelian group, written additively: a residue
// vector with one coordinate per cyclic factor, always stored reduced.
struct GroupElement {
  std::vector<int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
};

// Sorted, duplicate-free vector of group elements (lexicographic order).
using ElementSet = std::vector<GroupElement>;

// Finite abelian group given as a direct product of cyclic groups
// Z_{n1} x ... x Z_{nr}.  Moduli need not be prime powers.
struct AbelianGroup {
  std::vector<int64_t> moduli;
  int64_t order = 1;     // product of the moduli
  int64_t exponent = 1;  // lcm of the moduli

  auto operator<=>(const AbelianGroup&) const = default;
  size_t rank() const { return moduli.size(); }
};

// The unit group Z_m^* as a sorted element list.  For m <= 2 the set is
// canonicalized to {1}, so size() == phi(m) holds for every m >= 1.
struct UnitSet {
  int64_t modulus = 1;
  std::vector<int64_t> elements;

  size_t size() const { return elements.size(); }
  bool contains(int64_t k) const;
};

AbelianGroup make_group(const std::vector<int64_t>& moduli);

GroupElement element(const AbelianGroup& G, std::vector<int64_t> coords);
GroupElement zero(const AbelianGroup& G);
bool is_zero(const GroupElement& x);

GroupElement add(const AbelianGroup& G, const GroupElement& x, const GroupElement& y);
GroupElement neg(const AbelianGroup& G, const GroupElement& x);
GroupElement scalar_mul(const AbelianGroup& G, int64_t k, const GroupElement& x);

// Smallest t >= 1 with t*x = 0.
int64_t order_of(const AbelianGroup& G, const GroupElement& x);

UnitSet units(int64_t m);

// Euler's totient, computed from the prime factorization of m.
int64_t euler_phi(int64_t m);

// All |G| elements in lexicographic coordinate order.
std::vector<GroupElement> elements(const AbelianGroup& G);

// Index of x in the lexicographic enumeration.
int64_t element_index(const AbelianGroup& G, const GroupElement& x);

// { k*x : k in multipliers }.
ElementSet orbit(const AbelianGroup& G, const UnitSet& multipliers, const GroupElement& x);

// The Boolean-algebra atom containing g: {kg | k in Z_{o(g)}^*}.
ElementSet atom(const AbelianGroup& G, const GroupElement& g);

// The mod-4 restricted orbit {kg | k in Z_{o(g)}^*, k = 1 (mod 4)}.
// Requires o(g) divisible by 4.
ElementSet atom_mod4(const AbelianGroup& G, const GroupElement& g);

// All elements of order divisible by 4.
ElementSet g4_subset(const AbelianGroup& G);

// --- sorted-set helpers -------------------------------------------------

ElementSet make_element_set(std::vector<GroupElement> xs);
bool set_contains(const ElementSet& s, const GroupElement& x);
bool is_subset(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet negate_set(const AbelianGroup& G, const ElementSet& s);
ElementSet scale_set(const AbelianGroup& G, int64_t k, const ElementSet& s);

}  // namespace cayley
