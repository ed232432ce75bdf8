#pragma once

#include <optional>
#include <string>

#include "cayley/group.hpp"
#include "cayley/spectrum.hpp"

namespace cayley {

// Accepts "Z4xZ3" (case-insensitive Z, x or X separators) or a bare comma
// list "4,3".
AbelianGroup parse_group_spec(const std::string& s);
std::string format_group_spec(const AbelianGroup& G);

// Element lists: "(1,0),(3,0)"; rank-1 groups also accept bare integers
// "1,3".  The empty string is the empty set.
std::vector<GroupElement> parse_element_list(const AbelianGroup& G, const std::string& s);
std::string format_element_list(const AbelianGroup& G, const ElementSet& s);

// Builds a connection set from CLI strings: either A/B form or S form
// (auto-split), never both.
ConnectionSet parse_set_spec(const AbelianGroup& G, const std::optional<std::string>& a_str,
                             const std::optional<std::string>& b_str,
                             const std::optional<std::string>& s_str);

}  // namespace cayley
