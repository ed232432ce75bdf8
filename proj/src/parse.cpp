#include "cayley/parse.hpp"

#include <cctype>
#include <sstream>

namespace cayley {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw parse_error(std::string("expected '") + c + "' at position " + std::to_string(pos) +
                        " in \"" + s + "\"");
    }
  }
  int64_t integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      throw parse_error("expected integer at position " + std::to_string(start) + " in \"" + s +
                        "\"");
    }
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

AbelianGroup parse_group_spec(const std::string& s) {
  Cursor c{s};
  std::vector<int64_t> moduli;
  const bool z_form = c.peek() == 'Z' || c.peek() == 'z';
  while (true) {
    if (z_form) {
      if (!c.accept('Z') && !c.accept('z')) {
        throw parse_error("expected 'Z' at position " + std::to_string(c.pos) + " in \"" + s +
                          "\"");
      }
    }
    const size_t at = c.pos;
    const int64_t m = c.integer();
    if (m <= 0) {
      throw parse_error("invalid modulus " + std::to_string(m) + " at position " +
                        std::to_string(at) + " in \"" + s + "\"");
    }
    moduli.push_back(m);
    if (c.done()) break;
    if (z_form ? (!c.accept('x') && !c.accept('X')) : !c.accept(',')) {
      throw parse_error(std::string("expected '") + (z_form ? 'x' : ',') + "' at position " +
                        std::to_string(c.pos) + " in \"" + s + "\"");
    }
  }
  return make_group(moduli);
}

std::string format_group_spec(const AbelianGroup& G) {
  std::ostringstream out;
  for (size_t i = 0; i < G.moduli.size(); ++i) {
    out << (i ? "xZ" : "Z") << G.moduli[i];
  }
  return out.str();
}

std::vector<GroupElement> parse_element_list(const AbelianGroup& G, const std::string& s) {
  Cursor c{s};
  std::vector<GroupElement> out;
  if (c.done()) return out;
  while (true) {
    std::vector<int64_t> coords;
    if (c.peek() == '(') {
      c.expect('(');
      coords.push_back(c.integer());
      while (c.accept(',')) coords.push_back(c.integer());
      c.expect(')');
    } else {
      if (G.rank() != 1) {
        throw parse_error("bare integers are only valid for rank-1 groups; expected '(' at "
                          "position " +
                          std::to_string(c.pos) + " in \"" + s + "\"");
      }
      coords.push_back(c.integer());
    }
    if (coords.size() != G.rank()) {
      throw parse_error("element has " + std::to_string(coords.size()) +
                        " coordinates, group has rank " + std::to_string(G.rank()));
    }
    out.push_back(element(G, std::move(coords)));
    if (c.done()) break;
    c.expect(',');
    if (c.done()) {
      throw parse_error("trailing ',' in \"" + s + "\"");
    }
  }
  return out;
}

std::string format_element_list(const AbelianGroup& G, const ElementSet& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ",";
    if (G.rank() == 1) {
      out << s[i].coords[0];
    } else {
      out << "(";
      for (size_t j = 0; j < s[i].coords.size(); ++j) {
        if (j) out << ",";
        out << s[i].coords[j];
      }
      out << ")";
    }
  }
  return out.str();
}

ConnectionSet parse_set_spec(const AbelianGroup& G, const std::optional<std::string>& a_str,
                             const std::optional<std::string>& b_str,
                             const std::optional<std::string>& s_str) {
  if (s_str && (a_str || b_str)) {
    throw parse_error("give either --S or --A/--B, not both");
  }
  if (!s_str && !a_str && !b_str) {
    throw parse_error("no connection set given; use --A/--B or --S");
  }
  if (s_str) {
    return split_connection_set(G, parse_element_list(G, *s_str));
  }
  return make_connection_set(G, a_str ? parse_element_list(G, *a_str) : std::vector<GroupElement>{},
                             b_str ? parse_element_list(G, *b_str) : std::vector<GroupElement>{});
}

}  // namespace cayley
