#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cayley {

// Raised when a string (group spec, element list, JSON document) is malformed.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a well-formed input violates a documented precondition.
// `kind` is a stable machine-checkable tag, e.g. "B-meets-minus-B".
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Raised when an internal invariant fails; indicates an arithmetic bug,
// never a bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
