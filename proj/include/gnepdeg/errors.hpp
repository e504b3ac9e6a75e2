#pragma once

#include <stdexcept>
#include <string>

namespace gnepdeg {

// Malformed textual input (polynomial grammar, active-tuple syntax, JSON shape).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a document-level rule (disagreeing declared
// and computed multi-degrees, bad dimensions, unknown constraint kind, ...).
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// Valid data handed to an operation whose preconditions it does not meet
// (over-determined active set, non-NEP shape on the NEP path, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gnepdeg
