#pragma once

#include <stdexcept>
#include <string>

namespace lpforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two values that should live on the same measure space do not.
struct StructuralError : Error {
  explicit StructuralError(const std::string& what) : Error(what) {}
};

// An argument is outside its documented domain (N = 0, p < 1, ...).
struct ParameterError : Error {
  explicit ParameterError(const std::string& what) : Error(what) {}
};

// A stated precondition does not hold for the given inputs.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Lexical or grammatical error in a type/formula source string.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A term or formula fails the arrow-type discipline.
struct TypeError : Error {
  TypeError(const std::string& what, const std::string& subterm)
      : Error(what + " in `" + subterm + "`"), subterm(subterm) {}
  std::string subterm;
};

// A majorization/⪯ query at a type outside the supported fragment.
struct UnsupportedTypeError : Error {
  explicit UnsupportedTypeError(const std::string& what) : Error(what) {}
};

}  // namespace lpforge
