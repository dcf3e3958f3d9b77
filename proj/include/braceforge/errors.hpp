#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace braceforge {

// Exceptions cover misuse and data that cannot support the requested
// construction. Expected negative outcomes (failed certifications, invalid
// tables under inspection) travel as report values instead, so callers can
// show witnesses without unwinding.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Order 0 or negative where a group order is required.
struct InvalidOrderError : Error {
  using Error::Error;
};

// Construction would exceed the configured carrier cap or scan budget.
struct CapacityError : Error {
  using Error::Error;
};

// Mismatched table sizes, identities, dimensions or moduli.
struct ShapeError : Error {
  using Error::Error;
};

// Input outside the operation's domain (not a subgroup, uncertified data, ...).
struct DomainError : Error {
  using Error::Error;
};

// A named parameter constraint is violated; message names the constraint.
struct ParameterError : Error {
  using Error::Error;
};

// A search is provably empty (e.g. no element of the requested order exists).
struct NoSolutionError : Error {
  using Error::Error;
};

// The brace relation fails; carries the violating triple.
struct BraceAxiomError : Error {
  std::array<std::int32_t, 3> witness;
  BraceAxiomError(const std::string& msg, std::int32_t a, std::int32_t b,
                  std::int32_t c)
      : Error(msg), witness{a, b, c} {}
};

// Unreadable or malformed input file / argument text.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace braceforge
