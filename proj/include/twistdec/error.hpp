#pragma once

#include <stdexcept>
#include <string>

namespace twistdec {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (files, permutation strings, words).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input that violates a precondition (wrong degree,
// element not in group, symbol out of range, ...).
struct InputError : Error {
  using Error::Error;
};

// An enumeration or subset sweep exceeded its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace twistdec
