#pragma once

#include <stdexcept>
#include <string>

namespace morincob {

// Error taxonomy shared across the library; the C layer maps each type to a
// status code.
struct MorincobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (stems file, bad configuration).
struct ValidationError : MorincobError {
  using MorincobError::MorincobError;
};

// File system failure while reading input.
struct IoError : MorincobError {
  using MorincobError::MorincobError;
};

// A composition product the table does not contain. Never silently zero.
struct UnknownProductError : MorincobError {
  UnknownProductError(const std::string& lhs, const std::string& rhs)
      : MorincobError("unknown product: (" + lhs + ", " + rhs + ") is not in the table"),
        lhs_name(lhs),
        rhs_name(rhs) {}
  std::string lhs_name, rhs_name;
};

// A stem degree beyond the table range.
struct OutOfTableError : MorincobError {
  using MorincobError::MorincobError;
};

// An integral second differential the data does not pin down; only the
// localized statements are available.
struct IndeterminateError : MorincobError {
  using MorincobError::MorincobError;
};

}  // namespace morincob
