#pragma once

#include <stdexcept>
#include <string>

namespace biregular {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension/degree mismatches, out-of-domain parameters,
// unparseable input files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Exact division by (x - rho) was requested but rho is not a root.
class NotARoot : public Error {
 public:
  using Error::Error;
};

// A root query on a polynomial without real roots.
class NoRealRoot : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured number of terms.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The input graph is not the biregular object it claims to be.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A consistency check between two exact routes failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace biregular
