#pragma once

#include <stdexcept>
#include <string>

namespace hecke_lab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (permutation strings, Hessenberg lists, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that live in different symmetric groups / degrees.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation that requires a smooth permutation receives a
/// permutation containing 3412 or 4231.
class NotSmooth : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug
/// (or a counterexample to a theorem); it is never expected.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

/// The int64 fast path overflowed.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke_lab
