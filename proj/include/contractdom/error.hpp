#pragma once

#include <stdexcept>
#include <string>

namespace contractdom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input graph or argument violates an operation's precondition
/// (out-of-range vertex, self-loop, disconnected input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structural fact that must hold for P3+kP2-free inputs was observed to
/// fail, e.g. a vertex at distance three from the chosen induced pattern.
class StructuralViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace contractdom
