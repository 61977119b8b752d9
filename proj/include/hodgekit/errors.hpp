#pragma once

#include <stdexcept>
#include <string>

namespace hodgekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of an induced map failed (typically: the map is not a chain map).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs the holomorphic differential, but the complex carries only delbar.
class MissingDifferential : public Error {
 public:
  MissingDifferential(const std::string& op)
      : Error(op + ": complex carries only delbar; the operation needs del") {}
};

/// Model data that cannot produce a valid complex.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// Line-numbered diagnostic from the model-file parser.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A linear system without a unique solution.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

/// An identity that holds for every input failed; indicates an engine fault.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hodgekit
