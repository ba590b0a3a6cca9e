#pragma once

#include <stdexcept>
#include <string>

namespace monofock {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A configurable size cap (truncation index, atom count, degree) was exceeded.
class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error(what) {}
};

/// Evaluation at a pole of a Cauchy transform.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

/// Working precision is exhausted: atoms collided, a root count came out
/// short, or a residue lost its sign.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

/// A structural property the theory guarantees failed to hold
/// (non-squarefree polynomial, relabeling mismatch, asymmetric matrix).
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error(what) {}
};

}  // namespace monofock
