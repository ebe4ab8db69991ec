#pragma once

#include <stdexcept>
#include <string>

namespace hadpow {

/// Coarse error category; the CLI maps each one to an exit code.
enum class ErrorKind {
  parse,        // malformed input text / IO
  argument,     // bad arguments or violated operation preconditions
  structure,    // input matrix lacks a required structural property
  convergence,  // numerical procedure did not converge / search exhausted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(ErrorKind::argument, w) {}
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& w) : Error(ErrorKind::argument, w) {}
};

/// A value lies outside the domain of the requested operation
/// (negative base with a fractional exponent, t outside (R1, R2), ...).
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::structure, w) {}
};

struct StructureError : Error {
  explicit StructureError(const std::string& w) : Error(ErrorKind::structure, w) {}
};

struct RankError : StructureError {
  RankError(const std::string& w, int rank) : StructureError(w), rank(rank) {}
  int rank;
};

struct PerronError : StructureError {
  using StructureError::StructureError;
};

struct SingularPivotError : StructureError {
  using StructureError::StructureError;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& w, double off_norm)
      : Error(ErrorKind::convergence, w), off_norm(off_norm) {}
  double off_norm;
};

struct NotFoundError : Error {
  explicit NotFoundError(const std::string& w) : Error(ErrorKind::convergence, w) {}
};

struct ParseError : Error {
  ParseError(const std::string& w, int line) : Error(ErrorKind::parse, w), line(line) {}
  int line;
};

struct SymmetryError : Error {
  SymmetryError(const std::string& w, double deviation)
      : Error(ErrorKind::parse, w), deviation(deviation) {}
  double deviation;
};

}  // namespace hadpow
