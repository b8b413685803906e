#pragma once

#include <stdexcept>
#include <string>

namespace hnf {

enum class ErrorCode {
  SyntaxError,
  LinearPartError,
  UndeclaredParameter,
  InvalidTerm,
  BadLinearPart,
  NotGeneric,
  NoParametricDimension,
  DimensionMismatch,
  DegenerateInput,
  NonResonantTerm,
  NotInSpan,
  InvalidConfig,
  InternalError,
};

const char* error_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code so the
/// command line can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by genericity analysis; carries the rank that was found.
class NotGenericError : public Error {
 public:
  NotGenericError(int rank, int n0)
      : Error(ErrorCode::NotGeneric, "rank of the mu-linear amplitude matrix is " + std::to_string(rank) +
                                         ", parametric dimension is " + std::to_string(n0)),
        rank_(rank) {}

  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// Parse failures with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& msg)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hnf
