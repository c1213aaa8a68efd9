#pragma once

#include <stdexcept>
#include <string>

namespace webtrace {

// Failure categories; the C API maps these one-to-one onto status codes.
enum class ErrorCode {
  parse,
  invalid_argument,
  profile_mismatch,
  shape_mismatch,
  budget_exceeded,
  cap_exceeded,
  singular_matrix,
  missing_type,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax or semantic failure while reading a document; carries the 1-based
// source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace webtrace
