// Exception types shared across the library.  Every error carries a stable
// machine-readable code string that the CLI surfaces verbatim.
#pragma once

#include <stdexcept>
#include <string>

namespace redprod {

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Bad arguments: out-of-range elements, dimension mismatches, gate failures.
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error("input", msg) {}
};

// Tuple-space enumeration would exceed the configured cap.
class SizeCapError : public Error {
public:
  explicit SizeCapError(const std::string& msg) : Error("size-cap", msg) {}
};

// A generator family with empty intersection while properness is required.
class ImproperFilterError : public Error {
public:
  explicit ImproperFilterError(const std::string& msg)
      : Error("improper-filter", msg) {}
};

// A stated precondition does not hold (e.g. restricting by a non-member set).
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& msg)
      : Error("precondition", msg) {}
};

// Instance / formula text errors, with source location when known.
class ParseError : public Error {
public:
  ParseError(std::string code, const std::string& msg, int line, int col)
      : Error(std::move(code), msg), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

}  // namespace redprod
