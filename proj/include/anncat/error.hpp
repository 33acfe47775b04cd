#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anncat {

enum class ErrorCode {
  MalformedSpec,
  AxiomViolation,
  ObjectMismatch,
  ArityMismatch,
  BraidingAbsent,
  NotSymmetric,
  InvalidBase,
  NotInCenter,
  ClosureViolation,
  ParseError,
  ShapeError,
  BudgetExceeded,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A ring or bimodule law failed on explicit tables. The witness lists the
// element indices (in the law's variable order) of the first failing tuple.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string law, std::vector<std::size_t> witness);

  const std::string& law() const noexcept { return law_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::vector<std::size_t> witness_;
};

// A malformed instance document. The location is a JSON pointer into the
// document ("/lambda/1/0"), or "byte N" for syntax errors. Out-of-range
// indices and dimension mismatches raise ShapeError with the same location
// scheme.
class LocatedError : public Error {
 public:
  LocatedError(ErrorCode code, std::string location, const std::string& detail);

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace anncat
