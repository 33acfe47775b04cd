#include "anncat/error.hpp"

#include <sstream>

namespace anncat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ObjectMismatch: return "ObjectMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BraidingAbsent: return "BraidingAbsent";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotInCenter: return "NotInCenter";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string describe_violation(const std::string& law, const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << "axiom violated: " << law << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) out << ", ";
    out << witness[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string law, std::vector<std::size_t> witness)
    : Error(ErrorCode::AxiomViolation, describe_violation(law, witness)),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

LocatedError::LocatedError(ErrorCode code, std::string location, const std::string& detail)
    : Error(code, std::string(to_string(code)) + " at " + (location.empty() ? "/" : location) + ": " + detail),
      location_(location.empty() ? "/" : std::move(location)) {}

}  // namespace anncat
