#include "oqkit/report.hpp"

namespace oqkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotOrtholattice: return "NotOrtholattice";
    case ErrorCode::NotOrthomodular: return "NotOrthomodular";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::OrderLawViolation: return "OrderLawViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidQca: return "InvalidQca";
    case ErrorCode::InvalidCqia: return "InvalidCqia";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::EmptyGenerator: return "EmptyGenerator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

bool CheckReport::has(std::string_view axiom) const {
  return find(axiom) != nullptr;
}

const Violation* CheckReport::find(std::string_view axiom) const {
  for (const Violation& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

bool CheckReport::add(std::string_view axiom, std::vector<int> witness,
                      std::vector<std::string> witness_labels) {
  if (has(axiom)) return false;
  if (witness_labels.empty())
    for (int x : witness) witness_labels.push_back(std::to_string(x));
  violations.push_back(
      {std::string(axiom), std::move(witness), std::move(witness_labels)});
  return true;
}

void CheckReport::merge(const CheckReport& other, std::string_view prefix) {
  for (const Violation& v : other.violations) {
    Violation copy = v;
    copy.axiom = std::string(prefix) + copy.axiom;
    violations.push_back(std::move(copy));
  }
}

std::string CheckReport::summary() const {
  if (passed()) return "ok";
  const Violation& v = violations.front();
  std::string out = "axiom " + v.axiom + ": witness (";
  for (std::size_t i = 0; i < v.witness_labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += v.witness_labels[i];
  }
  out += ")";
  if (violations.size() > 1)
    out += " and " + std::to_string(violations.size() - 1) + " more";
  return out;
}

}  // namespace oqkit
