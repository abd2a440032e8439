#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oqkit {

enum class ErrorCode {
  MalformedTable,
  NotOrtholattice,
  NotOrthomodular,
  InternalInconsistency,
  NotConstant,
  OrderLawViolation,
  PreconditionFailed,
  TheoremViolation,
  Unbounded,
  DimensionMismatch,
  InvalidQca,
  InvalidCqia,
  TooLarge,
  ZeroGenerator,
  EmptyGenerator,
  ParseError,
  ValidationError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// One falsified axiom instance. `witness` holds the raw indices of the tuple
// that falsifies the axiom; `witness_labels` is the display form chosen by
// the checker (element labels where the component is an element, plain
// numbers where it is a dimension), parallel to `witness`.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::vector<std::string> witness_labels;
};

// Outcome of an exhaustive axiom check. Checkers scan witness tuples in
// lexicographic order and record only the first violation per axiom id, so
// reports are deterministic across runs.
struct CheckReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  bool has(std::string_view axiom) const;
  const Violation* find(std::string_view axiom) const;

  // Records a violation unless `axiom` already carries one. Returns true if
  // the violation was recorded.
  bool add(std::string_view axiom, std::vector<int> witness,
           std::vector<std::string> witness_labels = {});

  // Appends all violations of `other`, prefixing their axiom ids.
  void merge(const CheckReport& other, std::string_view prefix = {});

  // "ok" when passed, otherwise a one-line description of the first violation.
  std::string summary() const;
};

}  // namespace oqkit
