#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oqkit/frames.hpp"
#include "oqkit/qca.hpp"
#include "oqkit/qia.hpp"
#include "oqkit/report.hpp"

namespace oqkit {

// Document kinds of the JSON interchange format. "ol" and "oml" share the
// lattice payload; the kind decides which checks `run_checks` applies.
enum class DocKind { ol, oml, qca, qia, cqia, frame };

const char* kind_name(DocKind kind);
DocKind kind_from_string(std::string_view name);  // throws ValidationError

struct AlgebraDocument {
  DocKind kind = DocKind::ol;
  std::variant<Ortholattice, QuantumCylindricAlgebra, QiaTable, CylindricQia,
               CylindricOrthoFrame>
      payload;
};

// Reads and validates a document. JSON syntax and shape problems throw
// ParseError; out-of-range or inconsistent values throw ValidationError with
// the offending field named. Meet/join tables are never read from the file;
// they are derived from "leq".
AlgebraDocument parse_document(const std::string& path);
AlgebraDocument parse_document_text(const std::string& text,
                                    const std::string& origin);

// Canonical serialization: alphabetical keys, two-space indent, sorted index
// lists, trailing newline. serialize(parse(f)) is a fixed point.
std::string serialize_document(const AlgebraDocument& doc);

std::string read_file(const std::string& path);             // throws IoError
void write_file_atomic(const std::string& path,
                       const std::string& bytes);            // temp + rename

// FNV-1a 64-bit digest of the raw input bytes, as "fnv1a64:<hex>".
std::string input_digest(std::string_view bytes);

struct NamedCheck {
  std::string name;
  CheckReport report;
};

// The checks appropriate to the document kind, in order. For lattices the
// orthomodularity check runs only when the ortholattice check passes; for
// quasi-implication tables the derived-identity oracle runs after the
// axioms pass.
std::vector<NamedCheck> run_checks(const AlgebraDocument& doc);

bool all_passed(const std::vector<NamedCheck>& checks);

// Human-readable report, one line per check plus one line per violation.
std::string render_report_text(const std::vector<NamedCheck>& checks);

// Machine-readable report document (canonical JSON).
std::string report_document_json(const std::string& input_path,
                                 const std::string& input_bytes, DocKind kind,
                                 const std::vector<NamedCheck>& checks);

}  // namespace oqkit
