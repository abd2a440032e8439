// Command-line front end: checking, conversion, frame construction, filter
// enumeration, catalog instances, and DOT export.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oqkit/catalog.hpp"
#include "oqkit/dot.hpp"
#include "oqkit/frames.hpp"
#include "oqkit/io.hpp"
#include "oqkit/transforms.hpp"
#include "oqkit/version.hpp"

namespace {

using namespace oqkit;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidQca:
    case ErrorCode::InvalidCqia:
    case ErrorCode::NotOrtholattice:
    case ErrorCode::NotOrthomodular:
      return 1;  // the input fails its axioms
    default:
      return 2;
  }
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty())
    std::cout << bytes;
  else
    write_file_atomic(out_path, bytes);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ValidationError,
                what + " must be a non-negative integer, got \"" + text +
                    "\"");
  }
}

// Catalog names: boolean:K, mo:M, o6, cylset:U:D, simple:BASE:D.
AlgebraDocument catalog_document(const std::string& name,
                                 const Limits& limits) {
  const std::vector<std::string> parts = split(name, ':');
  AlgebraDocument doc;
  if (parts[0] == "o6" && parts.size() == 1) {
    doc.kind = DocKind::ol;
    doc.payload = o6();
    return doc;
  }
  if (parts[0] == "boolean" && parts.size() == 2) {
    doc.kind = DocKind::oml;
    doc.payload = boolean_algebra(parse_count(parts[1], "atom count"), limits);
    return doc;
  }
  if (parts[0] == "mo" && parts.size() == 2) {
    const int m = parse_count(parts[1], "pair count");
    if (m < 1)
      throw Error(ErrorCode::ValidationError, "mo:M needs M >= 1");
    doc.kind = DocKind::oml;
    doc.payload = mo(m, limits);
    return doc;
  }
  if (parts[0] == "cylset" && parts.size() == 3) {
    const int u = parse_count(parts[1], "base size");
    if (u < 1)
      throw Error(ErrorCode::ValidationError, "cylset:U:D needs U >= 1");
    doc.kind = DocKind::qca;
    doc.payload =
        cylindric_set_algebra(u, parse_count(parts[2], "dimension count"),
                              limits);
    return doc;
  }
  if (parts[0] == "simple" && parts.size() >= 3) {
    std::string base;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
      if (i > 1) base += ":";
      base += parts[i];
    }
    const AlgebraDocument base_doc = catalog_document(base, limits);
    if (!std::holds_alternative<Ortholattice>(base_doc.payload))
      throw Error(ErrorCode::ValidationError,
                  "simple:BASE:D needs a lattice base, got \"" + base + "\"");
    doc.kind = DocKind::qca;
    doc.payload =
        with_simple_quantifiers(std::get<Ortholattice>(base_doc.payload),
                                parse_count(parts.back(), "dimension count"));
    return doc;
  }
  throw Error(ErrorCode::ValidationError,
              "unknown catalog name \"" + name +
                  "\" (expected boolean:K, mo:M, o6, cylset:U:D, "
                  "simple:BASE:D)");
}

CylindricQia cqia_from_document(const AlgebraDocument& doc) {
  if (doc.kind == DocKind::cqia) return std::get<CylindricQia>(doc.payload);
  if (doc.kind == DocKind::qca)
    return qca_to_cqia(std::get<QuantumCylindricAlgebra>(doc.payload));
  throw Error(ErrorCode::ValidationError,
              "expected a qca or cqia document, got kind \"" +
                  std::string(kind_name(doc.kind)) + "\"");
}

int cmd_check(const std::string& path, const std::string& json_path) {
  const std::string bytes = read_file(path);
  const AlgebraDocument doc = parse_document_text(bytes, path);
  const std::vector<NamedCheck> checks = run_checks(doc);
  std::cout << render_report_text(checks);
  if (!json_path.empty())
    write_file_atomic(json_path,
                      report_document_json(path, bytes, doc.kind, checks));
  return all_passed(checks) ? 0 : 1;
}

int cmd_convert(const std::string& path, const std::string& target,
                const std::string& out_path) {
  const AlgebraDocument doc = parse_document(path);
  AlgebraDocument out;
  if (target == "qia") {
    if (doc.kind != DocKind::qca)
      throw Error(ErrorCode::ValidationError,
                  "convert --to qia expects a qca document");
    out.kind = DocKind::cqia;
    out.payload = qca_to_cqia(std::get<QuantumCylindricAlgebra>(doc.payload));
  } else {
    if (doc.kind != DocKind::cqia)
      throw Error(ErrorCode::ValidationError,
                  "convert --to qca expects a cqia document");
    out.kind = DocKind::qca;
    out.payload = cqia_to_qca(std::get<CylindricQia>(doc.payload));
  }
  emit(serialize_document(out), out_path);
  return 0;
}

int cmd_roundtrip(const std::string& path) {
  const AlgebraDocument doc = parse_document(path);
  const std::string canonical = serialize_document(doc);
  AlgebraDocument back;
  if (doc.kind == DocKind::qca) {
    back.kind = DocKind::qca;
    back.payload =
        cqia_to_qca(qca_to_cqia(std::get<QuantumCylindricAlgebra>(doc.payload)));
  } else if (doc.kind == DocKind::cqia) {
    back.kind = DocKind::cqia;
    back.payload = qca_to_cqia(cqia_to_qca(std::get<CylindricQia>(doc.payload)));
  } else {
    throw Error(ErrorCode::ValidationError,
                "roundtrip expects a qca or cqia document");
  }
  const std::string reproduced = serialize_document(back);
  if (reproduced == canonical) {
    std::cout << "roundtrip: identical (" << canonical.size() << " bytes)\n";
    return 0;
  }
  std::cout << "roundtrip: MISMATCH\n";
  return 1;
}

int cmd_frame(const std::string& path, const std::string& kind,
              const std::string& out_path, const std::string& dot_path,
              const std::string& delta_sel, bool loops, const Limits& limits) {
  const CylindricQia c = cqia_from_document(parse_document(path));
  const CylindricOrthoFrame F =
      kind == "maclaren" ? maclaren_frame(c, limits) : goldblatt_frame(c, limits);

  AlgebraDocument doc;
  doc.kind = DocKind::frame;
  doc.payload = F;
  emit(serialize_document(doc), out_path);

  if (!dot_path.empty()) {
    DotOptions opts;
    opts.include_loops = loops;
    if (!delta_sel.empty()) {
      const std::vector<std::string> parts = split(delta_sel, ',');
      if (parts.size() != 2)
        throw Error(ErrorCode::ValidationError,
                    "--delta expects i,k");
      opts.fill_delta = {parse_count(parts[0], "delta index"),
                         parse_count(parts[1], "delta index")};
    }
    write_file_atomic(dot_path, frame_to_dot(F, opts));
  }
  return 0;
}

int cmd_filters(const std::string& path, const Limits& limits) {
  const CylindricQia c = cqia_from_document(parse_document(path));
  const std::vector<FilterSubset> filters = enumerate_proper_filters(c, limits);
  std::cout << filters.size() << " proper filter"
            << (filters.size() == 1 ? "" : "s") << "\n";
  for (const FilterSubset& f : filters) {
    std::string line = "{";
    bool first = true;
    for (int e : f.to_indices()) {
      if (!first) line += ", ";
      line += c.qia.label(e);
      first = false;
    }
    std::cout << line << "}\n";
  }
  return 0;
}

int cmd_catalog(const std::string& name, const std::string& out_path,
                const std::string& as_kind, const Limits& limits) {
  AlgebraDocument doc = catalog_document(name, limits);
  if (!as_kind.empty()) {
    const DocKind k = kind_from_string(as_kind);
    const bool lattice_doc =
        std::holds_alternative<Ortholattice>(doc.payload);
    if (lattice_doc && (k == DocKind::ol || k == DocKind::oml))
      doc.kind = k;
    else
      throw Error(ErrorCode::ValidationError,
                  "--as " + as_kind + " does not fit catalog entry " + name);
  }
  emit(serialize_document(doc), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model toolkit for orthomodular lattices, cylindric "
               "algebras, and their orthoframes"};
  app.set_version_flag("--version", oqkit::kVersion);
  app.require_subcommand(1);

  Limits limits;
  try {
    limits = Limits::from_env();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  app.add_option("--max-elems", limits.max_elems,
                 "element cap for lattices and tables")
      ->capture_default_str();
  app.add_option("--max-base", limits.max_base,
                 "cap for function-space bases and frame source algebras")
      ->capture_default_str();

  std::function<int()> action;

  auto* check = app.add_subcommand("check", "run the axiom checks of a file");
  {
    auto path = std::make_shared<std::string>();
    auto json_path = std::make_shared<std::string>();
    check->add_option("file", *path, "input document")->required();
    check->add_option("--json", *json_path, "write a JSON report here");
    check->callback(
        [&action, path, json_path] {
          action = [path, json_path] { return cmd_check(*path, *json_path); };
        });
  }

  auto* report = app.add_subcommand("report", "check and write a JSON report");
  {
    auto path = std::make_shared<std::string>();
    auto json_path = std::make_shared<std::string>();
    report->add_option("file", *path, "input document")->required();
    report->add_option("--json", *json_path, "report output path")->required();
    report->callback(
        [&action, path, json_path] {
          action = [path, json_path] { return cmd_check(*path, *json_path); };
        });
  }

  auto* convert = app.add_subcommand(
      "convert", "convert between qca and cqia documents");
  {
    auto path = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    convert->add_option("--to", *target, "target form")
        ->required()
        ->check(CLI::IsMember({"qia", "qca"}));
    convert->add_option("file", *path, "input document")->required();
    convert->add_option("-o,--output", *out, "output path (default stdout)");
    convert->callback([&action, path, target, out] {
      action = [path, target, out] {
        return cmd_convert(*path, *target, *out);
      };
    });
  }

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "convert both ways and compare with the canonical input");
  {
    auto path = std::make_shared<std::string>();
    roundtrip->add_option("file", *path, "input document")->required();
    roundtrip->callback([&action, path] {
      action = [path] { return cmd_roundtrip(*path); };
    });
  }

  auto* frame = app.add_subcommand("frame",
                                   "build the MacLaren or Goldblatt frame");
  {
    auto path = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto dot = std::make_shared<std::string>();
    auto delta = std::make_shared<std::string>();
    auto loops = std::make_shared<bool>(false);
    frame->add_option("--kind", *kind, "construction")
        ->required()
        ->check(CLI::IsMember({"maclaren", "goldblatt"}));
    frame->add_option("file", *path, "qca or cqia document")->required();
    frame->add_option("-o,--output", *out, "frame output path (default stdout)");
    frame->add_option("--dot", *dot, "also write a DOT rendering here");
    frame->add_option("--delta", *delta, "fill nodes of Delta i,k in the DOT");
    frame->add_flag("--loops", *loops, "keep reflexive edges in the DOT");
    frame->callback([&action, &limits, path, kind, out, dot, delta, loops] {
      action = [&limits, path, kind, out, dot, delta, loops] {
        return cmd_frame(*path, *kind, *out, *dot, *delta, *loops, limits);
      };
    });
  }

  auto* filters = app.add_subcommand("filters",
                                     "enumerate the proper filters");
  {
    auto path = std::make_shared<std::string>();
    filters->add_option("file", *path, "qca or cqia document")->required();
    filters->callback([&action, &limits, path] {
      action = [&limits, path] { return cmd_filters(*path, limits); };
    });
  }

  auto* catalog = app.add_subcommand("catalog",
                                     "emit a named catalog instance");
  {
    auto name = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto as_kind = std::make_shared<std::string>();
    catalog->add_option("name", *name,
                        "boolean:K | mo:M | o6 | cylset:U:D | simple:BASE:D")
        ->required();
    catalog->add_option("-o,--output", *out, "output path (default stdout)");
    catalog->add_option("--as", *as_kind, "override the document kind");
    catalog->callback([&action, &limits, name, out, as_kind] {
      action = [&limits, name, out, as_kind] {
        return cmd_catalog(*name, *out, *as_kind, limits);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
