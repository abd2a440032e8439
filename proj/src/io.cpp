#include "oqkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oqkit/version.hpp"

namespace oqkit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& origin, const std::string& msg) {
  throw Error(ErrorCode::ParseError, origin + ": " + msg);
}

[[noreturn]] void validation_fail(const std::string& origin,
                                  const std::string& msg) {
  throw Error(ErrorCode::ValidationError, origin + ": " + msg);
}

struct Reader {
  const json& j;
  const std::string& origin;
  std::vector<std::string> known;

  const json& field(const std::string& key) {
    known.push_back(key);
    if (!j.contains(key))
      validation_fail(origin, "missing field \"" + key + "\"");
    return j.at(key);
  }

  bool has(const std::string& key) {
    known.push_back(key);
    return j.contains(key);
  }

  int get_int(const std::string& key) {
    const json& v = field(key);
    if (!v.is_number_integer())
      validation_fail(origin, "field \"" + key + "\" must be an integer");
    return v.get<int>();
  }

  int get_elem(const std::string& key, int n) {
    const int x = get_int(key);
    if (x < 0 || x >= n)
      validation_fail(origin, "field \"" + key + "\" out of range");
    return x;
  }

  // Matrix of small integers with fixed row count and width.
  std::vector<int> get_matrix(const json& v, const std::string& key, int rows,
                              int cols, int max_value) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(rows))
      parse_fail(origin, "field \"" + key + "\" must be an array of " +
                             std::to_string(rows) + " rows");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (const json& row : v) {
      if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
        parse_fail(origin, "field \"" + key + "\" row must have " +
                               std::to_string(cols) + " entries");
      for (const json& cell : row) {
        if (!cell.is_number_integer())
          parse_fail(origin, "field \"" + key + "\" entry must be an integer");
        const int x = cell.get<int>();
        if (x < 0 || x > max_value)
          validation_fail(origin,
                          "field \"" + key + "\" entry out of range");
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<int> get_matrix(const std::string& key, int rows, int cols,
                              int max_value) {
    return get_matrix(field(key), key, rows, cols, max_value);
  }

  std::vector<int> get_int_array(const json& v, const std::string& key,
                                 int len, int max_value) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(len))
      parse_fail(origin, "field \"" + key + "\" must be an array of length " +
                             std::to_string(len));
    std::vector<int> out;
    out.reserve(len);
    for (const json& cell : v) {
      if (!cell.is_number_integer())
        parse_fail(origin, "field \"" + key + "\" entry must be an integer");
      const int x = cell.get<int>();
      if (x < 0 || x > max_value)
        validation_fail(origin, "field \"" + key + "\" entry out of range");
      out.push_back(x);
    }
    return out;
  }

  std::vector<int> get_int_array(const std::string& key, int len,
                                 int max_value) {
    return get_int_array(field(key), key, len, max_value);
  }

  std::vector<std::string> get_labels(int n) {
    std::vector<std::string> out;
    if (!has("labels")) return out;
    const json& v = j.at("labels");
    if (!v.is_array() || v.size() != static_cast<std::size_t>(n))
      parse_fail(origin, "field \"labels\" must be an array of length " +
                             std::to_string(n));
    for (const json& cell : v) {
      if (!cell.is_string())
        parse_fail(origin, "field \"labels\" entry must be a string");
      out.push_back(cell.get<std::string>());
    }
    return out;
  }

  void reject_unknown_keys() {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = false;
      for (const std::string& k : known)
        if (k == it.key()) ok = true;
      if (!ok)
        validation_fail(origin, "unexpected field \"" + it.key() + "\"");
    }
  }
};

Ortholattice read_lattice(Reader& r) {
  const int n = r.get_int("n");
  if (n < 1) validation_fail(r.origin, "field \"n\" must be >= 1");
  std::vector<int> leq = r.get_matrix("leq", n, n, 1);
  std::vector<std::uint8_t> order(leq.begin(), leq.end());
  std::vector<int> ocomp = r.get_int_array("ocomp", n, n - 1);
  const int bot = r.get_elem("bot", n);
  const int top = r.get_elem("top", n);
  return lattice_from_order(n, std::move(order), std::move(ocomp), bot, top,
                            r.get_labels(n));
}

void read_quantifier_block(Reader& r, const char* maps_key, int n, int dims,
                           std::vector<std::vector<int>>& maps,
                           std::vector<int>& diag) {
  const json& v = r.field(maps_key);
  if (!v.is_array() || v.size() != static_cast<std::size_t>(dims))
    parse_fail(r.origin, std::string("field \"") + maps_key +
                             "\" must have one array per dimension");
  for (const json& row : v)
    maps.push_back(r.get_int_array(row, maps_key, n, n - 1));
  diag = r.get_matrix("diag", dims, dims, n - 1);
}

QuantumCylindricAlgebra read_qca(Reader& r) {
  QuantumCylindricAlgebra A;
  A.lattice = read_lattice(r);
  A.dims = r.get_int("dims");
  if (A.dims < 0) validation_fail(r.origin, "field \"dims\" must be >= 0");
  read_quantifier_block(r, "exists", A.lattice.n, A.dims, A.quantifiers,
                        A.diag);
  return A;
}

QiaTable read_qia(Reader& r) {
  QiaTable q;
  q.n = r.get_int("n");
  if (q.n < 1) validation_fail(r.origin, "field \"n\" must be >= 1");
  q.table = r.get_matrix("dot", q.n, q.n, q.n - 1);
  const json& z = r.field("zero");
  if (z.is_null()) {
    q.zero.reset();
  } else if (z.is_number_integer()) {
    const int v = z.get<int>();
    if (v < 0 || v >= q.n)
      validation_fail(r.origin, "field \"zero\" out of range");
    q.zero = v;
  } else {
    parse_fail(r.origin, "field \"zero\" must be an integer or null");
  }
  q.labels = r.get_labels(q.n);
  return q;
}

CylindricQia read_cqia(Reader& r) {
  CylindricQia c;
  c.qia = read_qia(r);
  if (!c.qia.zero)
    validation_fail(r.origin,
                    "field \"zero\": a cylindric table must be bounded");
  c.dims = r.get_int("dims");
  if (c.dims < 0) validation_fail(r.origin, "field \"dims\" must be >= 0");
  read_quantifier_block(r, "diamonds", c.qia.n, c.dims, c.diamonds, c.diag);
  return c;
}

std::vector<int> read_index_list(Reader& r, const json& v,
                                 const std::string& key, int max_value) {
  if (!v.is_array())
    parse_fail(r.origin, "field \"" + key + "\" entry must be a list");
  return r.get_int_array(v, key, static_cast<int>(v.size()), max_value);
}

std::vector<Bitset> read_adjacency(Reader& r, const json& v,
                                   const std::string& key, int m) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(m))
    parse_fail(r.origin, "field \"" + key + "\" must have one list per point");
  std::vector<Bitset> rows;
  rows.reserve(m);
  for (const json& row : v)
    rows.push_back(Bitset::from_indices(m, read_index_list(r, row, key, m - 1)));
  return rows;
}

CylindricOrthoFrame read_frame(Reader& r) {
  CylindricOrthoFrame F;
  F.m = r.get_int("n");
  if (F.m < 0) validation_fail(r.origin, "field \"n\" must be >= 0");
  F.dims = r.get_int("dims");
  if (F.dims < 0) validation_fail(r.origin, "field \"dims\" must be >= 0");
  F.perp = read_adjacency(r, r.field("perp"), "perp", F.m);
  const json& rels = r.field("rels");
  if (!rels.is_array() || rels.size() != static_cast<std::size_t>(F.dims))
    parse_fail(r.origin, "field \"rels\" must have one relation per dimension");
  for (const json& rel : rels)
    F.rels.push_back(read_adjacency(r, rel, "rels", F.m));
  const json& deltas = r.field("deltas");
  if (!deltas.is_array() || deltas.size() != static_cast<std::size_t>(F.dims))
    parse_fail(r.origin, "field \"deltas\" must be dims x dims");
  for (const json& row : deltas) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(F.dims))
      parse_fail(r.origin, "field \"deltas\" must be dims x dims");
    for (const json& cell : row)
      F.deltas.push_back(
          Bitset::from_indices(F.m, read_index_list(r, cell, "deltas", F.m - 1)));
  }
  F.point_labels = r.get_labels(F.m);
  return F;
}

json matrix_json(const std::vector<int>& flat, int rows, int cols) {
  json out = json::array();
  for (int x = 0; x < rows; ++x) {
    json row = json::array();
    for (int y = 0; y < cols; ++y)
      row.push_back(flat[static_cast<std::size_t>(x) * cols + y]);
    out.push_back(std::move(row));
  }
  return out;
}

json order_json(const std::vector<std::uint8_t>& flat, int n) {
  json out = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y)
      row.push_back(static_cast<int>(flat[static_cast<std::size_t>(x) * n + y]));
    out.push_back(std::move(row));
  }
  return out;
}

void write_lattice(json& out, const Ortholattice& L) {
  out["n"] = L.n;
  out["leq"] = order_json(L.order, L.n);
  out["ocomp"] = L.ocomp;
  out["bot"] = L.bot;
  out["top"] = L.top;
  if (!L.labels.empty()) out["labels"] = L.labels;
}

void write_qia(json& out, const QiaTable& q) {
  out["n"] = q.n;
  out["dot"] = matrix_json(q.table, q.n, q.n);
  if (q.zero)
    out["zero"] = *q.zero;
  else
    out["zero"] = nullptr;
  if (!q.labels.empty()) out["labels"] = q.labels;
}

json adjacency_json(const std::vector<Bitset>& rows) {
  json out = json::array();
  for (const Bitset& r : rows) out.push_back(r.to_indices());
  return out;
}

}  // namespace

const char* kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::ol: return "ol";
    case DocKind::oml: return "oml";
    case DocKind::qca: return "qca";
    case DocKind::qia: return "qia";
    case DocKind::cqia: return "cqia";
    case DocKind::frame: return "frame";
  }
  return "?";
}

DocKind kind_from_string(std::string_view name) {
  if (name == "ol") return DocKind::ol;
  if (name == "oml") return DocKind::oml;
  if (name == "qca") return DocKind::qca;
  if (name == "qia") return DocKind::qia;
  if (name == "cqia") return DocKind::cqia;
  if (name == "frame") return DocKind::frame;
  throw Error(ErrorCode::ValidationError,
              "unknown document kind \"" + std::string(name) + "\"");
}

AlgebraDocument parse_document_text(const std::string& text,
                                    const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(origin, e.what());
  }
  if (!j.is_object()) parse_fail(origin, "document must be a JSON object");

  Reader r{j, origin, {}};
  const json& kind_field = r.field("kind");
  if (!kind_field.is_string())
    parse_fail(origin, "field \"kind\" must be a string");
  const DocKind kind = kind_from_string(kind_field.get<std::string>());

  AlgebraDocument doc;
  doc.kind = kind;
  switch (kind) {
    case DocKind::ol:
    case DocKind::oml:
      doc.payload = read_lattice(r);
      break;
    case DocKind::qca:
      doc.payload = read_qca(r);
      break;
    case DocKind::qia:
      doc.payload = read_qia(r);
      break;
    case DocKind::cqia:
      doc.payload = read_cqia(r);
      break;
    case DocKind::frame:
      doc.payload = read_frame(r);
      break;
  }
  r.reject_unknown_keys();
  return doc;
}

AlgebraDocument parse_document(const std::string& path) {
  return parse_document_text(read_file(path), path);
}

std::string serialize_document(const AlgebraDocument& doc) {
  json out;
  out["kind"] = kind_name(doc.kind);
  switch (doc.kind) {
    case DocKind::ol:
    case DocKind::oml:
      write_lattice(out, std::get<Ortholattice>(doc.payload));
      break;
    case DocKind::qca: {
      const auto& A = std::get<QuantumCylindricAlgebra>(doc.payload);
      write_lattice(out, A.lattice);
      out["dims"] = A.dims;
      json ex = json::array();
      for (const QuantifierMap& q : A.quantifiers) ex.push_back(q);
      out["exists"] = std::move(ex);
      out["diag"] = matrix_json(A.diag, A.dims, A.dims);
      break;
    }
    case DocKind::qia:
      write_qia(out, std::get<QiaTable>(doc.payload));
      break;
    case DocKind::cqia: {
      const auto& c = std::get<CylindricQia>(doc.payload);
      write_qia(out, c.qia);
      out["dims"] = c.dims;
      json dia = json::array();
      for (const auto& d : c.diamonds) dia.push_back(d);
      out["diamonds"] = std::move(dia);
      out["diag"] = matrix_json(c.diag, c.dims, c.dims);
      break;
    }
    case DocKind::frame: {
      const auto& F = std::get<CylindricOrthoFrame>(doc.payload);
      out["n"] = F.m;
      out["dims"] = F.dims;
      out["perp"] = adjacency_json(F.perp);
      json rels = json::array();
      for (const auto& rel : F.rels) rels.push_back(adjacency_json(rel));
      out["rels"] = std::move(rels);
      json deltas = json::array();
      for (int i = 0; i < F.dims; ++i) {
        json row = json::array();
        for (int k = 0; k < F.dims; ++k)
          row.push_back(F.delta(i, k).to_indices());
        deltas.push_back(std::move(row));
      }
      out["deltas"] = std::move(deltas);
      if (!F.point_labels.empty()) out["labels"] = F.point_labels;
      break;
    }
  }
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::IoError, "cannot rename " + tmp + " to " + path);
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::vector<NamedCheck> run_checks(const AlgebraDocument& doc) {
  std::vector<NamedCheck> out;
  switch (doc.kind) {
    case DocKind::ol: {
      const auto& L = std::get<Ortholattice>(doc.payload);
      out.push_back({"ortholattice", check_ortholattice(L)});
      break;
    }
    case DocKind::oml: {
      const auto& L = std::get<Ortholattice>(doc.payload);
      out.push_back({"ortholattice", check_ortholattice(L)});
      if (out.back().report.passed())
        out.push_back({"orthomodular", check_orthomodular(L)});
      break;
    }
    case DocKind::qca:
      out.push_back(
          {"qca", check_qca(std::get<QuantumCylindricAlgebra>(doc.payload))});
      break;
    case DocKind::qia: {
      const auto& q = std::get<QiaTable>(doc.payload);
      out.push_back({"qia", check_qia(q)});
      if (out.back().report.passed())
        out.push_back({"derived-identities", check_derived_identities(q)});
      break;
    }
    case DocKind::cqia:
      out.push_back(
          {"cqia", check_cylindric_qia(std::get<CylindricQia>(doc.payload))});
      break;
    case DocKind::frame:
      out.push_back({"cylindric-orthoframe",
                     check_cylindric_orthoframe(
                         std::get<CylindricOrthoFrame>(doc.payload))});
      break;
  }
  return out;
}

bool all_passed(const std::vector<NamedCheck>& checks) {
  for (const NamedCheck& c : checks)
    if (!c.report.passed()) return false;
  return true;
}

std::string render_report_text(const std::vector<NamedCheck>& checks) {
  std::string out;
  for (const NamedCheck& c : checks) {
    out += "check " + c.name + ": ";
    if (c.report.passed()) {
      out += "ok\n";
      continue;
    }
    out += "FAIL (" + std::to_string(c.report.violations.size()) +
           " violated axiom" + (c.report.violations.size() == 1 ? "" : "s") +
           ")\n";
    for (const Violation& v : c.report.violations) {
      out += "  " + v.axiom + ": witness (";
      for (std::size_t i = 0; i < v.witness_labels.size(); ++i) {
        if (i) out += ", ";
        out += v.witness_labels[i];
      }
      out += ")\n";
    }
  }
  out += all_passed(checks) ? "OK\n" : "FAIL\n";
  return out;
}

std::string report_document_json(const std::string& input_path,
                                 const std::string& input_bytes, DocKind kind,
                                 const std::vector<NamedCheck>& checks) {
  json out;
  out["tool"] = kToolName;
  out["version"] = kVersion;
  out["input"] = input_path;
  out["input_digest"] = input_digest(input_bytes);
  out["kind"] = kind_name(kind);
  out["passed"] = all_passed(checks);
  json jchecks = json::array();
  for (const NamedCheck& c : checks) {
    json jc;
    jc["check"] = c.name;
    jc["passed"] = c.report.passed();
    json jv = json::array();
    for (const Violation& v : c.report.violations) {
      json one;
      one["axiom"] = v.axiom;
      one["witness"] = v.witness_labels;
      one["witness_indices"] = v.witness;
      jv.push_back(std::move(one));
    }
    jc["violations"] = std::move(jv);
    jchecks.push_back(std::move(jc));
  }
  out["checks"] = std::move(jchecks);
  return out.dump(2) + "\n";
}

}  // namespace oqkit
