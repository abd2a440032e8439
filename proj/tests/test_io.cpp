#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "oqkit/catalog.hpp"
#include "oqkit/dot.hpp"
#include "oqkit/frames.hpp"
#include "oqkit/io.hpp"
#include "oqkit/transforms.hpp"

using namespace oqkit;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the CLI binary and captures stdout (stderr is left on the test log).
CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(OQKIT_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("oqkit-test-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

AlgebraDocument doc_of(DocKind kind, auto payload) {
  AlgebraDocument d;
  d.kind = kind;
  d.payload = std::move(payload);
  return d;
}

}  // namespace

TEST_CASE("serialization is a fixed point of parse") {
  const QuantumCylindricAlgebra qca = with_simple_quantifiers(mo(2), 2);
  const CylindricQia cqia = qca_to_cqia(qca);
  const std::vector<AlgebraDocument> docs = {
      doc_of(DocKind::oml, mo(2)),
      doc_of(DocKind::ol, o6()),
      doc_of(DocKind::qca, qca),
      doc_of(DocKind::cqia, cqia),
      doc_of(DocKind::frame, maclaren_frame(cqia)),
      doc_of(DocKind::frame, goldblatt_frame(cqia)),
  };
  for (const AlgebraDocument& doc : docs) {
    const std::string bytes = serialize_document(doc);
    CHECK(serialize_document(parse_document_text(bytes, "mem")) == bytes);
  }
}

TEST_CASE("qia documents may be unbounded") {
  const std::string text = R"({"dot": [[1, 1], [0, 1]], "kind": "qia", "n": 2,
                               "zero": null})";
  const AlgebraDocument doc = parse_document_text(text, "mem");
  const QiaTable& q = std::get<QiaTable>(doc.payload);
  CHECK_FALSE(q.zero.has_value());
  CHECK(check_qia(q).passed());
  const std::string canon = serialize_document(doc);
  CHECK(canon.find("\"zero\": null") != std::string::npos);
}

TEST_CASE("parse and validation failures name the problem") {
  auto expect_code = [](const std::string& text, ErrorCode code) {
    try {
      (void)parse_document_text(text, "mem");
      FAIL("expected a parse failure");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code("{ not json", ErrorCode::ParseError);
  expect_code(R"([1, 2])", ErrorCode::ParseError);
  expect_code(R"({"kind": "nonsense"})", ErrorCode::ValidationError);
  // ocomp entry out of range
  expect_code(
      R"({"bot": 0, "kind": "oml", "leq": [[1, 1], [0, 1]],
          "n": 2, "ocomp": [7, 0], "top": 1})",
      ErrorCode::ValidationError);
  // non-square relation
  expect_code(
      R"({"bot": 0, "kind": "oml", "leq": [[1, 1]],
          "n": 2, "ocomp": [1, 0], "top": 1})",
      ErrorCode::ParseError);
  // unexpected key
  expect_code(
      R"({"bot": 0, "kind": "oml", "leq": [[1, 1], [0, 1]],
          "n": 2, "ocomp": [1, 0], "top": 1, "meet": []})",
      ErrorCode::ValidationError);
  // cqia must be bounded
  expect_code(
      R"({"diag": [[0]], "diamonds": [[0, 1]], "dims": 1,
          "dot": [[1, 1], [0, 1]], "kind": "cqia", "n": 2, "zero": null})",
      ErrorCode::ValidationError);
  // frame perp entry out of range
  expect_code(
      R"({"deltas": [[[0, 1]]], "dims": 1, "kind": "frame", "n": 2,
          "perp": [[5], []], "rels": [[[0], [1]]]})",
      ErrorCode::ValidationError);
}

TEST_CASE("missing files surface as IoError") {
  try {
    (void)parse_document(std::string("/nonexistent/oqkit.json"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("report documents are stable and carry the digest") {
  const AlgebraDocument doc = doc_of(DocKind::oml, mo(2));
  const std::string bytes = serialize_document(doc);
  const std::string r1 =
      report_document_json("input.json", bytes, doc.kind, run_checks(doc));
  const std::string r2 =
      report_document_json("input.json", bytes, doc.kind, run_checks(doc));
  CHECK(r1 == r2);
  CHECK(r1.find("fnv1a64:") != std::string::npos);
  CHECK(r1.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("dot export is deterministic and honors options") {
  const CylindricQia c = qca_to_cqia(with_simple_quantifiers(boolean_algebra(2), 2));
  const CylindricOrthoFrame F = maclaren_frame(c);
  const std::string d1 = frame_to_dot(F);
  CHECK(d1 == frame_to_dot(F));
  // exactly one orthogonality edge in the B2 frame: a -- b
  CHECK(d1.find("p0 -> p1 [dir=none") != std::string::npos);
  CHECK(d1.find("p0 -> p2 [dir=none") == std::string::npos);
  CHECK(d1.find("p1 -> p2 [dir=none") == std::string::npos);

  DotOptions opts;
  opts.fill_delta = {{0, 1}};
  CHECK(frame_to_dot(F, opts).find("fillcolor") != std::string::npos);
  CHECK(d1.find("p0 -> p0") == std::string::npos);  // loops suppressed
  opts.include_loops = true;
  CHECK(frame_to_dot(F, opts).find("p0 -> p0") != std::string::npos);

  CylindricOrthoFrame empty_dims = F;
  empty_dims.dims = 0;
  empty_dims.rels.clear();
  empty_dims.deltas.clear();
  CHECK(frame_to_dot(empty_dims).find("dashed") == std::string::npos);
}

TEST_CASE("shipped data files are canonical") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(OQKIT_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const std::string bytes = slurp(entry.path());
    const AlgebraDocument doc =
        parse_document_text(bytes, entry.path().string());
    CHECK(serialize_document(doc) == bytes);
  }
  CHECK(seen > 0);
}

TEST_CASE("cli check exit codes and reports") {
  const fs::path dir = temp_dir();
  REQUIRE(run_cli("catalog mo:2 -o " + (dir / "mo2.json").string()).code == 0);
  REQUIRE(run_cli("catalog o6 --as oml -o " + (dir / "o6m.json").string())
              .code == 0);

  CHECK(run_cli("check " + (dir / "mo2.json").string()).code == 0);
  const CliResult bad = run_cli("check " + (dir / "o6m.json").string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("oml-quasi: witness (a, b)") != std::string::npos);

  CHECK(run_cli("check " + (dir / "missing.json").string()).code == 2);
  CHECK(run_cli("convert --to qia " + (dir / "missing.json").string()).code ==
        2);
  CHECK(run_cli("frob").code == 2);

  const fs::path report = dir / "report.json";
  CHECK(run_cli("report " + (dir / "o6m.json").string() + " --json " +
                report.string())
            .code == 1);
  const std::string r = slurp(report);
  CHECK(r.find("\"passed\": false") != std::string::npos);
  CHECK(r.find("oml-quasi") != std::string::npos);
}

TEST_CASE("cli conversion round trip is byte-identical") {
  const fs::path dir = temp_dir();
  const fs::path qca = dir / "cylset.json";
  const fs::path cqia = dir / "cylset_cqia.json";
  const fs::path back = dir / "cylset_back.json";
  REQUIRE(run_cli("catalog cylset:2:2 -o " + qca.string()).code == 0);
  REQUIRE(run_cli("convert --to qia " + qca.string() + " -o " + cqia.string())
              .code == 0);
  REQUIRE(run_cli("convert --to qca " + cqia.string() + " -o " + back.string())
              .code == 0);
  CHECK(slurp(qca) == slurp(back));

  CHECK(run_cli("roundtrip " + qca.string()).code == 0);
  CHECK(run_cli("roundtrip " + cqia.string()).code == 0);

  // catalog output is deterministic
  const CliResult again = run_cli("catalog cylset:2:2");
  CHECK(again.out == slurp(qca));
}

TEST_CASE("cli surfaces axiom violations from conversions") {
  const fs::path dir = temp_dir();
  const fs::path bad = dir / "bad_qca.json";
  AlgebraDocument doc;
  doc.kind = DocKind::qca;
  QuantumCylindricAlgebra A = cylindric_set_algebra(2, 2);
  A.diag[1] = A.lattice.bot;
  doc.payload = A;
  spit(bad, serialize_document(doc));

  CHECK(run_cli("check " + bad.string()).code == 1);
  CHECK(run_cli("convert --to qia " + bad.string()).code == 1);
  CHECK(run_cli("roundtrip " + bad.string()).code == 1);
}

TEST_CASE("cli frame and filters commands") {
  const fs::path dir = temp_dir();
  const fs::path qca = dir / "b2.json";
  const fs::path frame = dir / "b2_frame.json";
  const fs::path dot = dir / "b2_frame.dot";
  REQUIRE(run_cli("catalog simple:boolean:2:2 -o " + qca.string()).code == 0);
  CHECK(run_cli("frame --kind goldblatt " + qca.string() + " -o " +
                frame.string() + " --dot " + dot.string() + " --delta 0,1")
            .code == 0);
  CHECK(run_cli("check " + frame.string()).code == 0);
  CHECK(slurp(dot).find("digraph") != std::string::npos);

  const CliResult filters = run_cli("filters " + qca.string());
  CHECK(filters.code == 0);
  CHECK(filters.out.find("3 proper filters") != std::string::npos);

  CHECK(run_cli("frame --kind maclaren " + qca.string() + " --dot " +
                dot.string() + " --delta 9,9 -o " + frame.string())
            .code == 2);
}

TEST_CASE("element caps are adjustable per invocation") {
  CHECK(run_cli("catalog boolean:6").code == 0);
  CHECK(run_cli("--max-elems 32 catalog boolean:6").code == 2);
  CHECK(run_cli("catalog boolean:6", "OQKIT_MAX_ELEMS=32").code == 2);
  CHECK(run_cli("catalog boolean:6", "OQKIT_MAX_ELEMS=128").code == 0);
  const fs::path dir = temp_dir();
  const fs::path mo2 = dir / "caps_mo2.json";
  REQUIRE(run_cli("catalog simple:mo:2:2 -o " + mo2.string()).code == 0);
  CHECK(run_cli("--max-base 4 frame --kind maclaren " + mo2.string()).code ==
        2);
  CHECK(run_cli("frame --kind maclaren " + mo2.string()).code == 0);
}
