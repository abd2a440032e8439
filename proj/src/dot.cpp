#include "oqkit/dot.hpp"

#include "oqkit/report.hpp"

namespace oqkit {

namespace {

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3",
                          "#e7298a", "#66a61e", "#e6ab02"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string frame_to_dot(const CylindricOrthoFrame& F,
                         const DotOptions& options) {
  if (options.fill_delta) {
    const auto [i, k] = *options.fill_delta;
    if (i < 0 || i >= F.dims || k < 0 || k >= F.dims)
      throw Error(ErrorCode::ValidationError,
                  "delta selector out of range for " +
                      std::to_string(F.dims) + " dimensions");
  }

  std::string out = "digraph orthoframe {\n";
  out += "  node [shape=ellipse];\n";
  for (int x = 0; x < F.m; ++x) {
    out += "  p" + std::to_string(x) + " [label=" + quoted(F.label(x));
    if (options.fill_delta) {
      const auto [i, k] = *options.fill_delta;
      if (F.delta(i, k).test(x))
        out += ", style=filled, fillcolor=\"lightblue\"";
    }
    out += "];\n";
  }
  for (int x = 0; x < F.m; ++x)
    for (int y = x + 1; y < F.m; ++y)
      if (F.perp_at(x, y))
        out += "  p" + std::to_string(x) + " -> p" + std::to_string(y) +
               " [dir=none, style=solid];\n";
  for (int i = 0; i < F.dims; ++i) {
    const std::string color =
        kPalette[static_cast<std::size_t>(i) % std::size(kPalette)];
    for (int x = 0; x < F.m; ++x)
      for (int y = 0; y < F.m; ++y) {
        if (x == y && !options.include_loops) continue;
        if (F.rel(i, x, y))
          out += "  p" + std::to_string(x) + " -> p" + std::to_string(y) +
                 " [style=dashed, color=\"" + color + "\", label=\"R" +
                 std::to_string(i) + "\"];\n";
      }
  }
  out += "}\n";
  return out;
}

}  // namespace oqkit
