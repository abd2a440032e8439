#pragma once

#include <optional>
#include <string>
#include <utility>

#include "oqkit/frames.hpp"

namespace oqkit {

struct DotOptions {
  bool include_loops = false;  // reflexive R edges are suppressed by default
  std::optional<std::pair<int, int>> fill_delta;  // highlight Delta_{i,k}
};

// Deterministic DOT rendering of a frame: solid undirected edges for the
// orthogonality relation (each unordered pair once), one dashed color per
// dimension for the accessibility relations, and optional node fill for a
// selected diagonal subset.
std::string frame_to_dot(const CylindricOrthoFrame& frame,
                         const DotOptions& options = {});

}  // namespace oqkit
