#pragma once

#include <cstdlib>
#include <string>

#include "oqkit/report.hpp"

namespace oqkit {

// Size caps for the exhaustive loops. Every checker is at least cubic in the
// element count, so constructors refuse instances past these bounds.
struct Limits {
  int max_elems = 1024;       // lattice / quasi-implication carrier cap
  int max_base = 16;          // base-set size and frame-source algebra cap
  int max_filters = 1 << 14;  // Goldblatt carrier cap

  // Reads OQKIT_MAX_ELEMS when set; command-line flags take precedence.
  static Limits from_env() {
    Limits lim;
    if (const char* s = std::getenv("OQKIT_MAX_ELEMS")) {
      try {
        lim.max_elems = std::stoi(s);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ValidationError,
                    "OQKIT_MAX_ELEMS is not an integer: " + std::string(s));
      }
      if (lim.max_elems < 1)
        throw Error(ErrorCode::ValidationError,
                    "OQKIT_MAX_ELEMS must be positive");
    }
    return lim;
  }
};

}  // namespace oqkit
