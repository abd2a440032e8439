#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oqkit/report.hpp"

namespace oqkit {

// Finite bounded lattice with an orthocomplementation, fully tabulated.
// Elements are dense indices 0..n-1. The order relation is the source of
// truth; the meet/join tables are derived from it at construction time and
// revalidated by check_ortholattice.
struct Ortholattice {
  int n = 0;
  std::vector<std::uint8_t> order;  // row-major, order[x*n+y] != 0 iff x <= y
  std::vector<int> meets;           // row-major greatest lower bounds
  std::vector<int> joins;           // row-major least upper bounds
  std::vector<int> ocomp;           // x -> orthocomplement of x
  int bot = 0;
  int top = 0;
  std::vector<std::string> labels;  // optional; size n when present

  bool leq(int x, int y) const {
    return order[static_cast<std::size_t>(x) * n + y] != 0;
  }
  int meet(int x, int y) const {
    return meets[static_cast<std::size_t>(x) * n + y];
  }
  int join(int x, int y) const {
    return joins[static_cast<std::size_t>(x) * n + y];
  }
  int comp(int x) const { return ocomp[static_cast<std::size_t>(x)]; }
  std::string label(int x) const;
};

// Assembles a lattice from its order relation, deriving the meet/join tables.
// Derivation is best effort on a malformed order (check_ortholattice reports
// the defects); out-of-range entries or size mismatches throw MalformedTable.
Ortholattice lattice_from_order(int n, std::vector<std::uint8_t> order,
                                std::vector<int> ocomp, int bot, int top,
                                std::vector<std::string> labels = {});

// Throws MalformedTable when any table has the wrong shape or an entry out of
// range. Used by every checker before it starts indexing.
void validate_lattice_shape(const Ortholattice& lattice);

// Exhaustively verifies: partial order laws, bounds, meet/join tables against
// the order, and the orthocomplementation laws 2(a) x^x'=0 and xvx'=1,
// 2(b) antitone, 2(c) involutive.
CheckReport check_ortholattice(const Ortholattice& lattice);

// Verifies the orthomodular law in both of its standard formulations, the
// quasi-equation x<=y => y = xv(x'^y) and the equation xvy = xv(x'^(xvy)),
// over all pairs. The two verdicts must agree; a disagreement throws
// InternalInconsistency since it can only come from a bug here.
// Requires check_ortholattice to pass (throws NotOrtholattice otherwise).
CheckReport check_orthomodular(const Ortholattice& lattice);

}  // namespace oqkit
