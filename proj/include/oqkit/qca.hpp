#pragma once

#include <vector>

#include "oqkit/lattice.hpp"
#include "oqkit/report.hpp"

namespace oqkit {

// A quantifier as a plain table: x -> exists(x).
using QuantifierMap = std::vector<int>;

// Orthomodular lattice with pairwise commuting quantifiers, one per
// dimension, and a matrix of diagonal elements. The dimension set is always
// 0..dims-1.
struct QuantumCylindricAlgebra {
  Ortholattice lattice;
  int dims = 0;
  std::vector<QuantifierMap> quantifiers;  // one map per dimension
  std::vector<int> diag;                   // dims*dims, row-major

  int ex(int i, int x) const {
    return quantifiers[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  int delta(int i, int k) const {
    return diag[static_cast<std::size_t>(i) * dims + k];
  }
};

// Exhaustively verifies the five quantifier laws against the host lattice:
// 2(a) E0=0, 2(b) x<=Ex, 2(c) E(xvy)=ExvEy, 2(d) EEx=Ex, 2(e) E(Ex)'=(Ex)'.
CheckReport check_quantifier(const Ortholattice& lattice,
                             const QuantifierMap& q);

// Full structure check: lattice laws (prefixed "lattice."), orthomodularity,
// every quantifier (prefixed "exists_<i>."), pairwise commutation ("3"),
// diagonal symmetry and unit ("4(a)"), and the composition law
// E_k(d_ik ^ d_kl) = d_il for i,l != k ("4(b)").
CheckReport check_qca(const QuantumCylindricAlgebra& algebra);

}  // namespace oqkit
