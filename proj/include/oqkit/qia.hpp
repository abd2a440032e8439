#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oqkit/qca.hpp"
#include "oqkit/report.hpp"

namespace oqkit {

// A magma presented as a dot-table. `zero` marks the bottom constant of a
// bounded quasi-implication algebra; when absent the table is unbounded.
struct QiaTable {
  int n = 0;
  std::vector<int> table;  // row-major, table[x*n+y] = x . y
  std::optional<int> zero;
  std::vector<std::string> labels;  // optional; size n when present

  int dot(int x, int y) const {
    return table[static_cast<std::size_t>(x) * n + y];
  }
  std::string label(int x) const;
};

// The order induced by the dot operation: x precedes y iff x.y is the unit.
struct DerivedOrder {
  int n = 0;
  std::vector<std::uint8_t> order;

  bool leq(int x, int y) const {
    return order[static_cast<std::size_t>(x) * n + y] != 0;
  }
};

// Bounded quasi-implication algebra with one diamond per dimension and a
// matrix of diagonal constants.
struct CylindricQia {
  QiaTable qia;  // must be bounded
  int dims = 0;
  std::vector<std::vector<int>> diamonds;  // one map per dimension
  std::vector<int> diag;                   // dims*dims, row-major

  int dia(int i, int x) const {
    return diamonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  int d(int i, int k) const {
    return diag[static_cast<std::size_t>(i) * dims + k];
  }
};

// Exhaustively checks the three quasi-implication axioms
//   1. (x.y).x = x
//   2. (x.y).(x.z) = (y.x).(y.z)
//   3. ((x.y).(y.x)).x = ((y.x).(x.y)).y
// plus, when a zero is declared, the bottom law 0.x = unit ("bounded").
CheckReport check_qia(const QiaTable& q);

// Oracle for the checker and the table builders: identities that are theorems
// of the axioms, so they must hold whenever check_qia passes. A violation
// throws TheoremViolation since it can only indicate a bug. Throws
// PreconditionFailed when check_qia does not pass.
CheckReport check_derived_identities(const QiaTable& q);

// The common value of x.x. Throws NotConstant when the table disagrees with
// itself (which implies check_qia fails).
int unit_of(const QiaTable& q);

// Builds x<=y iff x.y=unit and asserts the partial-order laws, maximality of
// the unit, and minimality of zero when present; a failure throws
// OrderLawViolation.
DerivedOrder derived_order(const QiaTable& q);

// Lattice term operations of a bounded table (callers must have validated
// check_qia): complement x.0, join ((x.y).(y.x)).x, and the short meet term
// ((x.y).(x.0)).0. qia_comp and qia_meet throw Unbounded without a zero.
int qia_comp(const QiaTable& q, int x);
int qia_join(const QiaTable& q, int x, int y);
int qia_meet(const QiaTable& q, int x, int y);

// Checks the monadic diamond laws literally as stated:
//   2(a) DDx.Dx = 1 and x.Dx = 1
//   2(b) D(Dx.0) = Dx.0 and D0 = 0
//   2(c) D(((x.0).(y.0)).x) = ((Dx.0).(Dy.0)).Dx
// and additionally records idempotence and monotonicity of the diamond under
// "derived-*" ids; those are consequences, so failing them while the axioms
// pass signals a bug.
CheckReport check_monadic_qia(const QiaTable& q, const QuantifierMap& diamond);

// Full structure check: base axioms (prefixed "qia."), each diamond
// (prefixed "diamond_<i>."), diamond commutation ("2"), diagonal symmetry
// and unit ("3"), and the composition law
// D_k(((d_ik.d_kl).(d_ik.0)).0) = d_il for i,l != k ("4").
CheckReport check_cylindric_qia(const CylindricQia& c);

}  // namespace oqkit
