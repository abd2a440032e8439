#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oqkit/bitset.hpp"
#include "oqkit/limits.hpp"
#include "oqkit/qia.hpp"
#include "oqkit/report.hpp"

namespace oqkit {

// Kripke-style relational structure: a carrier with an orthogonality
// relation, one accessibility relation per dimension, and diagonal subsets.
// Nothing is assumed; the check_* functions verify every frame condition.
struct CylindricOrthoFrame {
  int m = 0;     // carrier size
  int dims = 0;  // dimension count
  std::vector<Bitset> perp;               // m rows of size m
  std::vector<std::vector<Bitset>> rels;  // dims x m rows of size m
  std::vector<Bitset> deltas;             // dims*dims subsets of the carrier
  std::vector<std::string> point_labels;  // optional; size m when present

  bool perp_at(int x, int y) const { return perp[x].test(y); }
  bool rel(int i, int x, int y) const { return rels[i][x].test(y); }
  const Bitset& delta(int i, int k) const {
    return deltas[static_cast<std::size_t>(i) * dims + k];
  }
  std::string label(int x) const;
};

// A filter as a subset of the algebra's elements.
using FilterSubset = Bitset;

// U-perp: the points orthogonal to every point of U. U empty gives the
// whole carrier.
Bitset perp_set(const CylindricOrthoFrame& frame, const Bitset& u);

// Orthogonality relation laws: irreflexive, symmetric.
CheckReport check_orthoframe(const CylindricOrthoFrame& frame);

// Orthoframe laws plus, for every dimension: R reflexive, R transitive, the
// inclusion R[R[{x}]'] <= R[{x}]' ("mof-inclusion"), and the equality version
// that reflexivity forces ("mof-equality"), checked separately.
CheckReport check_monadic_orthoframe(const CylindricOrthoFrame& frame);

// Monadic laws plus relation commutation ("commute"), diagonal symmetry
// ("delta-sym"), biorthogonal closure Delta = Delta'' ("delta-closed"),
// Delta_ii = X ("delta-diag"), and the composition law
// R_k[Delta_ik n Delta_kl] = Delta_il for i,l != k ("delta-compose").
CheckReport check_cylindric_orthoframe(const CylindricOrthoFrame& frame);

// psi(x) = the nonzero elements y with y.x = 1, as a subset of the algebra.
Bitset psi(const CylindricQia& c, int x);

// Frame on the nonzero elements of the algebra, in element-index order:
// x-perp-y iff x.(y.0)=1, x-R_i-y iff y.Dx=1, Delta_ik = psi(d_ik).
// Throws InvalidCqia when the structure check fails and TooLarge past the
// frame-source cap.
CylindricOrthoFrame maclaren_frame(const CylindricQia& c,
                                   const Limits& limits = {});

// Every subset that is upward closed, closed under the meet term, nonempty,
// and zero-free, in lexicographic order of the characteristic vector. In a
// finite bounded quasi-implication algebra these are exactly the principal
// filters of the nonzero elements, which is how they are produced; a
// duplicate principal filter would contradict the derived order's
// antisymmetry and throws TheoremViolation.
std::vector<FilterSubset> enumerate_proper_filters(const CylindricQia& c,
                                                   const Limits& limits = {});

// The upset of x: every y with x.y = 1. Throws ZeroGenerator for x = zero.
FilterSubset principal_filter(const CylindricQia& c, int x);

// Least filter containing `generators`, computed by closing under upward
// closure and the meet term. Returns nullopt when zero enters the closure
// (the generated filter is improper). Throws EmptyGenerator on an empty set.
std::optional<FilterSubset> filter_generated(const CylindricQia& c,
                                             const Bitset& generators);

// Frame on the proper filters: a-perp-b iff some x has x in a and x.0 in b,
// a-R_i-b iff D_i[a] is contained in b, Delta_ik = the filters containing
// d_ik. Carrier order matches enumerate_proper_filters.
CylindricOrthoFrame goldblatt_frame(const CylindricQia& c,
                                    const Limits& limits = {});

// Verifies that x -> upset(x) is a bijection from the MacLaren onto the
// Goldblatt carrier that transports perp, every R_i, and every Delta_ik.
// A toolkit-level bridge: reported, never assumed elsewhere.
CheckReport check_canonical_iso(const CylindricQia& c,
                                const Limits& limits = {});

}  // namespace oqkit
