#pragma once

#include "oqkit/limits.hpp"
#include "oqkit/qca.hpp"

namespace oqkit {

// Powerset lattice of a set with `atoms` elements; 2^atoms lattice elements.
// Distributive, hence orthomodular. Throws TooLarge past the element cap.
Ortholattice boolean_algebra(int atoms, const Limits& limits = {});

// MO_m: bottom, top, and `pairs` complementary pairs of incomparable middle
// elements. Orthomodular for every m; non-distributive from m = 2 on.
Ortholattice mo(int pairs, const Limits& limits = {});

// The six-element benzene ring 0 < a < b < 1, 0 < b' < a' < 1: an
// ortholattice that fails the orthomodular law at (a, b).
Ortholattice o6();

// The quantifier that fixes bottom and sends everything else to top.
QuantifierMap simple_quantifier(const Ortholattice& lattice);

// Classical cylindric set algebra: the powerset of the function space
// base^dims, with coordinatewise cylindrification quantifiers and the
// diagonal elements {f : f(i) = f(k)}. Throws TooLarge when the function
// space exceeds the base cap or the powerset exceeds the element cap.
QuantumCylindricAlgebra cylindric_set_algebra(int base, int dims,
                                              const Limits& limits = {});

// Equips an orthomodular lattice with the simple quantifier in every
// dimension and all diagonal elements equal to top. Throws NotOrthomodular
// when the input fails the orthomodularity check.
QuantumCylindricAlgebra with_simple_quantifiers(const Ortholattice& lattice,
                                                int dims);

}  // namespace oqkit
