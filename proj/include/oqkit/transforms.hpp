#pragma once

#include <string>
#include <vector>

#include "oqkit/qca.hpp"
#include "oqkit/qia.hpp"
#include "oqkit/report.hpp"

namespace oqkit {

// The four classical candidates for an implication connective on an
// ortholattice.
enum class ImplicationKind { classical, sasaki, dishkant, kalmbach };

const char* implication_name(ImplicationKind kind);

// Evaluates the named implication polynomial from the lattice tables:
//   classical  x' v y
//   sasaki     x' v (x ^ y)
//   dishkant   (x' ^ y') v y
//   kalmbach   (x ^ y) v (x' ^ y) v (x' ^ y')
int implication(const Ortholattice& lattice, ImplicationKind kind, int x,
                int y);

// Checks the three minimal implication conditions over all pairs:
// law of implication (x<=y => x.y=1), modus ponens (x^(x.y)<=y), and
// modus tollens (y'^(x.y)<=x').
CheckReport check_hardegree(const Ortholattice& lattice, ImplicationKind kind);

// x ^ y = sasaki(sasaki(x,y), x')' over all pairs; an identity of
// orthomodular lattices that can fail below orthomodularity.
CheckReport check_useful_lemma(const Ortholattice& lattice);

// Converts a quantum cylindric algebra into the cylindric quasi-implication
// algebra with the sasaki dot-table, zero = bot, and diamonds/diagonals
// carried over verbatim. Throws InvalidQca when check_qca fails.
CylindricQia qca_to_cqia(const QuantumCylindricAlgebra& algebra);

// The converse construction: lattice order from the derived order, lattice
// operations from the term operations, quantifiers = diamonds, diagonals
// carried over. Throws InvalidCqia when check_cylindric_qia fails.
QuantumCylindricAlgebra cqia_to_qca(const CylindricQia& c);

// A candidate homomorphism as a plain element map.
struct HomMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> map;
};

// Verifies the six homomorphism conditions between quantum cylindric
// algebras: meet, join, complement, bounds, quantifiers, diagonals.
// Throws DimensionMismatch when the dimension sets differ.
CheckReport check_hom_qca(const QuantumCylindricAlgebra& source,
                          const QuantumCylindricAlgebra& target,
                          const HomMap& h);

// Verifies the four homomorphism conditions between cylindric
// quasi-implication algebras: dot, diamonds, diagonals, zero.
CheckReport check_hom_cqia(const CylindricQia& source,
                           const CylindricQia& target, const HomMap& h);

}  // namespace oqkit
