#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oqkit/catalog.hpp"
#include "oqkit/qca.hpp"
#include "test_support.hpp"

using namespace oqkit;

TEST_CASE("identity and simple maps are quantifiers on MO2") {
  const Ortholattice L = mo(2);
  QuantifierMap identity(L.n);
  for (int x = 0; x < L.n; ++x) identity[x] = x;
  CHECK(check_quantifier(L, identity).passed());
  CHECK(check_quantifier(L, simple_quantifier(L)).passed());
}

TEST_CASE("a map that moves bottom falsifies 2(a)") {
  const Ortholattice L = mo(2);
  QuantifierMap q = simple_quantifier(L);
  q[L.bot] = L.top;
  const CheckReport rep = check_quantifier(L, q);
  const Violation* v = rep.find("2(a)");
  REQUIRE(v != nullptr);
  CHECK(v->witness.empty());
}

TEST_CASE("cylindric set algebra of a 2-element base in 2 dimensions") {
  const QuantumCylindricAlgebra A = cylindric_set_algebra(2, 2);
  CHECK(A.lattice.n == 16);
  CHECK(A.dims == 2);
  CHECK(check_qca(A).passed());

  // functions are numbered 00=0, 01=1, 10=2, 11=3; elements are masks
  CHECK(A.delta(0, 1) == 0b1001);  // {00, 11}
  CHECK(A.delta(1, 0) == 0b1001);
  CHECK(A.ex(0, 0b0010) == 0b1010);  // cylindrifying {01} along 0 gives {01,11}
  CHECK(A.lattice.label(0b1001) == "{00,11}");
}

TEST_CASE("one-point base collapses the diagonal to top") {
  const QuantumCylindricAlgebra A = cylindric_set_algebra(1, 2);
  CHECK(A.lattice.n == 2);
  CHECK(A.delta(0, 1) == A.lattice.top);
  CHECK(check_qca(A).passed());
}

TEST_CASE("simple quantifiers with trivial diagonals form a qca") {
  CHECK(check_qca(with_simple_quantifiers(mo(2), 2)).passed());
  CHECK(check_qca(with_simple_quantifiers(boolean_algebra(2), 3)).passed());
  CHECK(check_qca(with_simple_quantifiers(boolean_algebra(0), 2)).passed());
}

TEST_CASE("a broken diagonal is caught with its witness pair") {
  QuantumCylindricAlgebra A = cylindric_set_algebra(2, 2);
  A.diag[0 * 2 + 1] = A.lattice.bot;
  const CheckReport rep = check_qca(A);
  CHECK_FALSE(rep.passed());
  const Violation* v = rep.find("4(a)");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{0, 1});
}

TEST_CASE("non-commuting partition quantifiers are caught") {
  // On the 3-atom Boolean algebra, closures along the partitions {xy|z} and
  // {x|yz} do not commute.
  const Ortholattice L = boolean_algebra(3);
  auto partition_quantifier = [&](std::vector<int> blocks) {
    QuantifierMap q(L.n);
    for (int s = 0; s < L.n; ++s) {
      int image = 0;
      for (int b : blocks)
        if (s & b) image |= b;
      q[s] = image;
    }
    return q;
  };
  QuantumCylindricAlgebra A;
  A.lattice = L;
  A.dims = 2;
  A.quantifiers.push_back(partition_quantifier({0b011, 0b100}));
  A.quantifiers.push_back(partition_quantifier({0b001, 0b110}));
  A.diag.assign(4, L.top);

  CHECK(check_quantifier(L, A.quantifiers[0]).passed());
  CHECK(check_quantifier(L, A.quantifiers[1]).passed());
  const CheckReport rep = check_qca(A);
  const Violation* v = rep.find("3");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{0, 1, 1});
}

TEST_CASE("products of qcas are qcas") {
  const QuantumCylindricAlgebra P = testsupport::product_qca(
      with_simple_quantifiers(boolean_algebra(2), 2),
      with_simple_quantifiers(mo(2), 2));
  CHECK(P.lattice.n == 24);
  CHECK(check_qca(P).passed());
}

TEST_CASE("non-orthomodular lattices are rejected") {
  CHECK_THROWS_AS((void)with_simple_quantifiers(o6(), 2), Error);
  try {
    (void)with_simple_quantifiers(o6(), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrthomodular);
  }
}

TEST_CASE("zero-dimensional structures are legal") {
  const QuantumCylindricAlgebra A = cylindric_set_algebra(2, 0);
  CHECK(A.lattice.n == 2);
  CHECK(A.dims == 0);
  CHECK(check_qca(A).passed());
}

TEST_CASE("set algebra caps") {
  Limits tiny;
  tiny.max_base = 4;
  CHECK_THROWS_AS((void)cylindric_set_algebra(2, 3, tiny), Error);
  CHECK(cylindric_set_algebra(2, 2, tiny).lattice.n == 16);
}
