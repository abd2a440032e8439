#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oqkit/catalog.hpp"
#include "oqkit/lattice.hpp"
#include "test_support.hpp"

using namespace oqkit;

TEST_CASE("boolean algebras pass both lattice checks") {
  for (int k = 0; k <= 4; ++k) {
    const Ortholattice L = boolean_algebra(k);
    CHECK(L.n == (1 << k));
    CHECK(check_ortholattice(L).passed());
    CHECK(check_orthomodular(L).passed());
  }
  const Ortholattice b0 = boolean_algebra(0);
  CHECK(b0.bot == b0.top);
  const Ortholattice b1 = boolean_algebra(1);
  CHECK(b1.n == 2);
  CHECK(b1.leq(0, 1));
  CHECK_FALSE(b1.leq(1, 0));
}

TEST_CASE("identity complement on B2 falsifies 2(a)") {
  Ortholattice L = boolean_algebra(2);
  L.ocomp = {0, 1, 2, 3};
  const CheckReport rep = check_ortholattice(L);
  CHECK_FALSE(rep.passed());
  const Violation* v = rep.find("2(a)");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{0});
}

TEST_CASE("MO2 is orthomodular and non-distributive") {
  const Ortholattice L = mo(2);
  CHECK(L.n == 6);
  CHECK(check_ortholattice(L).passed());
  CHECK(check_orthomodular(L).passed());
  CHECK(mo(1).n == 4);
  CHECK(check_orthomodular(mo(1)).passed());

  // a ^ (b v b') = a but (a ^ b) v (a ^ b') = 0
  const int a = 1, b = 3, bp = 4;
  CHECK(L.meet(a, L.join(b, bp)) == a);
  CHECK(L.join(L.meet(a, b), L.meet(a, bp)) == 0);
}

TEST_CASE("O6 is an ortholattice but fails the orthomodular law at (a,b)") {
  const Ortholattice L = o6();
  CHECK(check_ortholattice(L).passed());

  const CheckReport rep = check_orthomodular(L);
  CHECK_FALSE(rep.passed());
  const Violation* quasi = rep.find("oml-quasi");
  REQUIRE(quasi != nullptr);
  CHECK(quasi->witness == std::vector<int>{1, 2});
  CHECK(quasi->witness_labels == std::vector<std::string>{"a", "b"});
  CHECK(rep.find("oml-eq") != nullptr);

  // complement of a is a', and b' < a' by construction
  CHECK(L.comp(1) == 3);
  CHECK(L.leq(4, 3));
  CHECK_FALSE(L.leq(3, 4));

  // the witness re-substituted into the law falsifies it
  const int x = quasi->witness[0], y = quasi->witness[1];
  CHECK(L.leq(x, y));
  CHECK(L.join(x, L.meet(L.comp(x), y)) != y);
}

TEST_CASE("meet/join tables match the brute-force bound oracle") {
  for (const Ortholattice& L :
       {boolean_algebra(3), mo(2), o6(), cylindric_set_algebra(2, 2).lattice}) {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) {
        const auto glb = testsupport::oracle_glb(L, x, y);
        const auto lub = testsupport::oracle_lub(L, x, y);
        REQUIRE(glb.has_value());
        REQUIRE(lub.has_value());
        CHECK(L.meet(x, y) == *glb);
        CHECK(L.join(x, y) == *lub);
      }
  }
}

TEST_CASE("lattice operation laws hold on every accepted instance") {
  for (const Ortholattice& L : {boolean_algebra(2), mo(3), o6()}) {
    REQUIRE(check_ortholattice(L).passed());
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) {
        CHECK(L.meet(x, y) == L.meet(y, x));
        CHECK(L.join(x, y) == L.join(y, x));
        CHECK(L.meet(x, L.join(x, y)) == x);
        CHECK(L.join(x, L.meet(x, y)) == x);
        // De Morgan
        CHECK(L.comp(L.meet(x, y)) == L.join(L.comp(x), L.comp(y)));
        for (int z = 0; z < L.n; ++z) {
          CHECK(L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z));
          CHECK(L.join(x, L.join(y, z)) == L.join(L.join(x, y), z));
        }
      }
  }
}

TEST_CASE("orthomodularity requires an ortholattice") {
  Ortholattice L = boolean_algebra(2);
  L.ocomp = {0, 1, 2, 3};
  CHECK_THROWS_AS((void)check_orthomodular(L), Error);
  try {
    (void)check_orthomodular(L);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrtholattice);
  }
}

TEST_CASE("malformed tables are rejected before checking") {
  Ortholattice L = boolean_algebra(2);
  L.ocomp[2] = 9;
  CHECK_THROWS_AS((void)check_ortholattice(L), Error);
  try {
    (void)check_ortholattice(L);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTable);
  }

  std::vector<std::uint8_t> order(4, 1);
  CHECK_THROWS_AS(
      (void)lattice_from_order(2, order, std::vector<int>{0, 1, 0}, 0, 1),
      Error);
}

TEST_CASE("element caps are enforced") {
  Limits tiny;
  tiny.max_elems = 8;
  CHECK_THROWS_AS((void)boolean_algebra(4, tiny), Error);
  try {
    (void)boolean_algebra(4, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(boolean_algebra(3, tiny).n == 8);
}
