#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oqkit/catalog.hpp"
#include "oqkit/transforms.hpp"
#include "test_support.hpp"

using namespace oqkit;

namespace {

const std::vector<ImplicationKind> kAllKinds = {
    ImplicationKind::classical, ImplicationKind::sasaki,
    ImplicationKind::dishkant, ImplicationKind::kalmbach};

bool same_qca(const QuantumCylindricAlgebra& A,
              const QuantumCylindricAlgebra& B) {
  return A.lattice.n == B.lattice.n && A.lattice.order == B.lattice.order &&
         A.lattice.meets == B.lattice.meets &&
         A.lattice.joins == B.lattice.joins &&
         A.lattice.ocomp == B.lattice.ocomp && A.lattice.bot == B.lattice.bot &&
         A.lattice.top == B.lattice.top && A.dims == B.dims &&
         A.quantifiers == B.quantifiers && A.diag == B.diag;
}

bool same_cqia(const CylindricQia& C, const CylindricQia& D) {
  return C.qia.n == D.qia.n && C.qia.table == D.qia.table &&
         C.qia.zero == D.qia.zero && C.dims == D.dims &&
         C.diamonds == D.diamonds && C.diag == D.diag;
}

}  // namespace

TEST_CASE("implication polynomial values on small lattices") {
  const Ortholattice b1 = boolean_algebra(1);
  CHECK(implication(b1, ImplicationKind::sasaki, 1, 0) == 0);

  const Ortholattice L = mo(2);
  const int a = 1, ap = 2, b = 3, top = 5;
  CHECK(implication(L, ImplicationKind::sasaki, a, b) == ap);
  CHECK(implication(L, ImplicationKind::classical, a, b) == top);
  CHECK(implication(L, ImplicationKind::dishkant, a, b) == b);
  CHECK(implication(L, ImplicationKind::kalmbach, a, b) == 0);
}

TEST_CASE("all four implications collapse on Boolean algebras") {
  for (int k = 0; k <= 3; ++k) {
    const Ortholattice L = boolean_algebra(k);
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) {
        const int c = implication(L, ImplicationKind::classical, x, y);
        for (ImplicationKind kind : kAllKinds)
          CHECK(implication(L, kind, x, y) == c);
      }
  }
}

TEST_CASE("sasaki edge identities hold on every catalog ortholattice") {
  for (const Ortholattice& L :
       {boolean_algebra(2), mo(2), o6(), cylindric_set_algebra(2, 2).lattice}) {
    for (int x = 0; x < L.n; ++x) {
      CHECK(implication(L, ImplicationKind::sasaki, x, L.bot) == L.comp(x));
      CHECK(implication(L, ImplicationKind::sasaki, L.bot, x) == L.top);
    }
  }
}

TEST_CASE("hardegree conditions on orthomodular lattices") {
  const Ortholattice b2 = boolean_algebra(2);
  const Ortholattice mo2 = mo(2);
  const Ortholattice cyl = cylindric_set_algebra(2, 2).lattice;
  for (const Ortholattice* L : {&b2, &mo2, &cyl}) {
    CHECK(check_hardegree(*L, ImplicationKind::sasaki).passed());
    CHECK(check_hardegree(*L, ImplicationKind::dishkant).passed());
    CHECK(check_hardegree(*L, ImplicationKind::kalmbach).passed());
  }
  CHECK(check_hardegree(b2, ImplicationKind::classical).passed());
  CHECK(check_hardegree(cyl, ImplicationKind::classical).passed());

  const CheckReport rep = check_hardegree(mo2, ImplicationKind::classical);
  CHECK_FALSE(rep.passed());
  const Violation* v = rep.find("modus-ponens");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{1, 3});
}

TEST_CASE("the meet identity holds exactly where orthomodularity does") {
  CHECK(check_useful_lemma(boolean_algebra(2)).passed());
  CHECK(check_useful_lemma(mo(2)).passed());
  CHECK(check_useful_lemma(cylindric_set_algebra(2, 2).lattice).passed());

  const CheckReport rep = check_useful_lemma(o6());
  CHECK_FALSE(rep.passed());
  const Violation* v = rep.find("useful-lemma");
  REQUIRE(v != nullptr);
  CHECK(v->witness == std::vector<int>{2, 1});
  CHECK(v->witness_labels == std::vector<std::string>{"b", "a"});
}

TEST_CASE("conversion carries the structure over verbatim") {
  const QuantumCylindricAlgebra A = with_simple_quantifiers(mo(2), 2);
  const CylindricQia c = qca_to_cqia(A);
  CHECK(c.qia.n == 6);
  CHECK(*c.qia.zero == A.lattice.bot);
  CHECK(c.diamonds == A.quantifiers);
  CHECK(c.diag == A.diag);
  CHECK(c.qia.dot(1, 3) == 2);  // a.b = a'
  CHECK(check_cylindric_qia(c).passed());

  // Boolean case: the dot table is the classical implication table.
  const QuantumCylindricAlgebra B = with_simple_quantifiers(boolean_algebra(2), 2);
  const CylindricQia cb = qca_to_cqia(B);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      CHECK(cb.qia.dot(x, y) ==
            implication(B.lattice, ImplicationKind::classical, x, y));
}

TEST_CASE("the converse conversion rebuilds the algebra") {
  for (const QuantumCylindricAlgebra& A : testsupport::catalog_qcas()) {
    const QuantumCylindricAlgebra back = cqia_to_qca(qca_to_cqia(A));
    CHECK(check_qca(back).passed());
    CHECK(same_qca(A, back));
  }
}

TEST_CASE("round trips are identities in both directions") {
  for (const QuantumCylindricAlgebra& A : testsupport::catalog_qcas()) {
    const CylindricQia c = qca_to_cqia(A);
    CHECK(same_cqia(c, qca_to_cqia(cqia_to_qca(c))));
  }
}

TEST_CASE("conversions refuse structures that fail their checks") {
  QuantumCylindricAlgebra bad;
  bad.lattice = o6();
  CHECK_THROWS_AS((void)qca_to_cqia(bad), Error);
  try {
    (void)qca_to_cqia(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidQca);
  }

  CylindricQia c = qca_to_cqia(with_simple_quantifiers(mo(2), 2));
  c.diag[1] = *c.qia.zero;
  CHECK_THROWS_AS((void)cqia_to_qca(c), Error);
  try {
    (void)cqia_to_qca(c);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCqia);
  }
}

TEST_CASE("identity maps are homomorphisms") {
  for (const QuantumCylindricAlgebra& A : testsupport::catalog_qcas()) {
    HomMap h;
    h.source_n = h.target_n = A.lattice.n;
    for (int x = 0; x < A.lattice.n; ++x) h.map.push_back(x);
    CHECK(check_hom_qca(A, A, h).passed());
    const CylindricQia c = qca_to_cqia(A);
    CHECK(check_hom_cqia(c, c, h).passed());
  }
}

TEST_CASE("the constant-to-top map is not a homomorphism") {
  const QuantumCylindricAlgebra A = with_simple_quantifiers(boolean_algebra(2), 2);
  HomMap h;
  h.source_n = h.target_n = 4;
  h.map = {3, 3, 3, 3};
  const CheckReport rep = check_hom_qca(A, A, h);
  CHECK_FALSE(rep.passed());
  CHECK(rep.has("hom-bounds"));
}

TEST_CASE("projection from a product is a homomorphism and transfers") {
  const QuantumCylindricAlgebra A = with_simple_quantifiers(boolean_algebra(2), 2);
  const QuantumCylindricAlgebra B = with_simple_quantifiers(mo(2), 2);
  const QuantumCylindricAlgebra P = testsupport::product_qca(A, B);
  REQUIRE(check_qca(P).passed());

  HomMap h;
  h.source_n = P.lattice.n;
  h.target_n = A.lattice.n;
  for (int x = 0; x < P.lattice.n; ++x) h.map.push_back(x / B.lattice.n);
  CHECK(check_hom_qca(P, A, h).passed());

  // the same map is a homomorphism of the converted structures, and back
  const CylindricQia cp = qca_to_cqia(P);
  const CylindricQia ca = qca_to_cqia(A);
  CHECK(check_hom_cqia(cp, ca, h).passed());
  CHECK(check_hom_qca(cqia_to_qca(cp), cqia_to_qca(ca), h).passed());
}

TEST_CASE("homomorphisms need matching dimension sets") {
  const QuantumCylindricAlgebra A = with_simple_quantifiers(boolean_algebra(2), 2);
  const QuantumCylindricAlgebra B = with_simple_quantifiers(boolean_algebra(2), 1);
  HomMap h;
  h.source_n = h.target_n = 4;
  h.map = {0, 1, 2, 3};
  CHECK_THROWS_AS((void)check_hom_qca(A, B, h), Error);
}
