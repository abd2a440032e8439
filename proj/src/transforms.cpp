#include "oqkit/transforms.hpp"

namespace oqkit {

namespace {

std::vector<std::string> wit(const Ortholattice& L, std::vector<int> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(L.label(x));
  return out;
}

void validate_hom_shape(int source_n, int target_n, const HomMap& h) {
  if (h.source_n != source_n || h.target_n != target_n)
    throw Error(ErrorCode::MalformedTable,
                "homomorphism carrier sizes do not match the algebras");
  if (h.map.size() != static_cast<std::size_t>(source_n))
    throw Error(ErrorCode::MalformedTable, "homomorphism map is not length n");
  for (int x : h.map)
    if (x < 0 || x >= target_n)
      throw Error(ErrorCode::MalformedTable,
                  "homomorphism entry out of range");
}

}  // namespace

const char* implication_name(ImplicationKind kind) {
  switch (kind) {
    case ImplicationKind::classical: return "classical";
    case ImplicationKind::sasaki: return "sasaki";
    case ImplicationKind::dishkant: return "dishkant";
    case ImplicationKind::kalmbach: return "kalmbach";
  }
  return "?";
}

int implication(const Ortholattice& L, ImplicationKind kind, int x, int y) {
  const int xc = L.comp(x);
  switch (kind) {
    case ImplicationKind::classical:
      return L.join(xc, y);
    case ImplicationKind::sasaki:
      return L.join(xc, L.meet(x, y));
    case ImplicationKind::dishkant:
      return L.join(L.meet(xc, L.comp(y)), y);
    case ImplicationKind::kalmbach:
      return L.join(L.join(L.meet(x, y), L.meet(xc, y)),
                    L.meet(xc, L.comp(y)));
  }
  return -1;
}

CheckReport check_hardegree(const Ortholattice& L, ImplicationKind kind) {
  validate_lattice_shape(L);
  CheckReport rep;
  const int n = L.n;
  for (int x = 0; x < n && !rep.has("law-of-implication"); ++x)
    for (int y = 0; y < n && !rep.has("law-of-implication"); ++y)
      if (L.leq(x, y) && implication(L, kind, x, y) != L.top)
        rep.add("law-of-implication", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("modus-ponens"); ++x)
    for (int y = 0; y < n && !rep.has("modus-ponens"); ++y)
      if (!L.leq(L.meet(x, implication(L, kind, x, y)), y))
        rep.add("modus-ponens", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("modus-tollens"); ++x)
    for (int y = 0; y < n && !rep.has("modus-tollens"); ++y)
      if (!L.leq(L.meet(L.comp(y), implication(L, kind, x, y)), L.comp(x)))
        rep.add("modus-tollens", {x, y}, wit(L, {x, y}));
  return rep;
}

CheckReport check_useful_lemma(const Ortholattice& L) {
  validate_lattice_shape(L);
  CheckReport rep;
  for (int x = 0; x < L.n && !rep.has("useful-lemma"); ++x)
    for (int y = 0; y < L.n && !rep.has("useful-lemma"); ++y) {
      const int inner = implication(L, ImplicationKind::sasaki, x, y);
      const int lhs =
          L.comp(implication(L, ImplicationKind::sasaki, inner, L.comp(x)));
      if (lhs != L.meet(x, y)) rep.add("useful-lemma", {x, y}, wit(L, {x, y}));
    }
  return rep;
}

CylindricQia qca_to_cqia(const QuantumCylindricAlgebra& A) {
  CheckReport pre = check_qca(A);
  if (!pre.passed())
    throw Error(ErrorCode::InvalidQca,
                "conversion needs a quantum cylindric algebra; " +
                    pre.summary());
  const Ortholattice& L = A.lattice;

  CylindricQia c;
  c.qia.n = L.n;
  c.qia.zero = L.bot;
  c.qia.labels = L.labels;
  c.qia.table.assign(static_cast<std::size_t>(L.n) * L.n, 0);
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      c.qia.table[static_cast<std::size_t>(x) * L.n + y] =
          implication(L, ImplicationKind::sasaki, x, y);
  c.dims = A.dims;
  c.diamonds = A.quantifiers;
  c.diag = A.diag;
  return c;
}

QuantumCylindricAlgebra cqia_to_qca(const CylindricQia& c) {
  CheckReport pre = check_cylindric_qia(c);
  if (!pre.passed())
    throw Error(ErrorCode::InvalidCqia,
                "conversion needs a cylindric quasi-implication algebra; " +
                    pre.summary());
  const QiaTable& q = c.qia;
  const int n = q.n;

  QuantumCylindricAlgebra A;
  Ortholattice& L = A.lattice;
  L.n = n;
  L.order = derived_order(q).order;
  L.bot = *q.zero;
  L.top = unit_of(q);
  L.labels = q.labels;
  L.ocomp.resize(n);
  L.meets.assign(static_cast<std::size_t>(n) * n, 0);
  L.joins.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    L.ocomp[x] = qia_comp(q, x);
    for (int y = 0; y < n; ++y) {
      L.meets[static_cast<std::size_t>(x) * n + y] = qia_meet(q, x, y);
      L.joins[static_cast<std::size_t>(x) * n + y] = qia_join(q, x, y);
    }
  }
  A.dims = c.dims;
  A.quantifiers = c.diamonds;
  A.diag = c.diag;
  return A;
}

CheckReport check_hom_qca(const QuantumCylindricAlgebra& A,
                          const QuantumCylindricAlgebra& B, const HomMap& h) {
  if (A.dims != B.dims)
    throw Error(ErrorCode::DimensionMismatch,
                "homomorphism needs identical dimension sets");
  validate_hom_shape(A.lattice.n, B.lattice.n, h);
  const Ortholattice& L = A.lattice;
  const Ortholattice& M = B.lattice;
  const auto& f = h.map;

  CheckReport rep;
  for (int x = 0; x < L.n && !rep.has("hom-meet"); ++x)
    for (int y = 0; y < L.n && !rep.has("hom-meet"); ++y)
      if (f[L.meet(x, y)] != M.meet(f[x], f[y]))
        rep.add("hom-meet", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < L.n && !rep.has("hom-join"); ++x)
    for (int y = 0; y < L.n && !rep.has("hom-join"); ++y)
      if (f[L.join(x, y)] != M.join(f[x], f[y]))
        rep.add("hom-join", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < L.n && !rep.has("hom-comp"); ++x)
    if (f[L.comp(x)] != M.comp(f[x])) rep.add("hom-comp", {x}, wit(L, {x}));
  if (f[L.bot] != M.bot || f[L.top] != M.top) rep.add("hom-bounds", {}, {});
  for (int i = 0; i < A.dims && !rep.has("hom-exists"); ++i)
    for (int x = 0; x < L.n && !rep.has("hom-exists"); ++x)
      if (f[A.ex(i, x)] != B.ex(i, f[x]))
        rep.add("hom-exists", {i, x}, {std::to_string(i), L.label(x)});
  for (int i = 0; i < A.dims && !rep.has("hom-diag"); ++i)
    for (int k = 0; k < A.dims && !rep.has("hom-diag"); ++k)
      if (f[A.delta(i, k)] != B.delta(i, k))
        rep.add("hom-diag", {i, k}, {std::to_string(i), std::to_string(k)});
  return rep;
}

CheckReport check_hom_cqia(const CylindricQia& C, const CylindricQia& D,
                           const HomMap& h) {
  if (C.dims != D.dims)
    throw Error(ErrorCode::DimensionMismatch,
                "homomorphism needs identical dimension sets");
  validate_hom_shape(C.qia.n, D.qia.n, h);
  const QiaTable& q = C.qia;
  const auto& f = h.map;

  CheckReport rep;
  for (int x = 0; x < q.n && !rep.has("hom-dot"); ++x)
    for (int y = 0; y < q.n && !rep.has("hom-dot"); ++y)
      if (f[q.dot(x, y)] != D.qia.dot(f[x], f[y]))
        rep.add("hom-dot", {x, y}, {q.label(x), q.label(y)});
  for (int i = 0; i < C.dims && !rep.has("hom-diamond"); ++i)
    for (int x = 0; x < q.n && !rep.has("hom-diamond"); ++x)
      if (f[C.dia(i, x)] != D.dia(i, f[x]))
        rep.add("hom-diamond", {i, x}, {std::to_string(i), q.label(x)});
  for (int i = 0; i < C.dims && !rep.has("hom-diag"); ++i)
    for (int k = 0; k < C.dims && !rep.has("hom-diag"); ++k)
      if (f[C.d(i, k)] != D.d(i, k))
        rep.add("hom-diag", {i, k}, {std::to_string(i), std::to_string(k)});
  if (C.qia.zero && D.qia.zero && f[*C.qia.zero] != *D.qia.zero)
    rep.add("hom-zero", {}, {});
  return rep;
}

}  // namespace oqkit
