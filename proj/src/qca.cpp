#include "oqkit/qca.hpp"

namespace oqkit {

namespace {

std::vector<std::string> wit(const Ortholattice& L, std::vector<int> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(L.label(x));
  return out;
}

void validate_qca_shape(const QuantumCylindricAlgebra& A) {
  validate_lattice_shape(A.lattice);
  const int n = A.lattice.n;
  if (A.dims < 0)
    throw Error(ErrorCode::MalformedTable, "dimension count must be >= 0");
  if (A.quantifiers.size() != static_cast<std::size_t>(A.dims))
    throw Error(ErrorCode::MalformedTable,
                "expected one quantifier per dimension");
  for (const QuantifierMap& q : A.quantifiers) {
    if (q.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::MalformedTable, "quantifier map is not length n");
    for (int x : q)
      if (x < 0 || x >= n)
        throw Error(ErrorCode::MalformedTable,
                    "quantifier entry out of range");
  }
  if (A.diag.size() != static_cast<std::size_t>(A.dims) * A.dims)
    throw Error(ErrorCode::MalformedTable,
                "diagonal matrix is not dims x dims");
  for (int x : A.diag)
    if (x < 0 || x >= n)
      throw Error(ErrorCode::MalformedTable, "diagonal entry out of range");
}

}  // namespace

CheckReport check_quantifier(const Ortholattice& L, const QuantifierMap& q) {
  validate_lattice_shape(L);
  if (q.size() != static_cast<std::size_t>(L.n))
    throw Error(ErrorCode::MalformedTable, "quantifier map is not length n");
  for (int x : q)
    if (x < 0 || x >= L.n)
      throw Error(ErrorCode::MalformedTable, "quantifier entry out of range");

  CheckReport rep;
  const int n = L.n;
  if (q[L.bot] != L.bot) rep.add("2(a)", {}, {});
  for (int x = 0; x < n && !rep.has("2(b)"); ++x)
    if (!L.leq(x, q[x])) rep.add("2(b)", {x}, wit(L, {x}));
  for (int x = 0; x < n && !rep.has("2(c)"); ++x)
    for (int y = 0; y < n && !rep.has("2(c)"); ++y)
      if (q[L.join(x, y)] != L.join(q[x], q[y]))
        rep.add("2(c)", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("2(d)"); ++x)
    if (q[q[x]] != q[x]) rep.add("2(d)", {x}, wit(L, {x}));
  for (int x = 0; x < n && !rep.has("2(e)"); ++x)
    if (q[L.comp(q[x])] != L.comp(q[x])) rep.add("2(e)", {x}, wit(L, {x}));
  return rep;
}

CheckReport check_qca(const QuantumCylindricAlgebra& A) {
  validate_qca_shape(A);
  const Ortholattice& L = A.lattice;
  const int n = L.n;

  CheckReport rep;
  CheckReport base = check_ortholattice(L);
  rep.merge(base, "lattice.");
  if (base.passed()) rep.merge(check_orthomodular(L), "lattice.");

  for (int i = 0; i < A.dims; ++i)
    rep.merge(check_quantifier(L, A.quantifiers[i]),
              "exists_" + std::to_string(i) + ".");

  for (int i = 0; i < A.dims && !rep.has("3"); ++i)
    for (int k = i + 1; k < A.dims && !rep.has("3"); ++k)
      for (int x = 0; x < n && !rep.has("3"); ++x)
        if (A.ex(i, A.ex(k, x)) != A.ex(k, A.ex(i, x)))
          rep.add("3", {i, k, x},
                  {std::to_string(i), std::to_string(k), L.label(x)});

  for (int i = 0; i < A.dims && !rep.has("4(a)"); ++i)
    for (int k = 0; k < A.dims && !rep.has("4(a)"); ++k) {
      const bool bad =
          i == k ? A.delta(i, i) != L.top : A.delta(i, k) != A.delta(k, i);
      if (bad)
        rep.add("4(a)", {i, k}, {std::to_string(i), std::to_string(k)});
    }

  for (int i = 0; i < A.dims && !rep.has("4(b)"); ++i)
    for (int k = 0; k < A.dims && !rep.has("4(b)"); ++k)
      for (int l = 0; l < A.dims && !rep.has("4(b)"); ++l) {
        if (i == k || l == k) continue;
        if (A.ex(k, L.meet(A.delta(i, k), A.delta(k, l))) != A.delta(i, l))
          rep.add("4(b)", {i, k, l},
                  {std::to_string(i), std::to_string(k), std::to_string(l)});
      }

  return rep;
}

}  // namespace oqkit
