#include "oqkit/qia.hpp"

namespace oqkit {

namespace {

std::vector<std::string> wit(const QiaTable& q, std::vector<int> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(q.label(x));
  return out;
}

void validate_qia_shape(const QiaTable& q) {
  if (q.n < 1)
    throw Error(ErrorCode::MalformedTable, "element count must be >= 1");
  if (q.table.size() != static_cast<std::size_t>(q.n) * q.n)
    throw Error(ErrorCode::MalformedTable, "dot table is not n x n");
  for (int x : q.table)
    if (x < 0 || x >= q.n)
      throw Error(ErrorCode::MalformedTable, "dot table entry out of range");
  if (q.zero && (*q.zero < 0 || *q.zero >= q.n))
    throw Error(ErrorCode::MalformedTable, "zero out of range");
  if (!q.labels.empty() && q.labels.size() != static_cast<std::size_t>(q.n))
    throw Error(ErrorCode::MalformedTable, "label array is not length n");
}

void validate_diamond_shape(const QiaTable& q, const QuantifierMap& d) {
  if (d.size() != static_cast<std::size_t>(q.n))
    throw Error(ErrorCode::MalformedTable, "diamond map is not length n");
  for (int x : d)
    if (x < 0 || x >= q.n)
      throw Error(ErrorCode::MalformedTable, "diamond entry out of range");
}

int require_zero(const QiaTable& q) {
  if (!q.zero)
    throw Error(ErrorCode::Unbounded, "operation needs a bounded table");
  return *q.zero;
}

}  // namespace

std::string QiaTable::label(int x) const {
  if (!labels.empty() && x >= 0 && x < static_cast<int>(labels.size()))
    return labels[x];
  return std::to_string(x);
}

CheckReport check_qia(const QiaTable& q) {
  validate_qia_shape(q);
  CheckReport rep;
  const int n = q.n;

  for (int x = 0; x < n && !rep.has("1"); ++x)
    for (int y = 0; y < n && !rep.has("1"); ++y)
      if (q.dot(q.dot(x, y), x) != x) rep.add("1", {x, y}, wit(q, {x, y}));

  for (int x = 0; x < n && !rep.has("2"); ++x)
    for (int y = 0; y < n && !rep.has("2"); ++y)
      for (int z = 0; z < n && !rep.has("2"); ++z)
        if (q.dot(q.dot(x, y), q.dot(x, z)) !=
            q.dot(q.dot(y, x), q.dot(y, z)))
          rep.add("2", {x, y, z}, wit(q, {x, y, z}));

  for (int x = 0; x < n && !rep.has("3"); ++x)
    for (int y = 0; y < n && !rep.has("3"); ++y)
      if (q.dot(q.dot(q.dot(x, y), q.dot(y, x)), x) !=
          q.dot(q.dot(q.dot(y, x), q.dot(x, y)), y))
        rep.add("3", {x, y}, wit(q, {x, y}));

  if (q.zero) {
    const int u = q.dot(0, 0);
    for (int x = 0; x < n && !rep.has("bounded"); ++x)
      if (q.dot(*q.zero, x) != u) rep.add("bounded", {x}, wit(q, {x}));
  }
  return rep;
}

CheckReport check_derived_identities(const QiaTable& q) {
  CheckReport pre = check_qia(q);
  if (!pre.passed())
    throw Error(ErrorCode::PreconditionFailed,
                "check_derived_identities needs a quasi-implication algebra; " +
                    pre.summary());

  CheckReport rep;
  const int n = q.n;
  const int u = q.dot(0, 0);

  for (int x = 0; x < n && !rep.has("lemma-1"); ++x)
    for (int y = 0; y < n && !rep.has("lemma-1"); ++y)
      if (q.dot(x, q.dot(x, y)) != q.dot(x, y))
        rep.add("lemma-1", {x, y}, wit(q, {x, y}));
  for (int x = 0; x < n && !rep.has("lemma-2"); ++x)
    for (int y = 0; y < n && !rep.has("lemma-2"); ++y)
      if (q.dot(x, x) != q.dot(q.dot(x, y), q.dot(x, y)))
        rep.add("lemma-2", {x, y}, wit(q, {x, y}));
  for (int x = 0; x < n && !rep.has("lemma-3"); ++x)
    for (int y = 0; y < n && !rep.has("lemma-3"); ++y)
      if (q.dot(x, x) != q.dot(y, y))
        rep.add("lemma-3", {x, y}, wit(q, {x, y}));
  for (int x = 0; x < n && !rep.has("lemma-4"); ++x)
    for (int y = 0; y < n && !rep.has("lemma-4"); ++y)
      for (int z = 0; z < n && !rep.has("lemma-4"); ++z)
        if (q.dot(q.dot(x, y), q.dot(x, z)) !=
            q.dot(x, q.dot(q.dot(x, y), z)))
          rep.add("lemma-4", {x, y, z}, wit(q, {x, y, z}));

  for (int x = 0; x < n && !rep.has("unit-left"); ++x)
    if (q.dot(u, x) != x) rep.add("unit-left", {x}, wit(q, {x}));
  for (int x = 0; x < n && !rep.has("unit-right"); ++x)
    if (q.dot(x, u) != u) rep.add("unit-right", {x}, wit(q, {x}));

  for (int x = 0; x < n && !rep.has("left-monotone"); ++x)
    for (int y = 0; y < n && !rep.has("left-monotone"); ++y)
      for (int z = 0; z < n && !rep.has("left-monotone"); ++z)
        if (q.dot(y, z) == u && q.dot(q.dot(x, y), q.dot(x, z)) != u)
          rep.add("left-monotone", {x, y, z}, wit(q, {x, y, z}));

  if (!rep.passed())
    throw Error(ErrorCode::TheoremViolation,
                "derived identity fails on a table that passes check_qia "
                "(checker or builder bug); " +
                    rep.summary());
  return rep;
}

int unit_of(const QiaTable& q) {
  validate_qia_shape(q);
  const int u = q.dot(0, 0);
  for (int x = 0; x < q.n; ++x)
    if (q.dot(x, x) != u)
      throw Error(ErrorCode::NotConstant,
                  "x.x is not constant: differs at " + q.label(x));
  return u;
}

DerivedOrder derived_order(const QiaTable& q) {
  const int u = unit_of(q);
  const int n = q.n;
  DerivedOrder ord;
  ord.n = n;
  ord.order.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ord.order[static_cast<std::size_t>(x) * n + y] =
          q.dot(x, y) == u ? 1 : 0;

  auto fail = [&](const std::string& law, int x, int y) {
    throw Error(ErrorCode::OrderLawViolation,
                law + " fails at (" + q.label(x) + ", " + q.label(y) + ")");
  };
  for (int x = 0; x < n; ++x) {
    if (!ord.leq(x, x)) fail("reflexivity", x, x);
    if (!ord.leq(x, u)) fail("unit maximality", x, u);
    if (q.zero && !ord.leq(*q.zero, x)) fail("zero minimality", *q.zero, x);
    for (int y = 0; y < n; ++y) {
      if (x != y && ord.leq(x, y) && ord.leq(y, x)) fail("antisymmetry", x, y);
      for (int z = 0; z < n; ++z)
        if (ord.leq(x, y) && ord.leq(y, z) && !ord.leq(x, z))
          fail("transitivity", x, z);
    }
  }
  return ord;
}

int qia_comp(const QiaTable& q, int x) { return q.dot(x, require_zero(q)); }

int qia_join(const QiaTable& q, int x, int y) {
  return q.dot(q.dot(q.dot(x, y), q.dot(y, x)), x);
}

int qia_meet(const QiaTable& q, int x, int y) {
  const int z = require_zero(q);
  return q.dot(q.dot(q.dot(x, y), q.dot(x, z)), z);
}

CheckReport check_monadic_qia(const QiaTable& q, const QuantifierMap& dia) {
  CheckReport pre = check_qia(q);
  if (!pre.passed())
    throw Error(ErrorCode::PreconditionFailed,
                "check_monadic_qia needs a quasi-implication algebra; " +
                    pre.summary());
  const int z = require_zero(q);
  validate_diamond_shape(q, dia);

  CheckReport rep;
  const int n = q.n;
  const int u = q.dot(0, 0);

  for (int x = 0; x < n && !rep.has("2(a)"); ++x)
    if (q.dot(dia[dia[x]], dia[x]) != u || q.dot(x, dia[x]) != u)
      rep.add("2(a)", {x}, wit(q, {x}));

  if (dia[z] != z) rep.add("2(b)", {}, {});
  for (int x = 0; x < n && !rep.has("2(b)"); ++x)
    if (dia[q.dot(dia[x], z)] != q.dot(dia[x], z))
      rep.add("2(b)", {x}, wit(q, {x}));

  for (int x = 0; x < n && !rep.has("2(c)"); ++x)
    for (int y = 0; y < n && !rep.has("2(c)"); ++y) {
      const int lhs = dia[q.dot(q.dot(q.dot(x, z), q.dot(y, z)), x)];
      const int rhs =
          q.dot(q.dot(q.dot(dia[x], z), q.dot(dia[y], z)), dia[x]);
      if (lhs != rhs) rep.add("2(c)", {x, y}, wit(q, {x, y}));
    }

  for (int x = 0; x < n && !rep.has("derived-idempotent"); ++x)
    if (dia[dia[x]] != dia[x]) rep.add("derived-idempotent", {x}, wit(q, {x}));
  for (int x = 0; x < n && !rep.has("derived-monotone"); ++x)
    for (int y = 0; y < n && !rep.has("derived-monotone"); ++y)
      if (q.dot(x, y) == u && q.dot(dia[x], dia[y]) != u)
        rep.add("derived-monotone", {x, y}, wit(q, {x, y}));

  return rep;
}

CheckReport check_cylindric_qia(const CylindricQia& c) {
  const QiaTable& q = c.qia;
  validate_qia_shape(q);
  require_zero(q);
  if (c.dims < 0)
    throw Error(ErrorCode::MalformedTable, "dimension count must be >= 0");
  if (c.diamonds.size() != static_cast<std::size_t>(c.dims))
    throw Error(ErrorCode::MalformedTable, "expected one diamond per dimension");
  for (const auto& d : c.diamonds) validate_diamond_shape(q, d);
  if (c.diag.size() != static_cast<std::size_t>(c.dims) * c.dims)
    throw Error(ErrorCode::MalformedTable, "diagonal matrix is not dims x dims");
  for (int x : c.diag)
    if (x < 0 || x >= q.n)
      throw Error(ErrorCode::MalformedTable, "diagonal entry out of range");

  CheckReport rep;
  CheckReport base = check_qia(q);
  rep.merge(base, "qia.");
  if (!base.passed()) return rep;

  for (int i = 0; i < c.dims; ++i)
    rep.merge(check_monadic_qia(q, c.diamonds[i]),
              "diamond_" + std::to_string(i) + ".");

  const int n = q.n;
  const int u = q.dot(0, 0);

  for (int i = 0; i < c.dims && !rep.has("2"); ++i)
    for (int k = i + 1; k < c.dims && !rep.has("2"); ++k)
      for (int x = 0; x < n && !rep.has("2"); ++x)
        if (c.dia(i, c.dia(k, x)) != c.dia(k, c.dia(i, x)))
          rep.add("2", {i, k, x},
                  {std::to_string(i), std::to_string(k), q.label(x)});

  for (int i = 0; i < c.dims && !rep.has("3"); ++i)
    for (int k = 0; k < c.dims && !rep.has("3"); ++k) {
      const bool bad = i == k ? c.d(i, i) != u : c.d(i, k) != c.d(k, i);
      if (bad) rep.add("3", {i, k}, {std::to_string(i), std::to_string(k)});
    }

  for (int i = 0; i < c.dims && !rep.has("4"); ++i)
    for (int k = 0; k < c.dims && !rep.has("4"); ++k)
      for (int l = 0; l < c.dims && !rep.has("4"); ++l) {
        if (i == k || l == k) continue;
        const int m = qia_meet(q, c.d(i, k), c.d(k, l));
        if (c.dia(k, m) != c.d(i, l))
          rep.add("4", {i, k, l},
                  {std::to_string(i), std::to_string(k), std::to_string(l)});
      }

  return rep;
}

}  // namespace oqkit
