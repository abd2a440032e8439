#include "oqkit/lattice.hpp"

#include <utility>

namespace oqkit {

namespace {

std::vector<std::string> wit(const Ortholattice& L, std::vector<int> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(L.label(x));
  return out;
}

void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace

std::string Ortholattice::label(int x) const {
  if (!labels.empty() && x >= 0 && x < static_cast<int>(labels.size()))
    return labels[x];
  return std::to_string(x);
}

void validate_lattice_shape(const Ortholattice& L) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  require(L.n >= 1, ErrorCode::MalformedTable, "element count must be >= 1");
  require(L.order.size() == n * n, ErrorCode::MalformedTable,
          "order relation is not n x n");
  require(L.meets.size() == n * n && L.joins.size() == n * n,
          ErrorCode::MalformedTable, "meet/join tables are not n x n");
  require(L.ocomp.size() == n, ErrorCode::MalformedTable,
          "orthocomplement map is not length n");
  require(L.labels.empty() || L.labels.size() == n, ErrorCode::MalformedTable,
          "label array is not length n");
  require(L.bot >= 0 && L.bot < L.n && L.top >= 0 && L.top < L.n,
          ErrorCode::MalformedTable, "bot/top out of range");
  for (std::size_t i = 0; i < n * n; ++i) {
    require(L.meets[i] >= 0 && L.meets[i] < L.n, ErrorCode::MalformedTable,
            "meet table entry out of range");
    require(L.joins[i] >= 0 && L.joins[i] < L.n, ErrorCode::MalformedTable,
            "join table entry out of range");
  }
  for (int x : L.ocomp)
    require(x >= 0 && x < L.n, ErrorCode::MalformedTable,
            "orthocomplement entry out of range");
}

Ortholattice lattice_from_order(int n, std::vector<std::uint8_t> order,
                                std::vector<int> ocomp, int bot, int top,
                                std::vector<std::string> labels) {
  Ortholattice L;
  L.n = n;
  L.order = std::move(order);
  L.ocomp = std::move(ocomp);
  L.bot = bot;
  L.top = top;
  L.labels = std::move(labels);
  require(n >= 1, ErrorCode::MalformedTable, "element count must be >= 1");
  require(L.order.size() == static_cast<std::size_t>(n) * n,
          ErrorCode::MalformedTable, "order relation is not n x n");
  require(L.ocomp.size() == static_cast<std::size_t>(n),
          ErrorCode::MalformedTable, "orthocomplement map is not length n");
  require(L.labels.empty() || L.labels.size() == static_cast<std::size_t>(n),
          ErrorCode::MalformedTable, "label array is not length n");
  require(bot >= 0 && bot < n && top >= 0 && top < n,
          ErrorCode::MalformedTable, "bot/top out of range");
  for (int x : L.ocomp)
    require(x >= 0 && x < n, ErrorCode::MalformedTable,
            "orthocomplement entry out of range");

  L.meets.assign(static_cast<std::size_t>(n) * n, 0);
  L.joins.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // The last element of the bound set that dominates the running
      // candidate is the greatest lower bound when one exists; the checker
      // flags pairs where it does not.
      int glb = -1;
      for (int z = 0; z < n; ++z)
        if (L.leq(z, x) && L.leq(z, y) && (glb < 0 || L.leq(glb, z))) glb = z;
      int lub = -1;
      for (int z = 0; z < n; ++z)
        if (L.leq(x, z) && L.leq(y, z) && (lub < 0 || L.leq(z, lub))) lub = z;
      L.meets[static_cast<std::size_t>(x) * n + y] = glb < 0 ? x : glb;
      L.joins[static_cast<std::size_t>(x) * n + y] = lub < 0 ? x : lub;
    }
  }
  return L;
}

CheckReport check_ortholattice(const Ortholattice& L) {
  validate_lattice_shape(L);
  CheckReport rep;
  const int n = L.n;

  for (int x = 0; x < n && !rep.has("po-refl"); ++x)
    if (!L.leq(x, x)) rep.add("po-refl", {x}, wit(L, {x}));
  for (int x = 0; x < n && !rep.has("po-antisym"); ++x)
    for (int y = 0; y < n && !rep.has("po-antisym"); ++y)
      if (x != y && L.leq(x, y) && L.leq(y, x))
        rep.add("po-antisym", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("po-trans"); ++x)
    for (int y = 0; y < n && !rep.has("po-trans"); ++y)
      for (int z = 0; z < n && !rep.has("po-trans"); ++z)
        if (L.leq(x, y) && L.leq(y, z) && !L.leq(x, z))
          rep.add("po-trans", {x, y, z}, wit(L, {x, y, z}));

  for (int x = 0; x < n && !rep.has("bound-bot"); ++x)
    if (!L.leq(L.bot, x)) rep.add("bound-bot", {x}, wit(L, {x}));
  for (int x = 0; x < n && !rep.has("bound-top"); ++x)
    if (!L.leq(x, L.top)) rep.add("bound-top", {x}, wit(L, {x}));

  // meet/join tables must agree with the order: table entry is a bound and
  // dominates/undercuts every other bound.
  for (int x = 0; x < n && !rep.has("meet-glb"); ++x) {
    for (int y = 0; y < n && !rep.has("meet-glb"); ++y) {
      const int m = L.meet(x, y);
      bool ok = L.leq(m, x) && L.leq(m, y);
      for (int z = 0; ok && z < n; ++z)
        if (L.leq(z, x) && L.leq(z, y) && !L.leq(z, m)) ok = false;
      if (!ok) rep.add("meet-glb", {x, y}, wit(L, {x, y}));
    }
  }
  for (int x = 0; x < n && !rep.has("join-lub"); ++x) {
    for (int y = 0; y < n && !rep.has("join-lub"); ++y) {
      const int j = L.join(x, y);
      bool ok = L.leq(x, j) && L.leq(y, j);
      for (int z = 0; ok && z < n; ++z)
        if (L.leq(x, z) && L.leq(y, z) && !L.leq(j, z)) ok = false;
      if (!ok) rep.add("join-lub", {x, y}, wit(L, {x, y}));
    }
  }

  for (int x = 0; x < n && !rep.has("2(a)"); ++x)
    if (L.meet(x, L.comp(x)) != L.bot || L.join(x, L.comp(x)) != L.top)
      rep.add("2(a)", {x}, wit(L, {x}));
  for (int x = 0; x < n && !rep.has("2(b)"); ++x)
    for (int y = 0; y < n && !rep.has("2(b)"); ++y)
      if (L.leq(x, y) && !L.leq(L.comp(y), L.comp(x)))
        rep.add("2(b)", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("2(c)"); ++x)
    if (L.comp(L.comp(x)) != x) rep.add("2(c)", {x}, wit(L, {x}));

  return rep;
}

CheckReport check_orthomodular(const Ortholattice& L) {
  CheckReport pre = check_ortholattice(L);
  if (!pre.passed())
    throw Error(ErrorCode::NotOrtholattice,
                "check_orthomodular requires an ortholattice; " +
                    pre.summary());

  CheckReport rep;
  const int n = L.n;
  for (int x = 0; x < n && !rep.has("oml-quasi"); ++x)
    for (int y = 0; y < n && !rep.has("oml-quasi"); ++y)
      if (L.leq(x, y) && L.join(x, L.meet(L.comp(x), y)) != y)
        rep.add("oml-quasi", {x, y}, wit(L, {x, y}));
  for (int x = 0; x < n && !rep.has("oml-eq"); ++x)
    for (int y = 0; y < n && !rep.has("oml-eq"); ++y) {
      const int j = L.join(x, y);
      if (L.join(x, L.meet(L.comp(x), j)) != j)
        rep.add("oml-eq", {x, y}, wit(L, {x, y}));
    }

  // Cross-check: the two formulations are equivalent, so the verdicts must
  // match on every ortholattice.
  if (rep.has("oml-quasi") != rep.has("oml-eq"))
    throw Error(ErrorCode::InternalInconsistency,
                "orthomodularity formulations disagree: " + rep.summary());
  return rep;
}

}  // namespace oqkit
