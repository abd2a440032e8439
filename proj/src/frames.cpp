#include "oqkit/frames.hpp"

#include <algorithm>

namespace oqkit {

namespace {

void validate_frame_shape(const CylindricOrthoFrame& F) {
  if (F.m < 0 || F.dims < 0)
    throw Error(ErrorCode::MalformedTable, "negative carrier or dimension count");
  auto check_rows = [&](const std::vector<Bitset>& rows, const char* what) {
    if (rows.size() != static_cast<std::size_t>(F.m))
      throw Error(ErrorCode::MalformedTable,
                  std::string(what) + " does not have one row per point");
    for (const Bitset& r : rows)
      if (r.size() != F.m)
        throw Error(ErrorCode::MalformedTable,
                    std::string(what) + " row has the wrong width");
  };
  check_rows(F.perp, "perp relation");
  if (F.rels.size() != static_cast<std::size_t>(F.dims))
    throw Error(ErrorCode::MalformedTable,
                "expected one relation per dimension");
  for (const auto& rel : F.rels) check_rows(rel, "accessibility relation");
  if (F.deltas.size() != static_cast<std::size_t>(F.dims) * F.dims)
    throw Error(ErrorCode::MalformedTable, "delta table is not dims x dims");
  for (const Bitset& d : F.deltas)
    if (d.size() != F.m)
      throw Error(ErrorCode::MalformedTable, "delta subset has the wrong size");
  if (!F.point_labels.empty() &&
      F.point_labels.size() != static_cast<std::size_t>(F.m))
    throw Error(ErrorCode::MalformedTable, "label array is not length m");
}

std::vector<std::string> wit(const CylindricOrthoFrame& F,
                             std::vector<int> xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(F.label(x));
  return out;
}

// Image of a subset under a relation given by successor rows.
Bitset rel_image(const std::vector<Bitset>& rows, const Bitset& s, int m) {
  Bitset out(m);
  for (int x = 0; x < m; ++x)
    if (s.test(x)) out |= rows[x];
  return out;
}

// x (R o S) z  iff  x R y and y S z for some y.
std::vector<Bitset> compose(const std::vector<Bitset>& r,
                            const std::vector<Bitset>& s, int m) {
  std::vector<Bitset> out(m, Bitset(m));
  for (int x = 0; x < m; ++x) out[x] = rel_image(s, r[x], m);
  return out;
}

void require_valid_cqia(const CylindricQia& c, const char* op) {
  CheckReport pre = check_cylindric_qia(c);
  if (!pre.passed())
    throw Error(ErrorCode::InvalidCqia,
                std::string(op) +
                    " needs a cylindric quasi-implication algebra; " +
                    pre.summary());
}

}  // namespace

std::string CylindricOrthoFrame::label(int x) const {
  if (!point_labels.empty() && x >= 0 &&
      x < static_cast<int>(point_labels.size()))
    return point_labels[x];
  return std::to_string(x);
}

Bitset perp_set(const CylindricOrthoFrame& F, const Bitset& u) {
  Bitset out = Bitset::full(F.m);
  for (int y = 0; y < F.m; ++y)
    if (u.test(y)) out &= F.perp[y];
  return out;
}

CheckReport check_orthoframe(const CylindricOrthoFrame& F) {
  validate_frame_shape(F);
  CheckReport rep;
  for (int x = 0; x < F.m && !rep.has("irreflexive"); ++x)
    if (F.perp_at(x, x)) rep.add("irreflexive", {x}, wit(F, {x}));
  for (int x = 0; x < F.m && !rep.has("symmetric"); ++x)
    for (int y = 0; y < F.m && !rep.has("symmetric"); ++y)
      if (F.perp_at(x, y) != F.perp_at(y, x))
        rep.add("symmetric", {x, y}, wit(F, {x, y}));
  return rep;
}

CheckReport check_monadic_orthoframe(const CylindricOrthoFrame& F) {
  CheckReport rep = check_orthoframe(F);
  for (int i = 0; i < F.dims; ++i) {
    for (int x = 0; x < F.m && !rep.has("R-reflexive"); ++x)
      if (!F.rel(i, x, x))
        rep.add("R-reflexive", {i, x}, {std::to_string(i), F.label(x)});
    for (int x = 0; x < F.m && !rep.has("R-transitive"); ++x)
      for (int y = 0; y < F.m && !rep.has("R-transitive"); ++y)
        for (int z = 0; z < F.m && !rep.has("R-transitive"); ++z)
          if (F.rel(i, x, y) && F.rel(i, y, z) && !F.rel(i, x, z))
            rep.add("R-transitive", {i, x, y, z},
                    {std::to_string(i), F.label(x), F.label(y), F.label(z)});

    for (int x = 0; x < F.m; ++x) {
      const Bitset t = perp_set(F, F.rels[i][x]);  // R[{x}]-perp
      const Bitset image = rel_image(F.rels[i], t, F.m);
      if (!rep.has("mof-inclusion") && !image.is_subset_of(t)) {
        for (int z = 0; z < F.m; ++z)
          if (image.test(z) && !t.test(z)) {
            rep.add("mof-inclusion", {i, x, z},
                    {std::to_string(i), F.label(x), F.label(z)});
            break;
          }
      }
      if (!rep.has("mof-equality") && image != t) {
        for (int z = 0; z < F.m; ++z)
          if (image.test(z) != t.test(z)) {
            rep.add("mof-equality", {i, x, z},
                    {std::to_string(i), F.label(x), F.label(z)});
            break;
          }
      }
    }
  }
  return rep;
}

CheckReport check_cylindric_orthoframe(const CylindricOrthoFrame& F) {
  CheckReport rep = check_monadic_orthoframe(F);

  for (int i = 0; i < F.dims && !rep.has("commute"); ++i)
    for (int k = i + 1; k < F.dims && !rep.has("commute"); ++k) {
      const auto ik = compose(F.rels[i], F.rels[k], F.m);
      const auto ki = compose(F.rels[k], F.rels[i], F.m);
      for (int x = 0; x < F.m && !rep.has("commute"); ++x)
        if (ik[x] != ki[x])
          for (int z = 0; z < F.m; ++z)
            if (ik[x].test(z) != ki[x].test(z)) {
              rep.add("commute", {i, k, x, z},
                      {std::to_string(i), std::to_string(k), F.label(x),
                       F.label(z)});
              break;
            }
    }

  for (int i = 0; i < F.dims && !rep.has("delta-sym"); ++i)
    for (int k = i + 1; k < F.dims && !rep.has("delta-sym"); ++k)
      if (F.delta(i, k) != F.delta(k, i))
        rep.add("delta-sym", {i, k}, {std::to_string(i), std::to_string(k)});

  for (int i = 0; i < F.dims && !rep.has("delta-diag"); ++i)
    if (F.delta(i, i) != Bitset::full(F.m))
      rep.add("delta-diag", {i}, {std::to_string(i)});

  for (int i = 0; i < F.dims && !rep.has("delta-closed"); ++i)
    for (int k = 0; k < F.dims && !rep.has("delta-closed"); ++k)
      if (perp_set(F, perp_set(F, F.delta(i, k))) != F.delta(i, k))
        rep.add("delta-closed", {i, k},
                {std::to_string(i), std::to_string(k)});

  for (int i = 0; i < F.dims && !rep.has("delta-compose"); ++i)
    for (int k = 0; k < F.dims && !rep.has("delta-compose"); ++k)
      for (int l = 0; l < F.dims && !rep.has("delta-compose"); ++l) {
        if (i == k || l == k) continue;
        const Bitset image =
            rel_image(F.rels[k], F.delta(i, k) & F.delta(k, l), F.m);
        if (image != F.delta(i, l))
          rep.add("delta-compose", {i, k, l},
                  {std::to_string(i), std::to_string(k), std::to_string(l)});
      }

  return rep;
}

Bitset psi(const CylindricQia& c, int x) {
  const QiaTable& q = c.qia;
  const int u = unit_of(q);
  Bitset out(q.n);
  for (int y = 0; y < q.n; ++y)
    if ((!q.zero || y != *q.zero) && q.dot(y, x) == u) out.set(y);
  return out;
}

CylindricOrthoFrame maclaren_frame(const CylindricQia& c,
                                   const Limits& limits) {
  require_valid_cqia(c, "maclaren_frame");
  const QiaTable& q = c.qia;
  if (q.n > limits.max_base)
    throw Error(ErrorCode::TooLarge,
                "source algebra exceeds the frame cap " +
                    std::to_string(limits.max_base));
  const int u = unit_of(q);
  const int z = *q.zero;

  std::vector<int> elems;
  for (int e = 0; e < q.n; ++e)
    if (e != z) elems.push_back(e);
  const int m = static_cast<int>(elems.size());

  CylindricOrthoFrame F;
  F.m = m;
  F.dims = c.dims;
  F.perp.assign(m, Bitset(m));
  F.rels.assign(c.dims, std::vector<Bitset>(m, Bitset(m)));
  F.deltas.assign(static_cast<std::size_t>(c.dims) * c.dims, Bitset(m));
  for (int p = 0; p < m; ++p) {
    F.point_labels.push_back(q.label(elems[p]));
    for (int r = 0; r < m; ++r) {
      if (q.dot(elems[p], q.dot(elems[r], z)) == u) F.perp[p].set(r);
      for (int i = 0; i < c.dims; ++i)
        if (q.dot(elems[r], c.dia(i, elems[p])) == u) F.rels[i][p].set(r);
    }
    for (int i = 0; i < c.dims; ++i)
      for (int k = 0; k < c.dims; ++k)
        if (q.dot(elems[p], c.d(i, k)) == u)
          F.deltas[static_cast<std::size_t>(i) * c.dims + k].set(p);
  }
  return F;
}

FilterSubset principal_filter(const CylindricQia& c, int x) {
  const QiaTable& q = c.qia;
  if (x < 0 || x >= q.n)
    throw Error(ErrorCode::MalformedTable, "generator out of range");
  if (q.zero && x == *q.zero)
    throw Error(ErrorCode::ZeroGenerator,
                "the upset of zero is not a proper filter");
  const int u = unit_of(q);
  Bitset out(q.n);
  for (int y = 0; y < q.n; ++y)
    if (q.dot(x, y) == u) out.set(y);
  return out;
}

std::vector<FilterSubset> enumerate_proper_filters(const CylindricQia& c,
                                                   const Limits& limits) {
  require_valid_cqia(c, "enumerate_proper_filters");
  const QiaTable& q = c.qia;
  if (q.n > limits.max_elems)
    throw Error(ErrorCode::TooLarge, "algebra exceeds the element cap");
  const int z = *q.zero;

  std::vector<FilterSubset> filters;
  for (int x = 0; x < q.n; ++x)
    if (x != z) filters.push_back(principal_filter(c, x));
  std::sort(filters.begin(), filters.end(),
            [](const Bitset& a, const Bitset& b) {
              return Bitset::lex_compare(a, b) < 0;
            });
  for (std::size_t i = 1; i < filters.size(); ++i)
    if (filters[i] == filters[i - 1])
      throw Error(ErrorCode::TheoremViolation,
                  "two elements generate the same principal filter, which "
                  "contradicts antisymmetry of the derived order");
  return filters;
}

std::optional<FilterSubset> filter_generated(const CylindricQia& c,
                                             const Bitset& generators) {
  const QiaTable& q = c.qia;
  if (generators.size() != q.n)
    throw Error(ErrorCode::MalformedTable,
                "generator set has the wrong size");
  if (generators.none())
    throw Error(ErrorCode::EmptyGenerator,
                "a filter needs at least one generator");
  const int u = unit_of(q);

  Bitset members = generators;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < q.n; ++x) {
      if (!members.test(x)) continue;
      for (int y = 0; y < q.n; ++y) {
        if (!members.test(y)) {
          if (q.dot(x, y) == u) {  // upward closure
            members.set(y);
            changed = true;
          }
        }
        if (members.test(y)) {
          const int meet = qia_meet(q, x, y);
          if (!members.test(meet)) {
            members.set(meet);
            changed = true;
          }
        }
      }
    }
  }
  if (q.zero && members.test(*q.zero)) return std::nullopt;
  return members;
}

namespace {

// The generator of a principal filter: its member whose upset is the filter.
int generator_of(const CylindricQia& c, const Bitset& filter) {
  for (int e : filter.to_indices())
    if (principal_filter(c, e) == filter) return e;
  throw Error(ErrorCode::TheoremViolation,
              "proper filter of a finite algebra has no generator");
}

}  // namespace

CylindricOrthoFrame goldblatt_frame(const CylindricQia& c,
                                    const Limits& limits) {
  require_valid_cqia(c, "goldblatt_frame");
  const QiaTable& q = c.qia;
  if (q.n > limits.max_base)
    throw Error(ErrorCode::TooLarge,
                "source algebra exceeds the frame cap " +
                    std::to_string(limits.max_base));
  const std::vector<FilterSubset> filters =
      enumerate_proper_filters(c, limits);
  const int m = static_cast<int>(filters.size());
  if (m > limits.max_filters)
    throw Error(ErrorCode::TooLarge, "filter count exceeds the cap");
  const int z = *q.zero;

  CylindricOrthoFrame F;
  F.m = m;
  F.dims = c.dims;
  F.perp.assign(m, Bitset(m));
  F.rels.assign(c.dims, std::vector<Bitset>(m, Bitset(m)));
  F.deltas.assign(static_cast<std::size_t>(c.dims) * c.dims, Bitset(m));

  for (int p = 0; p < m; ++p) {
    F.point_labels.push_back("^" + q.label(generator_of(c, filters[p])));
    const auto members = filters[p].to_indices();
    for (int r = 0; r < m; ++r) {
      for (int x : members)
        if (filters[r].test(q.dot(x, z))) {
          F.perp[p].set(r);
          break;
        }
      for (int i = 0; i < c.dims; ++i) {
        bool contained = true;
        for (int x : members)
          if (!filters[r].test(c.dia(i, x))) {
            contained = false;
            break;
          }
        if (contained) F.rels[i][p].set(r);
      }
    }
    for (int i = 0; i < c.dims; ++i)
      for (int k = 0; k < c.dims; ++k)
        if (filters[p].test(c.d(i, k)))
          F.deltas[static_cast<std::size_t>(i) * c.dims + k].set(p);
  }
  return F;
}

CheckReport check_canonical_iso(const CylindricQia& c, const Limits& limits) {
  const CylindricOrthoFrame M = maclaren_frame(c, limits);
  const CylindricOrthoFrame G = goldblatt_frame(c, limits);
  const std::vector<FilterSubset> filters =
      enumerate_proper_filters(c, limits);
  const QiaTable& q = c.qia;
  const int z = *q.zero;

  std::vector<int> elems;
  for (int e = 0; e < q.n; ++e)
    if (e != z) elems.push_back(e);

  CheckReport rep;
  if (M.m != G.m) rep.add("iso-bijection", {}, {});

  // to_point[p] = Goldblatt index of the upset of the p-th nonzero element.
  std::vector<int> to_point(elems.size(), -1);
  for (std::size_t p = 0; p < elems.size(); ++p) {
    const Bitset up = principal_filter(c, elems[p]);
    for (std::size_t r = 0; r < filters.size(); ++r)
      if (filters[r] == up) {
        to_point[p] = static_cast<int>(r);
        break;
      }
    if (to_point[p] < 0 && !rep.has("iso-bijection"))
      rep.add("iso-bijection", {elems[p]}, {q.label(elems[p])});
  }
  if (!rep.passed()) return rep;

  for (int p = 0; p < M.m && !rep.has("iso-perp"); ++p)
    for (int r = 0; r < M.m && !rep.has("iso-perp"); ++r)
      if (M.perp_at(p, r) != G.perp_at(to_point[p], to_point[r]))
        rep.add("iso-perp", {elems[p], elems[r]},
                {q.label(elems[p]), q.label(elems[r])});

  for (int i = 0; i < c.dims && !rep.has("iso-rel"); ++i)
    for (int p = 0; p < M.m && !rep.has("iso-rel"); ++p)
      for (int r = 0; r < M.m && !rep.has("iso-rel"); ++r)
        if (M.rel(i, p, r) != G.rel(i, to_point[p], to_point[r]))
          rep.add("iso-rel", {i, elems[p], elems[r]},
                  {std::to_string(i), q.label(elems[p]), q.label(elems[r])});

  for (int i = 0; i < c.dims && !rep.has("iso-delta"); ++i)
    for (int k = 0; k < c.dims && !rep.has("iso-delta"); ++k)
      for (int p = 0; p < M.m && !rep.has("iso-delta"); ++p)
        if (M.delta(i, k).test(p) != G.delta(i, k).test(to_point[p]))
          rep.add("iso-delta", {i, k, elems[p]},
                  {std::to_string(i), std::to_string(k), q.label(elems[p])});

  return rep;
}

}  // namespace oqkit
