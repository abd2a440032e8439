#include "oqkit/catalog.hpp"

#include <stdexcept>
#include <string>

namespace oqkit {

namespace {

// Digit for a coordinate value; bases up to 16 print as hex digits.
char base_digit(int v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

std::string subset_label(unsigned mask, const std::vector<std::string>& atom) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atom.size(); ++i) {
    if (mask >> i & 1u) {
      if (!first) out += ",";
      out += atom[i];
      first = false;
    }
  }
  return out + "}";
}

// Powerset lattice over `atoms` named atoms; element x is the subset with
// characteristic mask x.
Ortholattice powerset_lattice(int atoms, std::vector<std::string> atom_names,
                              const Limits& limits) {
  if (atoms < 0) throw std::invalid_argument("atom count must be >= 0");
  if (atoms >= 31 || (1 << atoms) > limits.max_elems)
    throw Error(ErrorCode::TooLarge,
                "powerset lattice would have 2^" + std::to_string(atoms) +
                    " elements (cap " + std::to_string(limits.max_elems) + ")");
  const int n = 1 << atoms;
  const unsigned full = static_cast<unsigned>(n - 1);
  std::vector<std::uint8_t> order(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> ocomp(n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    ocomp[x] = static_cast<int>(full & ~static_cast<unsigned>(x));
    labels[x] = subset_label(static_cast<unsigned>(x), atom_names);
    for (int y = 0; y < n; ++y)
      order[static_cast<std::size_t>(x) * n + y] = (x & ~y) == 0 ? 1 : 0;
  }
  return lattice_from_order(n, std::move(order), std::move(ocomp), 0, n - 1,
                            std::move(labels));
}

}  // namespace

Ortholattice boolean_algebra(int atoms, const Limits& limits) {
  std::vector<std::string> names;
  for (int i = 0; i < atoms; ++i) names.push_back(std::to_string(i));
  return powerset_lattice(atoms, std::move(names), limits);
}

Ortholattice mo(int pairs, const Limits& limits) {
  if (pairs < 1) throw std::invalid_argument("MO_m needs at least one pair");
  const int n = 2 * pairs + 2;
  if (n > limits.max_elems)
    throw Error(ErrorCode::TooLarge, "MO_" + std::to_string(pairs) +
                                         " exceeds the element cap");
  const int bot = 0, top = n - 1;
  std::vector<std::uint8_t> order(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    order[static_cast<std::size_t>(x) * n + x] = 1;
    order[static_cast<std::size_t>(bot) * n + x] = 1;
    order[static_cast<std::size_t>(x) * n + top] = 1;
  }
  std::vector<int> ocomp(n);
  ocomp[bot] = top;
  ocomp[top] = bot;
  std::vector<std::string> labels(n);
  labels[bot] = "0";
  labels[top] = "1";
  for (int p = 0; p < pairs; ++p) {
    const int a = 1 + 2 * p, ap = 2 + 2 * p;
    ocomp[a] = ap;
    ocomp[ap] = a;
    std::string base =
        p < 26 ? std::string(1, char('a' + p)) : "m" + std::to_string(p);
    labels[a] = base;
    labels[ap] = base + "'";
  }
  return lattice_from_order(n, std::move(order), std::move(ocomp), bot, top,
                            std::move(labels));
}

Ortholattice o6() {
  const int n = 6;
  const int bot = 0, a = 1, b = 2, ap = 3, bp = 4, top = 5;
  std::vector<std::uint8_t> order(36, 0);
  auto set = [&](int x, int y) { order[static_cast<std::size_t>(x) * n + y] = 1; };
  for (int x = 0; x < n; ++x) {
    set(x, x);
    set(bot, x);
    set(x, top);
  }
  set(a, b);
  set(bp, ap);
  std::vector<int> ocomp = {top, ap, bp, a, b, bot};
  return lattice_from_order(n, std::move(order), std::move(ocomp), bot, top,
                            {"0", "a", "b", "a'", "b'", "1"});
}

QuantifierMap simple_quantifier(const Ortholattice& L) {
  QuantifierMap q(static_cast<std::size_t>(L.n));
  for (int x = 0; x < L.n; ++x) q[x] = x == L.bot ? L.bot : L.top;
  return q;
}

QuantumCylindricAlgebra cylindric_set_algebra(int base, int dims,
                                              const Limits& limits) {
  if (base < 1) throw std::invalid_argument("base size must be >= 1");
  if (dims < 0) throw std::invalid_argument("dimension count must be >= 0");

  long long space = 1;
  for (int j = 0; j < dims; ++j) {
    space *= base;
    if (space > limits.max_base)
      throw Error(ErrorCode::TooLarge,
                  "function space " + std::to_string(base) + "^" +
                      std::to_string(dims) + " exceeds the base cap " +
                      std::to_string(limits.max_base));
  }
  const int funcs = static_cast<int>(space);

  // Functions base^dims are numbered with coordinate 0 most significant.
  auto coord = [&](int f, int j) {
    for (int t = dims - 1; t > j; --t) f /= base;
    return f % base;
  };
  std::vector<std::string> func_names(funcs);
  for (int f = 0; f < funcs; ++f)
    for (int j = 0; j < dims; ++j) func_names[f] += base_digit(coord(f, j));
  if (dims == 0) func_names[0] = "()";

  QuantumCylindricAlgebra A;
  A.lattice = powerset_lattice(funcs, func_names, limits);
  A.dims = dims;
  const int n = A.lattice.n;

  // Cylinder of f along coordinate i: every g agreeing with f off i.
  std::vector<std::vector<unsigned>> cylinder(
      dims, std::vector<unsigned>(funcs, 0));
  for (int i = 0; i < dims; ++i)
    for (int f = 0; f < funcs; ++f)
      for (int g = 0; g < funcs; ++g) {
        bool agree = true;
        for (int j = 0; agree && j < dims; ++j)
          if (j != i && coord(f, j) != coord(g, j)) agree = false;
        if (agree) cylinder[i][f] |= 1u << g;
      }

  for (int i = 0; i < dims; ++i) {
    QuantifierMap q(n);
    for (int s = 0; s < n; ++s) {
      unsigned image = 0;
      for (int f = 0; f < funcs; ++f)
        if (s >> f & 1) image |= cylinder[i][f];
      q[s] = static_cast<int>(image);
    }
    A.quantifiers.push_back(std::move(q));
  }

  A.diag.assign(static_cast<std::size_t>(dims) * dims, 0);
  for (int i = 0; i < dims; ++i)
    for (int k = 0; k < dims; ++k) {
      unsigned d = 0;
      for (int f = 0; f < funcs; ++f)
        if (coord(f, i) == coord(f, k)) d |= 1u << f;
      A.diag[static_cast<std::size_t>(i) * dims + k] = static_cast<int>(d);
    }
  return A;
}

QuantumCylindricAlgebra with_simple_quantifiers(const Ortholattice& L,
                                                int dims) {
  if (dims < 0) throw std::invalid_argument("dimension count must be >= 0");
  CheckReport ol = check_ortholattice(L);
  if (!ol.passed())
    throw Error(ErrorCode::NotOrthomodular,
                "input is not an ortholattice; " + ol.summary());
  CheckReport oml = check_orthomodular(L);
  if (!oml.passed())
    throw Error(ErrorCode::NotOrthomodular,
                "input fails the orthomodular law; " + oml.summary());

  QuantumCylindricAlgebra A;
  A.lattice = L;
  A.dims = dims;
  for (int i = 0; i < dims; ++i) A.quantifiers.push_back(simple_quantifier(L));
  A.diag.assign(static_cast<std::size_t>(dims) * dims, L.top);
  return A;
}

}  // namespace oqkit
