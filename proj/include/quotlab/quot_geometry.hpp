#pragma once

// Punctual Quot schemes F_n in Pluecker coordinates.
//
// Columns of every n x nr matrix are e_i*t^j, i major and j minor, numbered
// from 1; rows are the coefficients of 1, t, ..., t^(n-1).  Pluecker
// coordinates are indexed by sorted n-subsets of columns in lexicographic
// order, which is also the variable order of the closure ring.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quotlab/audit.hpp"
#include "quotlab/errors.hpp"
#include "quotlab/fp_linalg.hpp"
#include "quotlab/groebner.hpp"
#include "quotlab/local_modules.hpp"
#include "quotlab/polynomial.hpp"
#include "quotlab/symbolic_matrix.hpp"

namespace quotlab {

using Subset = std::vector<int>;

/// All sorted k-subsets of {1..ncols} in lexicographic order.
inline std::vector<Subset> column_subsets(int ncols, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > ncols) return out;
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == ncols - k + i + 1) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// "p13", or "p_{1,10}" once some column index has two digits.
inline std::string plucker_name(const Subset& s, int ncols) {
  std::string out = "p";
  if (ncols < 10) {
    for (int c : s) out += std::to_string(c);
    return out;
  }
  out += "_{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

inline std::vector<std::string> plucker_names(int n, int r) {
  std::vector<std::string> names;
  for (const auto& s : column_subsets(n * r, n)) names.push_back(plucker_name(s, n * r));
  return names;
}

inline std::string chart_var(int i, int j) { return "a_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

/// a_{i,j} for 2 <= i <= r, 0 <= j < n, block by block.
inline std::vector<std::string> chart_variables(int n, int r) {
  std::vector<std::string> v;
  for (int i = 2; i <= r; ++i)
    for (int j = 0; j < n; ++j) v.push_back(chart_var(i, j));
  return v;
}

template <class D>
struct ChartMatrix {
  int n = 0, r = 0;
  RingPtr<D> ring;
  PolyMatrix<D> entries;

  /// The n x n block A_i (1-based).
  PolyMatrix<D> block(int i) const {
    std::vector<std::size_t> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      rows[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k);
      cols[static_cast<std::size_t>(k)] = static_cast<std::size_t>((i - 1) * n + k);
    }
    return submatrix(entries, rows, cols);
  }
};

template <class D>
ChartMatrix<D> chart_matrix(int n, int r, const D& dom = D{}) {
  if (n < 1) throw AlgebraError("chart_matrix: need n >= 1");
  if (r < 2) throw AlgebraError("chart_matrix: need r >= 2");
  ChartMatrix<D> cm{n, r, PolyRing<D>::make(chart_variables(n, r), dom), {}};
  using P = Polynomial<D>;
  cm.entries.assign(static_cast<std::size_t>(n), std::vector<P>(static_cast<std::size_t>(n * r), P(cm.ring)));
  for (int k = 0; k < n; ++k) {
    cm.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = P::from_int(cm.ring, 1);
    for (int i = 2; i <= r; ++i)
      for (int j = 0; j <= k; ++j)
        cm.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>((i - 1) * n + j)] =
            P::variable(cm.ring, chart_var(i, k - j));
  }
  return cm;
}

/// Maximal minors keyed by column subset (lexicographic map order).
template <class D>
std::map<Subset, Polynomial<D>> plucker_minors(const ChartMatrix<D>& cm) {
  std::map<Subset, Polynomial<D>> out;
  std::vector<std::size_t> rows(static_cast<std::size_t>(cm.n));
  for (int k = 0; k < cm.n; ++k) rows[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k);
  for (const auto& s : column_subsets(cm.n * cm.r, cm.n)) {
    std::vector<std::size_t> cols;
    for (int c : s) cols.push_back(static_cast<std::size_t>(c - 1));
    out.emplace(s, symbolic_det(submatrix(cm.entries, rows, cols)));
  }
  return out;
}

/// (det A_1, det A_2): the restrictions of p_{1..n} and p_{n+1..2n} to the chart.
template <class D>
std::pair<Polynomial<D>, Polynomial<D>> divisor_witness(int n, int r, const D& dom = D{}) {
  auto cm = chart_matrix<D>(n, r, dom);
  return {symbolic_det(cm.block(1)), symbolic_det(cm.block(2))};
}

struct ImageGuard {
  long max_ambient = 70;
  std::vector<std::pair<int, int>> allowed{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
};

template <class D>
struct QuotIdeal {
  int n = 0, r = 0;
  Ideal<D> chart;    // in p_S, S != {1..n}
  Ideal<D> closure;  // homogeneous, all p_S in lexicographic order
  int chart_dim = 0;
  long ambient = 0;  // number of Pluecker coordinates

  int projective_dim() const { return chart_dim; }
};

inline void check_image_guard(int n, int r, const ImageGuard& guard) {
  if (binomial(n * r, n) > guard.max_ambient)
    throw GuardError("image_ideal: " + std::to_string(binomial(n * r, n)) + " Pluecker coordinates exceed the guard");
  if (std::find(guard.allowed.begin(), guard.allowed.end(), std::make_pair(n, r)) == guard.allowed.end())
    throw GuardError("image_ideal: (n,r)=(" + std::to_string(n) + "," + std::to_string(r) +
                     ") is outside the elimination guard");
}

/// Defining ideal of F_n: eliminate the chart variables from the graph of
/// the minor map, then take the projective closure with hvar p_{1..n}.
template <Field D>
QuotIdeal<D> image_ideal(int n, int r, const D& dom = D{}, const BuchbergerOptions& opt = {},
                         const ImageGuard& guard = {}) {
  check_image_guard(n, r, guard);
  auto cm = chart_matrix<D>(n, r, dom);
  auto minors = plucker_minors(cm);
  const auto all = plucker_names(n, r);
  const std::vector<std::string> avars = chart_variables(n, r);
  std::vector<std::string> names = avars;
  names.insert(names.end(), all.begin() + 1, all.end());
  auto graph = PolyRing<D>::make(names, dom, MonomialOrder::block_elimination(avars.size()));
  std::vector<int> into(avars.size());
  for (std::size_t i = 0; i < avars.size(); ++i) into[i] = static_cast<int>(i);
  std::vector<Polynomial<D>> gens;
  std::size_t k = 0;
  for (const auto& [s, m] : minors) {
    if (k++ == 0) continue;  // p_{1..n} = 1 on the chart
    gens.push_back(Polynomial<D>::variable(graph, plucker_name(s, n * r)) - transfer(m, graph, into));
  }
  Ideal<D> chart = eliminate(Ideal<D>(graph, gens), avars, opt);
  const int dim = krull_dim(*chart.cached_basis());
  Ideal<D> closure = projective_closure(chart, all.front(), opt);
  return QuotIdeal<D>{n, r, chart, closure, dim, static_cast<long>(all.size())};
}

/// Each generator of the chart ideal vanishes after p_S -> minor_S(a).
template <Field D>
bool elimination_sound(const QuotIdeal<D>& qi) {
  auto cm = chart_matrix<D>(qi.n, qi.r, qi.chart.ring()->domain());
  auto minors = plucker_minors(cm);
  const auto avars = chart_variables(qi.n, qi.r);
  std::vector<std::string> names = avars;
  for (const auto& nm : plucker_names(qi.n, qi.r)) names.push_back(nm);
  auto full = PolyRing<D>::make(names, cm.ring->domain());
  std::vector<int> into(avars.size());
  for (std::size_t i = 0; i < avars.size(); ++i) into[i] = static_cast<int>(i);
  Binding<D> b;
  for (const auto& [s, m] : minors) b.emplace(plucker_name(s, qi.n * qi.r), transfer(m, full, into));
  for (const auto& g : qi.chart.generators())
    if (!substitute(transfer_by_name(g, full), b).is_zero()) return false;
  for (const auto& g : qi.closure.generators())
    if (!substitute(transfer_by_name(g, full), b).is_zero()) return false;
  return true;
}

/// Dehomogenizing the closure at p_{1..n} gives back the chart ideal.
template <Field D>
bool closure_round_trip(const QuotIdeal<D>& qi) {
  const auto& cring = qi.chart.ring();
  const auto& hring = qi.closure.ring();
  std::vector<int> down(hring->nvars(), -1), up(cring->nvars());
  for (std::size_t i = 1; i < hring->nvars(); ++i) down[i] = static_cast<int>(i - 1);
  for (std::size_t i = 0; i < cring->nvars(); ++i) up[i] = static_cast<int>(i + 1);
  GroebnerBasis<D> cgb = buchberger(qi.chart, MonomialOrder::grevlex());
  GroebnerBasis<D> hgb = buchberger(qi.closure, MonomialOrder::grevlex());
  // dehomogenize by substituting p_{1..n} = 1, then drop the variable
  auto one = Polynomial<D>::constant(hring, hring->domain().one());
  std::vector<Polynomial<D>> deh;
  for (const auto& g : hgb.elements) deh.push_back(transfer(substitute(g, {{hring->name(0), one}}), cring, down));
  for (const auto& f : deh)
    if (!normal_form(f, cgb).is_zero()) return false;
  if (deh.empty()) return cgb.elements.empty();
  GroebnerBasis<D> dgb = buchberger(deh, MonomialOrder::grevlex());
  for (const auto& f : cgb.elements)
    if (!normal_form(f, dgb).is_zero()) return false;
  return true;
}

/// Normalized point of P^(C(nr,n)-1) over F_q.
struct PluckerPoint {
  int n = 0, r = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> coords;  // lexicographic subset order

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ":" : "") << coords[i];
    os << "]";
    return os.str();
  }
  auto operator<=>(const PluckerPoint&) const = default;
};

/// Scale so that the first nonzero coordinate is 1.  Throws on the zero vector.
inline void normalize_projective(std::vector<std::uint32_t>& v, const PrimeField& f) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) throw AlgebraError("projective point with all coordinates zero");
  const auto inv = f.inv(*it);
  for (auto& x : v) x = f.mul(x, inv);
}

namespace detail {

inline int sort_sign(std::vector<int>& s) {
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return 0;
  return sign;
}

}  // namespace detail

/// Every three-term relation p_{Iab}p_{Icd} - p_{Iac}p_{Ibd} + p_{Iad}p_{Ibc} = 0.
inline bool satisfies_plucker_relations(const PluckerPoint& pt) {
  if (pt.n < 2) return true;
  const PrimeField f(pt.q);
  const int ncols = pt.n * pt.r;
  const auto subsets = column_subsets(ncols, pt.n);
  std::map<Subset, std::size_t> pos;
  for (std::size_t i = 0; i < subsets.size(); ++i) pos.emplace(subsets[i], i);
  auto coord = [&](const Subset& base, int x, int y) -> std::uint32_t {
    std::vector<int> s = base;
    s.push_back(x);
    s.push_back(y);
    int sign = detail::sort_sign(s);
    if (sign == 0) return 0;
    auto v = pt.coords[pos.at(s)];
    return sign > 0 ? v : f.neg(v);
  };
  for (const auto& base : column_subsets(ncols, pt.n - 2)) {
    std::vector<int> rest;
    for (int c = 1; c <= ncols; ++c)
      if (!std::binary_search(base.begin(), base.end(), c)) rest.push_back(c);
    for (const auto& abcd : column_subsets(static_cast<int>(rest.size()), 4)) {
      int a = rest[static_cast<std::size_t>(abcd[0] - 1)], b = rest[static_cast<std::size_t>(abcd[1] - 1)];
      int c = rest[static_cast<std::size_t>(abcd[2] - 1)], d = rest[static_cast<std::size_t>(abcd[3] - 1)];
      auto v = f.add(f.sub(f.mul(coord(base, a, b), coord(base, c, d)), f.mul(coord(base, a, c), coord(base, b, d))),
                     f.mul(coord(base, a, d), coord(base, b, c)));
      if (v != 0) return false;
    }
  }
  return true;
}

/// Maximal minors of an n x nr matrix of rank n, normalized.
inline PluckerPoint plucker_of_matrix(const FpRows& m, int n, int r, std::uint32_t q) {
  const PrimeField f(q);
  if (static_cast<int>(m.size()) != n) throw AlgebraError("plucker_of_matrix: expected n rows");
  PluckerPoint pt{n, r, q, {}};
  for (const auto& s : column_subsets(n * r, n)) {
    FpRows sub(static_cast<std::size_t>(n), FpVector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(s[static_cast<std::size_t>(j)] - 1)];
    pt.coords.push_back(fp_det(std::move(sub), f));
  }
  normalize_projective(pt.coords, f);
  auto& ctr = audit::counters();
  ++ctr.points_emitted;
  if (ctr.enabled) {
    if (satisfies_plucker_relations(pt)) ++ctr.points_verified;
    else ++ctr.point_failures;
  }
  return pt;
}

/// Rows spanning the annihilator of A: a matrix whose kernel is A.
inline FpRows quotient_matrix(const Submodule& a) {
  return null_space(a.basis(), static_cast<std::size_t>(a.shape().dim()), a.field());
}

inline PluckerPoint plucker_of_submodule(const Submodule& a) {
  if (a.colength() != a.level())
    throw AlgebraError("plucker_of_submodule: colength " + std::to_string(a.colength()) + " differs from level " +
                       std::to_string(a.level()));
  return plucker_of_matrix(quotient_matrix(a), a.level(), a.rank(), a.q());
}

/// The point of the chart U_1 with the given a_{i,j} values (chart_variables order).
inline Submodule chart_submodule(int n, int r, std::uint32_t q, const std::vector<std::uint32_t>& a) {
  if (static_cast<int>(a.size()) != n * (r - 1)) throw AlgebraError("chart_submodule: wrong number of chart values");
  const PrimeField f(q);
  FpRows m(static_cast<std::size_t>(n), FpVector(static_cast<std::size_t>(n * r), 0));
  for (int k = 0; k < n; ++k) {
    m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    for (int i = 2; i <= r; ++i)
      for (int j = 0; j <= k; ++j)
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>((i - 1) * n + j)] =
            f.from_int(a[static_cast<std::size_t>((i - 2) * n + (k - j))]);
  }
  ModuleShape s{n, r, q};
  return Submodule(s, null_space(m, static_cast<std::size_t>(s.dim()), f));
}

/// Normalized F_q-points of the projective zero set of a homogeneous ideal.
/// Linear forms of the reduced grevlex basis are solved for their leading
/// variables; only the free coordinates are enumerated.
inline std::vector<std::vector<std::uint32_t>> projective_points(const Ideal<PrimeField>& ideal,
                                                                 int max_free = 22,
                                                                 const BuchbergerOptions& opt = {}) {
  const auto& ring = ideal.ring();
  const PrimeField f = ring->domain();
  const std::size_t nv = ring->nvars();
  GroebnerBasis<PrimeField> gb = buchberger(ideal, MonomialOrder::grevlex(), opt);
  if (gb.is_unit_ideal()) return {};
  std::vector<const Polynomial<PrimeField>*> linear;
  std::vector<char> pivot(nv, 0);
  for (const auto& g : gb.elements)
    if (g.total_degree() == 1 && g.is_homogeneous()) {
      linear.push_back(&g);
      for (std::size_t v = 0; v < nv; ++v)
        if (g.leading_monomial()[v]) pivot[v] = 1;
    }
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < nv; ++v)
    if (!pivot[v]) free_vars.push_back(v);
  if (static_cast<int>(free_vars.size()) > max_free) throw GuardError("projective_points: too many free coordinates");
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t k = free_vars.size();
  std::vector<std::uint32_t> x(nv, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < k; ++i) count *= f.modulus();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(x.begin(), x.end(), 0);
      x[free_vars[lead]] = 1;
      std::uint64_t c = code;
      for (std::size_t i = lead + 1; i < k; ++i) {
        x[free_vars[i]] = static_cast<std::uint32_t>(c % f.modulus());
        c /= f.modulus();
      }
      // pivot = -(remaining terms), which involve free variables only
      for (const auto* g : linear) {
        std::size_t pv = 0;
        while (!g->leading_monomial()[pv]) ++pv;
        std::uint32_t acc = 0;
        for (std::size_t t = 1; t < g->terms().size(); ++t) {
          const auto& term = g->terms()[t];
          std::size_t v = 0;
          while (!term.mono[v]) ++v;
          acc = f.add(acc, f.mul(term.coeff, x[v]));
        }
        x[pv] = f.neg(acc);
      }
      bool ok = true;
      for (const auto& g : gb.elements)
        if (evaluate(g, std::span<const std::uint32_t>(x)) != 0) {
          ok = false;
          break;
        }
      if (ok) {
        auto p = x;
        normalize_projective(p, f);
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quotlab
