#pragma once

// Buchberger's algorithm and the ideal-theoretic operations built on it:
// normal forms, elimination, Krull dimension from the leading-term staircase,
// projective closure, Jacobian singular ideals, quadric rank and radical
// membership.

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quotlab/audit.hpp"
#include "quotlab/errors.hpp"
#include "quotlab/polynomial.hpp"
#include "quotlab/symbolic_matrix.hpp"

namespace quotlab {

using Clock = std::chrono::steady_clock;

struct BuchbergerOptions {
  std::optional<Clock::time_point> deadline;
};

/// Reduced monic Groebner basis, sorted ascending by leading monomial.
template <class D>
struct GroebnerBasis {
  RingPtr<D> ring;  // carries the order the basis was computed under
  std::vector<Polynomial<D>> elements;

  const MonomialOrder& order() const { return ring->order(); }
  bool is_unit_ideal() const { return elements.size() == 1 && elements[0].is_constant(); }
  std::size_t size() const { return elements.size(); }
};

/// Generators with an optional reduced basis attached.
template <class D>
class Ideal {
 public:
  Ideal(RingPtr<D> ring, std::vector<Polynomial<D>> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) {
        if (g.ring()->names() != ring_->names()) throw AlgebraError("ideal generator from a different ring");
        g = g.in_ring(ring_);
      }
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<D>& ring() const { return ring_; }
  const std::vector<Polynomial<D>>& generators() const { return gens_; }
  const std::optional<GroebnerBasis<D>>& cached_basis() const { return basis_; }

  Ideal with_basis(GroebnerBasis<D> gb) const {
    if (gb.ring->names() != ring_->names()) throw AlgebraError("basis from a different ring");
    Ideal r = *this;
    r.basis_ = std::move(gb);
    return r;
  }

 private:
  RingPtr<D> ring_;
  std::vector<Polynomial<D>> gens_;
  std::optional<GroebnerBasis<D>> basis_;
};

namespace detail {

template <class D>
struct ReducerIndex {
  // positions into the basis, sorted by ascending leading monomial, ties by position
  std::vector<std::size_t> by_lm;

  void build(const std::vector<Polynomial<D>>& g, const MonomialOrder& ord) {
    by_lm.resize(g.size());
    std::iota(by_lm.begin(), by_lm.end(), 0);
    std::stable_sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
      return ord.compare(g[a].leading_monomial(), g[b].leading_monomial()) < 0;
    });
  }
  void insert(const std::vector<Polynomial<D>>& g, std::size_t pos, const MonomialOrder& ord) {
    auto it = std::upper_bound(by_lm.begin(), by_lm.end(), pos, [&](std::size_t a, std::size_t b) {
      return ord.compare(g[a].leading_monomial(), g[b].leading_monomial()) < 0;
    });
    by_lm.insert(it, pos);
  }
  const Polynomial<D>* find(const std::vector<Polynomial<D>>& g, const Monomial& m, std::size_t skip = SIZE_MAX) const {
    for (auto i : by_lm)
      if (i != skip && g[i].leading_monomial().divides(m)) return &g[i];
    return nullptr;
  }
};

// Reduce only while the leading term is divisible by some basis leading term.
template <class D>
Polynomial<D> top_reduce(Polynomial<D> p, const std::vector<Polynomial<D>>& g, const ReducerIndex<D>& idx) {
  const auto& dom = p.dom();
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    const Polynomial<D>* r = idx.find(g, lt.mono);
    if (!r) break;
    auto c = dom.mul(lt.coeff, dom.inv(r->leading_coeff()));
    p = p - r->mul_term(lt.mono.divided_by(r->leading_monomial()), c);
  }
  return p;
}

template <class D>
Polynomial<D> full_reduce(Polynomial<D> p, const std::vector<Polynomial<D>>& g, const ReducerIndex<D>& idx,
                          std::size_t skip = SIZE_MAX) {
  const auto& dom = p.dom();
  std::vector<typename Polynomial<D>::Term> rest;
  while (!p.is_zero()) {
    const auto lt = p.leading_term();
    const Polynomial<D>* r = idx.find(g, lt.mono, skip);
    if (r) {
      auto c = dom.mul(lt.coeff, dom.inv(r->leading_coeff()));
      p = p - r->mul_term(lt.mono.divided_by(r->leading_monomial()), c);
    } else {
      rest.push_back(lt);
      p = p - Polynomial<D>::monomial(p.ring(), lt.mono, lt.coeff);
    }
  }
  return Polynomial<D>::from_terms(p.ring(), std::move(rest));
}

template <class D>
Polynomial<D> s_polynomial(const Polynomial<D>& f, const Polynomial<D>& g) {
  const auto& dom = f.dom();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l.divided_by(f.leading_monomial()), dom.inv(f.leading_coeff())) -
         g.mul_term(l.divided_by(g.leading_monomial()), dom.inv(g.leading_coeff()));
}

inline void check_deadline(const BuchbergerOptions& opt) {
  if (opt.deadline && Clock::now() > *opt.deadline) throw TimeoutError("Groebner basis computation timed out");
}

// Interreduce a Groebner basis into the unique reduced monic basis.
template <class D>
std::vector<Polynomial<D>> make_reduced(std::vector<Polynomial<D>> g, const MonomialOrder& ord) {
  // minimal: drop elements whose leading monomial is divisible by an earlier-kept or other one
  std::vector<Polynomial<D>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = g[i].leading_monomial();
      const auto& mj = g[j].leading_monomial();
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  ReducerIndex<D> idx;
  idx.build(minimal, ord);
  std::vector<Polynomial<D>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    // the leading term is irreducible by the others, so full reduction keeps it
    reduced.push_back(full_reduce(minimal[i], minimal, idx, i).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<D>& a, const Polynomial<D>& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

}  // namespace detail

template <class D>
struct BasisCertificate {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string failure;
};

/// Exhaustive check: every S-polynomial reduces to zero, the basis is monic,
/// minimal and tail-reduced.
template <class D>
BasisCertificate<D> certify(const GroebnerBasis<D>& gb) {
  BasisCertificate<D> cert;
  const auto& g = gb.elements;
  const auto& ord = gb.order();
  const auto& dom = gb.ring->domain();
  detail::ReducerIndex<D> idx;
  idx.build(g, ord);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!dom.equal(g[i].leading_coeff(), dom.one())) {
      cert.ok = false;
      cert.failure = "element " + std::to_string(i) + " is not monic";
      return cert;
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) {
        if (g[j].leading_monomial().divides(t.mono)) {
          cert.ok = false;
          cert.failure = "element " + std::to_string(i) + " is not reduced by element " + std::to_string(j);
          return cert;
        }
      }
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      ++cert.pairs_checked;
      auto s = detail::s_polynomial(g[i], g[j]);
      if (!detail::top_reduce(std::move(s), g, idx).is_zero()) {
        cert.ok = false;
        cert.failure = "S(" + std::to_string(i) + "," + std::to_string(j) + ") does not reduce to zero";
        return cert;
      }
    }
  }
  return cert;
}

/// Reduced monic Groebner basis of the ideal generated by `gens` under `order`.
/// Pairs are taken by the normal strategy (smallest lcm first) and pruned by
/// the coprime and chain criteria.
template <Field D>
GroebnerBasis<D> buchberger(const std::vector<Polynomial<D>>& gens, MonomialOrder order,
                            const BuchbergerOptions& opt = {}) {
  if (gens.empty()) throw AlgebraError("buchberger: no generators and no ring");
  RingPtr<D> ring = gens.front().ring()->with_order(order);
  const auto& ord = ring->order();

  std::vector<Polynomial<D>> g;
  for (const auto& f : gens) {
    if (f.ring()->names() != ring->names()) throw AlgebraError("ring context mismatch");
    auto h = f.in_ring(ring);
    if (!h.is_zero()) g.push_back(h.monic());
  }
  GroebnerBasis<D> out{ring, {}};
  auto& ctr = audit::counters();
  auto finish = [&](std::vector<Polynomial<D>> elems) {
    out.elements = std::move(elems);
    ++ctr.bases_computed;
    if (ctr.enabled) {
      auto cert = certify(out);
      if (cert.ok) ++ctr.bases_certified;
      else ++ctr.basis_failures;
    }
    return out;
  };
  if (g.empty()) return finish({});
  for (const auto& f : g)
    if (f.is_constant()) return finish({Polynomial<D>::constant(ring, ring->domain().one())});

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j
  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial())});
      pending[j][i] = 1;
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending[b][a] != 0;
  };

  detail::ReducerIndex<D> idx;
  idx.build(g, ord);
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    detail::check_deadline(opt);
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (int c = ord.compare(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair pr = std::move(*best);
    *best = std::move(pairs.back());
    pairs.pop_back();
    pending[pr.j][pr.i] = 0;

    const auto& fi = g[pr.i];
    const auto& fj = g[pr.j];
    if (fi.leading_monomial().coprime_with(fj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (g[k].leading_monomial().divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    auto h = detail::top_reduce(detail::s_polynomial(fi, fj), g, idx);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return finish({Polynomial<D>::constant(ring, ring->domain().one())});
    g.push_back(std::move(h));
    idx.insert(g, g.size() - 1, ord);
    add_pairs_for(g.size() - 1);
  }
  return finish(detail::make_reduced(std::move(g), ord));
}

template <Field D>
GroebnerBasis<D> buchberger(const Ideal<D>& ideal, MonomialOrder order, const BuchbergerOptions& opt = {}) {
  if (ideal.cached_basis() && ideal.cached_basis()->order() == order) return *ideal.cached_basis();
  if (ideal.generators().empty()) return GroebnerBasis<D>{ideal.ring()->with_order(order), {}};
  return buchberger(ideal.generators(), order, opt);
}

/// Remainder of p modulo the basis; zero iff p lies in the ideal.
template <Field D>
Polynomial<D> normal_form(const Polynomial<D>& p, const GroebnerBasis<D>& gb) {
  if (p.ring()->names() != gb.ring->names() || !(p.dom() == gb.ring->domain()))
    throw AlgebraError("normal_form: ring context mismatch");
  auto q = p.in_ring(gb.ring);
  if (gb.elements.empty()) return q;
  detail::ReducerIndex<D> idx;
  idx.build(gb.elements, gb.order());
  return detail::full_reduce(std::move(q), gb.elements, idx);
}

/// Ideal intersected with the subring of the variables not in `drop_vars`.
/// The dropped variables must be exactly the leading block of the ring.
template <Field D>
Ideal<D> eliminate(const Ideal<D>& ideal, const std::vector<std::string>& drop_vars,
                   const BuchbergerOptions& opt = {}) {
  const auto& ring = ideal.ring();
  const std::size_t k = drop_vars.size();
  std::set<std::string> drop(drop_vars.begin(), drop_vars.end());
  if (drop.size() != k) throw AlgebraError("eliminate: repeated variable");
  for (std::size_t i = 0; i < k; ++i)
    if (!ring->find(drop_vars[i])) throw AlgebraError("eliminate: unknown variable " + drop_vars[i]);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if ((i < k) != (drop.count(ring->name(i)) != 0))
      throw AlgebraError("eliminate: dropped variables must form the leading block of the ring");
  }
  std::vector<std::string> kept(ring->names().begin() + static_cast<long>(k), ring->names().end());
  auto sub = PolyRing<D>::make(kept, ring->domain(), MonomialOrder::grevlex());
  std::vector<int> map(ring->nvars(), -1);
  for (std::size_t i = k; i < ring->nvars(); ++i) map[i] = static_cast<int>(i - k);

  GroebnerBasis<D> gb = buchberger(ideal, MonomialOrder::block_elimination(k), opt);
  std::vector<Polynomial<D>> gens;
  for (const auto& f : gb.elements) {
    bool free_of_block = true;
    for (std::size_t v = 0; v < k && free_of_block; ++v)
      if (f.uses_variable(v)) free_of_block = false;
    if (free_of_block) gens.push_back(transfer(f, sub, map));
  }
  Ideal<D> result(sub, gens);
  // The block-free part of a reduced block-order basis is the reduced grevlex
  // basis of the elimination ideal.
  std::sort(gens.begin(), gens.end(), [&](const Polynomial<D>& a, const Polynomial<D>& b) {
    return sub->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return result.with_basis(GroebnerBasis<D>{sub, std::move(gens)});
}

/// Krull dimension of k[x]/I: the largest set of variables containing the
/// support of no leading monomial.  The unit ideal has dimension -1.
template <class D>
int krull_dim(const GroebnerBasis<D>& gb) {
  const std::size_t n = gb.ring->nvars();
  if (gb.is_unit_ideal()) return -1;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& f : gb.elements) {
    std::vector<std::size_t> s;
    const auto& m = f.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::vector<char> in(n, 0);
  int best = 0;
  auto blocked = [&]() {
    for (const auto& s : supports) {
      bool all = true;
      for (auto v : s)
        if (!in[v]) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  // branch on each variable: include (if still independent) or exclude
  auto search = [&](auto&& self, std::size_t v, int size) -> void {
    if (size + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    in[v] = 1;
    if (!blocked()) self(self, v + 1, size + 1);
    in[v] = 0;
    self(self, v + 1, size);
  };
  search(search, 0, 0);
  return best;
}

/// Homogenize a grevlex basis of `affine` with `hvar`.  If hvar is not a
/// variable of the ring it is prepended to a new ring.
template <Field D>
Ideal<D> projective_closure(const Ideal<D>& affine, const std::string& hvar, const BuchbergerOptions& opt = {}) {
  const auto& ring = affine.ring();
  RingPtr<D> target;
  std::vector<int> map(ring->nvars());
  if (auto h = ring->find(hvar)) {
    for (const auto& g : affine.generators())
      if (g.uses_variable(*h)) throw AlgebraError("projective_closure: " + hvar + " occurs in the affine ideal");
    target = ring->with_order(MonomialOrder::grevlex());
    std::iota(map.begin(), map.end(), 0);
  } else {
    std::vector<std::string> names{hvar};
    names.insert(names.end(), ring->names().begin(), ring->names().end());
    target = PolyRing<D>::make(names, ring->domain(), MonomialOrder::grevlex());
    std::iota(map.begin(), map.end(), 1);
  }
  const std::size_t hidx = target->index_of(hvar);
  GroebnerBasis<D> affine_gb = buchberger(affine, MonomialOrder::grevlex(), opt);
  std::vector<Polynomial<D>> gens;
  for (const auto& f : affine_gb.elements) gens.push_back(homogenize(transfer(f, target, map), hidx));
  Ideal<D> closure(target, gens);
  if (gens.empty()) return closure;
  return closure.with_basis(buchberger(gens, MonomialOrder::grevlex(), opt));
}

struct SingularIdealOptions {
  std::size_t max_minors = 250000;
};

/// Ideal of the singular locus of the projective variety cut out by the
/// homogeneous ideal `homog`, where codim is its codimension in the ambient
/// projective space.  The reduced grevlex basis is split into linear forms
/// (which fix a linear subspace) and the rest; the Jacobian minors are taken
/// for the rest on the free coordinates of that subspace.
template <Field D>
Ideal<D> singular_ideal(const Ideal<D>& homog, int codim, const BuchbergerOptions& opt = {},
                        const SingularIdealOptions& sopt = {}) {
  const auto& ring = homog.ring();
  const int ambient = static_cast<int>(ring->nvars()) - 1;
  if (codim < 0 || codim > ambient) throw AlgebraError("singular_ideal: codimension out of range");
  for (const auto& g : homog.generators())
    if (!g.is_homogeneous()) throw AlgebraError("singular_ideal: generators must be homogeneous");

  auto gring = ring->with_order(MonomialOrder::grevlex());
  if (homog.generators().empty()) {
    // whole projective space: smooth, singular ideal is the unit ideal when codim == 0
    if (codim != 0) throw AlgebraError("singular_ideal: zero ideal has codimension 0");
    return Ideal<D>(gring, {Polynomial<D>::constant(gring, ring->domain().one())});
  }
  GroebnerBasis<D> gb = buchberger(homog, MonomialOrder::grevlex(), opt);
  std::vector<Polynomial<D>> linear, rest;
  std::vector<char> pivot(ring->nvars(), 0);
  for (const auto& f : gb.elements) {
    if (f.total_degree() == 1) {
      linear.push_back(f);
      for (std::size_t v = 0; v < ring->nvars(); ++v)
        if (f.leading_monomial()[v]) pivot[v] = 1;
    } else {
      rest.push_back(f);
    }
  }
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (!pivot[v]) free_vars.push_back(v);
  const int c = codim - static_cast<int>(linear.size());
  std::vector<Polynomial<D>> gens = gb.elements;
  if (c < 0) throw AlgebraError("singular_ideal: codimension smaller than the number of linear equations");
  if (c == 0) {
    gens.push_back(Polynomial<D>::constant(gb.ring, ring->domain().one()));
    return Ideal<D>(gb.ring, gens);
  }
  if (static_cast<std::size_t>(c) > rest.size() || static_cast<std::size_t>(c) > free_vars.size()) {
    // every minor vanishes: the whole variety is singular
    return Ideal<D>(gb.ring, gens);
  }
  // partial derivatives of the non-linear part along the free coordinates
  const auto& dom = ring->domain();
  PolyMatrix<D> jac;
  for (const auto& f : rest) {
    std::vector<Polynomial<D>> row;
    for (auto v : free_vars) {
      std::vector<typename Polynomial<D>::Term> terms;
      for (const auto& t : f.terms()) {
        if (t.mono[v] == 0) continue;
        Monomial m = t.mono;
        m.set(v, t.mono[v] - 1);
        terms.push_back({std::move(m), dom.mul(t.coeff, dom.from_int(static_cast<long>(t.mono[v])))});
      }
      row.push_back(Polynomial<D>::from_terms(gb.ring, std::move(terms)));
    }
    jac.push_back(std::move(row));
  }
  auto choose = [](std::size_t n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
  };
  if (choose(rest.size(), c) * choose(free_vars.size(), c) > double(sopt.max_minors))
    throw GuardError("singular_ideal: too many Jacobian minors");

  detail::ReducerIndex<D> idx;
  idx.build(gb.elements, gb.order());
  auto combos = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  const auto row_sets = combos(rest.size(), static_cast<std::size_t>(c));
  const auto col_sets = combos(free_vars.size(), static_cast<std::size_t>(c));
  std::vector<Polynomial<D>> minors;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      detail::check_deadline(opt);
      auto m = symbolic_det(submatrix(jac, rs, cs));
      if (m.is_zero()) continue;
      m = detail::full_reduce(std::move(m), gb.elements, idx);
      if (m.is_zero()) continue;
      m = m.monic();
      if (std::find(minors.begin(), minors.end(), m) == minors.end()) minors.push_back(std::move(m));
    }
  }
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal<D>(gb.ring, gens);
}

/// Rank of the symmetric Gram matrix of a quadratic form (characteristic != 2).
template <Field D>
int quadric_rank(const Polynomial<D>& q) {
  const auto& dom = q.dom();
  if (dom.characteristic() == 2) throw AlgebraError("quadric_rank: characteristic 2 is not supported");
  if (q.is_zero()) return 0;
  if (!q.is_homogeneous() || q.total_degree() != 2) throw AlgebraError("quadric_rank: input is not a quadratic form");
  const std::size_t n = q.ring()->nvars();
  using V = typename D::value_type;
  std::vector<std::vector<V>> b(n, std::vector<V>(n, dom.zero()));
  const V half = dom.inv(dom.from_int(2));
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) at.push_back(i);
    if (at[0] == at[1]) {
      b[at[0]][at[0]] = t.coeff;
    } else {
      b[at[0]][at[1]] = dom.mul(t.coeff, half);
      b[at[1]][at[0]] = b[at[0]][at[1]];
    }
  }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && dom.is_zero(b[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(b[piv], b[row]);
    const V inv = dom.inv(b[row][col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || dom.is_zero(b[r][col])) continue;
      const V f = dom.mul(b[r][col], inv);
      for (std::size_t k = col; k < n; ++k) b[r][k] = dom.sub(b[r][k], dom.mul(f, b[row][k]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// f in the radical of the ideal, by the Rabinowitsch trick.
template <Field D>
bool radical_member(const Polynomial<D>& f, const Ideal<D>& ideal, const BuchbergerOptions& opt = {}) {
  const auto& ring = ideal.ring();
  if (f.ring()->names() != ring->names()) throw AlgebraError("radical_member: ring context mismatch");
  std::string y = "_rabinowitsch";
  while (ring->find(y)) y += "_";
  auto names = ring->names();
  names.push_back(y);
  auto ext = PolyRing<D>::make(names, ring->domain(), MonomialOrder::grevlex());
  std::vector<int> map(ring->nvars());
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial<D>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, ext, map));
  auto yf = Polynomial<D>::variable(ext, y) * transfer(f, ext, map);
  gens.push_back(Polynomial<D>::constant(ext, ring->domain().one()) - yf);
  return buchberger(gens, MonomialOrder::grevlex(), opt).is_unit_ideal();
}

}  // namespace quotlab
