#pragma once

// Sparse multivariate polynomials over a coefficient domain.  Terms are kept
// strictly descending in the ring's monomial order with no zero coefficients,
// so equal polynomials have identical term vectors.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quotlab/errors.hpp"
#include "quotlab/field.hpp"
#include "quotlab/monomial.hpp"

namespace quotlab {

template <class D>
class PolyRing;

template <class D>
using RingPtr = std::shared_ptr<const PolyRing<D>>;

/// Variable names, a monomial order and a coefficient domain.
template <class D>
class PolyRing {
 public:
  using domain_type = D;
  using value_type = typename D::value_type;

  PolyRing(std::vector<std::string> names, D domain, MonomialOrder order)
      : names_(std::move(names)), domain_(std::move(domain)), order_(order) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) throw AlgebraError("duplicate variable name " + names_[i]);
    }
    if (order_.kind() == OrderKind::block && order_.block_size() > names_.size())
      throw AlgebraError("elimination block larger than the variable count");
  }

  static RingPtr<D> make(std::vector<std::string> names, D domain,
                         MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(std::move(names), std::move(domain), order);
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const D& domain() const { return domain_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw AlgebraError("unknown variable " + name);
    return *i;
  }

  RingPtr<D> with_order(MonomialOrder order) const { return make(names_, domain_, order); }

  bool same_as(const PolyRing& o) const {
    return this == &o || (names_ == o.names_ && order_ == o.order_ && domain_ == o.domain_);
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  D domain_;
  MonomialOrder order_;
};

template <class D>
class Polynomial {
 public:
  using value_type = typename D::value_type;

  struct Term {
    Monomial mono;
    value_type coeff;
    bool operator==(const Term&) const = default;
  };

  explicit Polynomial(RingPtr<D> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<D> ring, value_type c) {
    Polynomial p(std::move(ring));
    if (!p.dom().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(c)});
    return p;
  }
  static Polynomial from_int(RingPtr<D> ring, long c) {
    auto v = ring->domain().from_int(c);
    return constant(std::move(ring), std::move(v));
  }
  static Polynomial variable(RingPtr<D> ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), ring->domain().one()});
    return p;
  }
  static Polynomial variable(RingPtr<D> ring, const std::string& name) {
    auto i = ring->index_of(name);
    return variable(std::move(ring), i);
  }
  static Polynomial monomial(RingPtr<D> ring, Monomial m, value_type c) {
    Polynomial p(std::move(ring));
    if (m.size() != p.ring_->nvars()) throw AlgebraError("monomial length does not match the ring");
    if (!p.dom().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Arbitrary term list: sorted, like terms combined, zeros dropped.
  static Polynomial from_terms(RingPtr<D> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    for (const auto& t : terms)
      if (t.mono.size() != p.ring_->nvars()) throw AlgebraError("monomial length does not match the ring");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.dom().add(p.terms_.back().coeff, t.coeff);
      } else {
        if (!p.terms_.empty() && p.dom().is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.dom().is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  const RingPtr<D>& ring() const { return ring_; }
  const D& dom() const { return ring_->domain(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && dom().equal(terms_[0].coeff, dom().one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw AlgebraError("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const value_type& leading_coeff() const { return leading_term().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  /// Coefficient of an exact monomial (zero when absent).
  value_type coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return dom().zero();
  }
  bool uses_variable(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i] != 0) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, dom().neg(t.coeff)});
    return r;
  }

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y) { return x.combine(y, false); }
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x.combine(y, true); }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    x.check_ring(y);
    if (x.is_zero() || y.is_zero()) return Polynomial(x.ring_);
    const Polynomial& big = x.size() >= y.size() ? x : y;
    const Polynomial& small = x.size() >= y.size() ? y : x;
    Polynomial acc(x.ring_);
    for (const auto& t : small.terms_) acc = acc + big.mul_term(t.mono, t.coeff);
    return acc;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this * c * m
  Polynomial mul_term(const Monomial& m, const value_type& c) const {
    Polynomial r(ring_);
    if (dom().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto v = dom().mul(t.coeff, c);
      if (!dom().is_zero(v)) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;
  }
  Polynomial scaled(const value_type& c) const { return mul_term(Monomial(ring_->nvars()), c); }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, dom().one());
    Polynomial b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  /// Divide through by the leading coefficient (must be a unit).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(dom().inv(leading_coeff()));
  }

  /// Same polynomial re-sorted for another ring with identical variables and domain.
  Polynomial in_ring(const RingPtr<D>& target) const {
    if (target->names() != ring_->names() || !(target->domain() == ring_->domain()))
      throw AlgebraError("in_ring: variables or coefficient domain differ");
    if (target->order() == ring_->order()) {
      Polynomial r = *this;
      r.ring_ = target;
      return r;
    }
    return from_terms(target, terms_);
  }

  bool operator==(const Polynomial& o) const {
    return ring_->names() == o.ring_->names() && dom() == o.dom() && terms_ == o.terms_;
  }

  /// Human-readable form, e.g. "p12*p34 - p14^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = dom().pretty(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(t.mono);
      if (mono.empty()) {
        os << c;
      } else {
        if (c != "1") os << c << "*";
        os << mono;
      }
    }
    return os.str();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  void check_ring(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw AlgebraError("ring context mismatch");
  }

 private:
  Polynomial combine(const Polynomial& y, bool subtract) const {
    check_ring(y);
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + y.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < y.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == y.terms_.size()) c = 1;
      else c = ord.compare(terms_[i].mono, y.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = y.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? dom().neg(t.coeff) : t.coeff});
      } else {
        auto v = subtract ? dom().sub(terms_[i].coeff, y.terms_[j].coeff) : dom().add(terms_[i].coeff, y.terms_[j].coeff);
        if (!dom().is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<D> ring_;
  std::vector<Term> terms_;
};

/// Value or polynomial bound to a variable by substitute().
template <class D>
using Binding = std::map<std::string, Polynomial<D>>;

/// Replace bound variables by polynomials of the same ring; unbound variables stay.
template <class D>
Polynomial<D> substitute(const Polynomial<D>& p, const Binding<D>& bindings) {
  const auto& ring = p.ring();
  std::vector<std::optional<Polynomial<D>>> slot(ring->nvars());
  for (const auto& [name, value] : bindings) {
    auto idx = ring->find(name);
    if (!idx) throw AlgebraError("substitute: unknown variable " + name);
    p.check_ring(value);
    slot[*idx] = value;
  }
  // cache of powers per bound variable
  std::vector<std::vector<Polynomial<D>>> powers(ring->nvars());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial<D>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial<D>::constant(ring, ring->domain().one()));
    while (pw.size() <= e) pw.push_back(pw.back() * *slot[v]);
    return pw[e];
  };
  Polynomial<D> result(ring);
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    Polynomial<D> factor = Polynomial<D>::constant(ring, t.coeff);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      if (slot[v] && t.mono[v] != 0) {
        factor = factor * power_of(v, t.mono[v]);
        rest.set(v, 0);
      }
    }
    result += factor.mul_term(rest, ring->domain().one());
  }
  return result;
}

/// Convenience: bind variables to constants.
template <class D>
Polynomial<D> substitute_values(const Polynomial<D>& p,
                                const std::map<std::string, typename D::value_type>& values) {
  Binding<D> b;
  for (const auto& [name, v] : values) b.emplace(name, Polynomial<D>::constant(p.ring(), v));
  return substitute(p, b);
}

/// Evaluate at a full point (one value per variable).
template <class D>
typename D::value_type evaluate(const Polynomial<D>& p, std::span<const typename D::value_type> point) {
  const auto& dom = p.dom();
  if (point.size() != p.ring()->nvars()) throw AlgebraError("evaluate: point has wrong length");
  auto acc = dom.zero();
  for (const auto& t : p.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !dom.is_zero(v); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = dom.mul(v, point[i]);
    acc = dom.add(acc, v);
  }
  return acc;
}

/// Pad every term with powers of variable `h` up to the total degree.
template <class D>
Polynomial<D> homogenize(const Polynomial<D>& p, std::size_t h) {
  if (h >= p.ring()->nvars()) throw AlgebraError("homogenize: variable index out of range");
  if (p.uses_variable(h)) throw AlgebraError("homogenize: " + p.ring()->name(h) + " already occurs");
  int d = p.total_degree();
  std::vector<typename Polynomial<D>::Term> terms;
  for (auto t : p.terms()) {
    t.mono.set(h, static_cast<unsigned>(d) - t.mono.degree());
    terms.push_back(std::move(t));
  }
  return Polynomial<D>::from_terms(p.ring(), std::move(terms));
}
template <class D>
Polynomial<D> homogenize(const Polynomial<D>& p, const std::string& hvar) {
  return homogenize(p, p.ring()->index_of(hvar));
}

/// Set variable `h` to 1.
template <class D>
Polynomial<D> dehomogenize(const Polynomial<D>& p, std::size_t h) {
  std::vector<typename Polynomial<D>::Term> terms;
  for (auto t : p.terms()) {
    t.mono.set(h, 0);
    terms.push_back(std::move(t));
  }
  return Polynomial<D>::from_terms(p.ring(), std::move(terms));
}

/// Move p into `target`, where variable i of p's ring becomes variable
/// index_map[i] of target.  Variables mapped to -1 must not occur in p.
template <class D>
Polynomial<D> transfer(const Polynomial<D>& p, const RingPtr<D>& target, std::span<const int> index_map) {
  std::vector<typename Polynomial<D>::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] < 0) throw AlgebraError("transfer: variable " + p.ring()->name(i) + " has no image");
      m.set(static_cast<std::size_t>(index_map[i]), m[static_cast<std::size_t>(index_map[i])] + t.mono[i]);
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<D>::from_terms(target, std::move(terms));
}

/// transfer() with the index map derived from variable names.
template <class D>
Polynomial<D> transfer_by_name(const Polynomial<D>& p, const RingPtr<D>& target) {
  std::vector<int> map(p.ring()->nvars(), -1);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (auto j = target->find(p.ring()->name(i))) map[i] = static_cast<int>(*j);
  return transfer(p, target, map);
}

}  // namespace quotlab
