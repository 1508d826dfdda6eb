#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "quotlab/errors.hpp"

namespace quotlab {

/// Exponent vector with its total degree cached.
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const unsigned> exps) : exps_(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > std::numeric_limits<exponent_type>::max()) throw AlgebraError("exponent overflow");
      exps_[i] = static_cast<exponent_type>(exps[i]);
      degree_ += exps[i];
    }
  }
  Monomial(std::initializer_list<unsigned> exps)
      : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const exponent_type> exponents() const { return exps_; }

  void set(std::size_t i, unsigned e) {
    if (e > std::numeric_limits<exponent_type>::max()) throw AlgebraError("exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<exponent_type>(e);
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  // Variables with nonzero exponent.
  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      unsigned e = unsigned(x.exps_[i]) + y.exps_[i];
      if (e > std::numeric_limits<exponent_type>::max()) throw AlgebraError("exponent overflow");
      m.exps_[i] = static_cast<exponent_type>(e);
    }
    m.degree_ = x.degree_ + y.degree_;
    return m;
  }

  // this / d, requires d | this.
  Monomial divided_by(const Monomial& d) const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) m.exps_[i] = static_cast<exponent_type>(exps_[i] - d.exps_[i]);
    m.degree_ = degree_ - d.degree_;
    return m;
  }

  static Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) m.exps_[i] = std::max(x.exps_[i], y.exps_[i]);
    unsigned d = 0;
    for (auto e : m.exps_) d += e;
    m.degree_ = d;
    return m;
  }

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (auto e : exps_) h = h * 1000003u ^ e;
    return h;
  }

 private:
  std::vector<exponent_type> exps_;
  unsigned degree_ = 0;
};

enum class OrderKind { grevlex, lex, block };

/// grevlex, lex, or block elimination: the first `block` variables form a
/// dominant grevlex block, ties broken by grevlex on the remaining ones.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder block_elimination(std::size_t k) { return MonomialOrder(OrderKind::block, k); }

  OrderKind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "block:" + std::to_string(block_);
    }
    return "?";
  }

  static MonomialOrder parse(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    if (s.rfind("block:", 0) == 0) {
      try {
        return block_elimination(std::stoul(s.substr(6)));
      } catch (const std::logic_error&) {
      }
    }
    throw ParseError("unknown monomial order: " + s);
  }

  /// -1, 0, +1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::grevlex:
        return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
      case OrderKind::block: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (int c = grevlex_range(a, b, 0, block_, da, db); c != 0) return c;
        return grevlex_range(a, b, block_, a.size(), a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, unsigned da,
                           unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  std::size_t block_;
};

}  // namespace quotlab

template <>
struct std::hash<quotlab::Monomial> {
  std::size_t operator()(const quotlab::Monomial& m) const { return m.hash(); }
};
