#pragma once

// Coefficient domains: the rationals, prime fields F_p and dual numbers
// k[eps]/(eps^2) over a prime field.  A domain is a small value object that
// knows how to combine its element type; polynomials hold one by value.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quotlab/errors.hpp"

namespace quotlab {

/// Arbitrary-precision rationals, always stored in canonical form.
class Rationals {
 public:
  using value_type = mpq_class;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw AlgebraError("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_unit(const value_type& a) const { return sgn(a) != 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  unsigned long characteristic() const { return 0; }
  std::string descriptor() const { return "q"; }

  std::string to_string(const value_type& a) const {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }
  std::string pretty(const value_type& a) const { return a.get_str(); }
  // Accepts "num/den" or a plain integer.
  value_type parse(std::string_view s) const {
    value_type v;
    if (v.set_str(std::string(s), 10) != 0) throw ParseError("bad rational: " + std::string(s));
    v.canonicalize();
    return v;
  }

  bool operator==(const Rationals&) const = default;
};

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw AlgebraError("F_p requires a prime modulus, got " + std::to_string(p));
  }

  static bool is_prime(std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 31)) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long v) const {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    return static_cast<value_type>(m);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw AlgebraError("division by zero in F_" + std::to_string(p_));
    // Extended Euclid on signed 64-bit.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_unit(value_type a) const { return a != 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  unsigned long characteristic() const { return p_; }
  std::string descriptor() const { return "fp:" + std::to_string(p_); }

  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string pretty(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view s) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(std::string(s), &used);
      if (used != s.size()) throw ParseError("bad F_p element: " + std::string(s));
      long long m = v % static_cast<long long>(p_);
      if (m < 0) m += p_;
      return static_cast<value_type>(m);
    } catch (const std::logic_error&) {
      throw ParseError("bad F_p element: " + std::string(s));
    }
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// a + b*eps with eps^2 = 0.
template <class T>
struct Dual {
  T a;
  T b;
  bool operator==(const Dual&) const = default;
};

/// The ring Base[eps]/(eps^2).  Not a field: inverses exist exactly for
/// elements whose constant part is a unit of Base.
template <class Base>
class DualNumbers {
 public:
  using base_type = Base;
  using base_value = typename Base::value_type;
  using value_type = Dual<base_value>;
  static constexpr bool is_field = false;

  explicit DualNumbers(Base base) : base_(std::move(base)) {}

  const Base& base() const { return base_; }

  value_type zero() const { return {base_.zero(), base_.zero()}; }
  value_type one() const { return {base_.one(), base_.zero()}; }
  value_type eps() const { return {base_.zero(), base_.one()}; }
  value_type from_int(long v) const { return {base_.from_int(v), base_.zero()}; }
  value_type make(base_value a, base_value b) const { return {std::move(a), std::move(b)}; }

  value_type add(const value_type& x, const value_type& y) const {
    return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
  }
  value_type sub(const value_type& x, const value_type& y) const {
    return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
  }
  // (a + b eps)(c + d eps) = ac + (ad + bc) eps
  value_type mul(const value_type& x, const value_type& y) const {
    return {base_.mul(x.a, y.a), base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a))};
  }
  value_type neg(const value_type& x) const { return {base_.neg(x.a), base_.neg(x.b)}; }
  value_type inv(const value_type& x) const {
    if (!base_.is_unit(x.a)) throw AlgebraError("dual number with non-unit constant part is not invertible");
    // (a + b eps)^-1 = a^-1 - b a^-2 eps
    auto ai = base_.inv(x.a);
    return {ai, base_.neg(base_.mul(x.b, base_.mul(ai, ai)))};
  }
  bool is_zero(const value_type& x) const { return base_.is_zero(x.a) && base_.is_zero(x.b); }
  bool is_unit(const value_type& x) const { return base_.is_unit(x.a); }
  bool equal(const value_type& x, const value_type& y) const {
    return base_.equal(x.a, y.a) && base_.equal(x.b, y.b);
  }

  unsigned long characteristic() const { return base_.characteristic(); }
  std::string descriptor() const { return "dual:" + base_.descriptor(); }

  std::string to_string(const value_type& x) const {
    return base_.to_string(x.a) + "+" + base_.to_string(x.b) + "*eps";
  }
  std::string pretty(const value_type& x) const {
    if (base_.is_zero(x.b)) return base_.pretty(x.a);
    if (base_.is_zero(x.a)) return base_.equal(x.b, base_.one()) ? "eps" : base_.pretty(x.b) + "*eps";
    return "(" + base_.pretty(x.a) + "+" + base_.pretty(x.b) + "*eps)";
  }
  // "a+b*eps"; a bare "a" is read as a + 0*eps.
  value_type parse(std::string_view s) const {
    constexpr std::string_view tail = "*eps";
    if (s.size() > tail.size() && s.substr(s.size() - tail.size()) == tail) {
      auto body = s.substr(0, s.size() - tail.size());
      // split at the last '+' that is not a leading sign
      auto plus = body.rfind('+');
      if (plus == std::string_view::npos || plus == 0) throw ParseError("bad dual number: " + std::string(s));
      return {base_.parse(body.substr(0, plus)), base_.parse(body.substr(plus + 1))};
    }
    return {base_.parse(s), base_.zero()};
  }

  bool operator==(const DualNumbers&) const = default;

 private:
  Base base_;
};

using DualFp = DualNumbers<PrimeField>;

template <class F>
concept CoefficientDomain = requires(const F& f, const typename F::value_type& x) {
  { f.add(x, x) } -> std::convertible_to<typename F::value_type>;
  { f.mul(x, x) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(x) } -> std::convertible_to<bool>;
  { f.descriptor() } -> std::convertible_to<std::string>;
  { f.to_string(x) } -> std::convertible_to<std::string>;
};

template <class F>
concept Field = CoefficientDomain<F> && F::is_field;

}  // namespace quotlab
