#pragma once

// Infix polynomial reader: integers, ring variables, eps (dual rings only),
// + - * ^ and parentheses.  Used by the tests and the CLI.

#include <cctype>
#include <string>
#include <string_view>

#include "quotlab/errors.hpp"
#include "quotlab/polynomial.hpp"

namespace quotlab {

namespace detail {

template <class D>
class PolyReader {
 public:
  PolyReader(RingPtr<D> ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial<D> read() {
    auto p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<D> sum() {
    Polynomial<D> acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    acc = product();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else return acc;
    }
  }
  Polynomial<D> product() {
    auto acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }
  Polynomial<D> power() {
    auto base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Polynomial<D> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      auto p = sum();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (eat('-')) return -atom();
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto v = ring_->domain().parse(s_.substr(start, pos_ - start));
      return Polynomial<D>::constant(ring_, v);
    }
    // identifier: letters, digits, '_', braces and commas (a_{2,0})
    std::size_t start = pos_;
    int brace = 0;
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
        ++pos_;
      } else if (ch == '{') {
        ++brace;
        ++pos_;
      } else if (ch == '}' && brace > 0) {
        --brace;
        ++pos_;
      } else if (ch == ',' && brace > 0) {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("unexpected '" + std::string(1, c) + "'");
    std::string name(s_.substr(start, pos_ - start));
    if (auto i = ring_->find(name)) return Polynomial<D>::variable(ring_, *i);
    if constexpr (requires(const D& d) { d.eps(); }) {
      if (name == "eps") return Polynomial<D>::constant(ring_, ring_->domain().eps());
    }
    fail("unknown variable " + name);
  }

  RingPtr<D> ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class D>
Polynomial<D> parse_polynomial(const RingPtr<D>& ring, std::string_view text) {
  return detail::PolyReader<D>(ring, text).read();
}

}  // namespace quotlab
