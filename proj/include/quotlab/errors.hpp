#pragma once

#include <stdexcept>
#include <string>

namespace quotlab {

/// Arithmetic misuse: division by a non-unit, mismatched rings, bad degrees.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds the desk-scale limits of an enumeration or elimination.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation ran past its deadline.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quotlab
