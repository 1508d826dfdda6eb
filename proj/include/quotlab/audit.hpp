#pragma once

#include <atomic>
#include <cstdint>

namespace quotlab::audit {

// Process-wide self-certification switch.  When enabled, every Groebner basis
// produced by buchberger() is re-checked by the S-polynomial certificate and
// every Pluecker point emitted by plucker_of_submodule() is checked against the
// three-term Pluecker relations.  Counters let a driver assert 100% coverage.
struct Counters {
  std::atomic<bool> enabled{false};
  std::atomic<std::uint64_t> bases_computed{0};
  std::atomic<std::uint64_t> bases_certified{0};
  std::atomic<std::uint64_t> basis_failures{0};
  std::atomic<std::uint64_t> points_emitted{0};
  std::atomic<std::uint64_t> points_verified{0};
  std::atomic<std::uint64_t> point_failures{0};

  void reset() {
    bases_computed = bases_certified = basis_failures = 0;
    points_emitted = points_verified = point_failures = 0;
  }
};

inline Counters& counters() {
  static Counters c;
  return c;
}

}  // namespace quotlab::audit
