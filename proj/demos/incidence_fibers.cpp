// Fiber sizes of the incidence correspondence between colengths n and n+1.

#include <cstdlib>
#include <iostream>

#include "quotlab/local_modules.hpp"

int main(int argc, char** argv) {
  using namespace quotlab;
  const int n = argc > 1 ? std::atoi(argv[1]) : 2;
  const std::uint32_t q = argc > 2 ? static_cast<std::uint32_t>(std::atoi(argv[2])) : 2;
  auto pairs = incidence_pairs(n, 2, q);
  auto fc = fiber_counts(pairs);
  std::cout << pairs.size() << " incident pairs over F_" << q << "\n";
  for (const auto& [a, k] : fc.over_lower) std::cout << "lower " << a.to_string() << " fiber " << k << "\n";
  for (const auto& [b, k] : fc.over_upper)
    std::cout << "upper " << quotient_type(b).to_string() << " " << b.to_string() << " fiber " << k << "\n";
}
