// Closure ideal of the (2,2) chart over Q and its F_3-points with their strata.

#include <iostream>

#include "quotlab/quot_geometry.hpp"

int main() {
  using namespace quotlab;
  auto qi = image_ideal<Rationals>(2, 2);
  std::cout << "chart dimension " << qi.chart_dim << " in P^" << qi.ambient - 1 << "\n";
  for (const auto& g : qi.closure.cached_basis()->elements) std::cout << "  " << g.to_string() << "\n";

  for (const auto& a : quot_points(2, 2, 3))
    std::cout << quotient_type(a).to_string() << "  " << plucker_of_submodule(a).to_string() << "\n";
}
