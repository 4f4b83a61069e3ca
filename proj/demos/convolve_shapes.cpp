// Convolves a triangle with a trapezoid under (product, drastic) and compares
// the cut-engine staircase with the brute-force grid oracle.

#include <iostream>

#include "t2conv/t2conv.hpp"

int main() {
  using namespace t2conv;
  TruthValue f = triangle_tv(parse_rational("0.2"), parse_rational("0.5"), parse_rational("0.7"));
  TruthValue g = trapezoid_tv(parse_rational("0.3"), parse_rational("0.6"), parse_rational("0.8"), 1);
  const TnormSpec star = TnormSpec::product(), tri = TnormSpec::drastic();

  const int m = 128, n = 2000;
  const auto grid = uniform_grid<double>(m);
  auto h = convolve_cuts(cuts_of<double>(f, grid), cuts_of<double>(g, grid), star, tri);
  TruthValue staircase = tv_from_cuts(h);
  auto oracle = convolve_oracle(f, g, star, tri, n);
  auto d = compare_with_oracle(staircase, oracle);

  std::cout << "top cut: [" << h[m - 1].lo() << ", " << h[m - 1].hi() << "]\n"
            << "cut at 1/2: [" << h[m / 2 - 1].lo() << ", " << h[m / 2 - 1].hi() << "]\n"
            << "staircase vs oracle: " << d.value() << " (bound 2/m = " << 2.0 / m << ")\n";
  auto p = properties(staircase);
  std::cout << "normal " << p.normal << ", convex " << p.convex << ", usc " << p.usc << "\n";
}
