// Builds both counterexample pairs for the nilpotent minimum and prints the
// jump each one produces in the convolution.

#include <iostream>

#include "t2conv/t2conv.hpp"

int main() {
  using namespace t2conv;
  const TnormSpec nm = TnormSpec::nilpotent_minimum();
  for (auto which : {NecessityCase::case1_min_star, NecessityCase::case2_ordinal_star}) {
    NecessityDemo d = necessity_demo(nm, which);
    std::cout << to_string(which) << ": point " << format_rational(d.witness.point) << ", value "
              << format_rational(d.witness.value_at_point) << ", limit " << format_rational(d.witness.approach_limit)
              << ", gap " << format_rational(d.witness.gap) << "  (grid oracle: " << d.oracle_at_point << " at, "
              << d.oracle_near << " beside)\n";
  }
  try {
    necessity_demo(TnormSpec::drastic(), NecessityCase::case1_min_star);
  } catch (const NotACounterexample& e) {
    std::cout << "drastic: " << e.what() << "\n";
  }
}
