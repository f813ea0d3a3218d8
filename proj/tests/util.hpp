// Small helpers shared by the unit suites. Anything bigger than a loop or a
// mask builder belongs in the suite that uses it, next to the oracle it
// feeds, so each test file stays readable on its own.
#pragma once

#include <initializer_list>

#include "topo/space.hpp"

namespace testutil {

inline topo::Mask msk(std::initializer_list<int> points) {
  topo::Mask m = 0;
  for (int p : points) m |= topo::Mask(1) << p;
  return m;
}

// Visits every enumerated topology with 1 <= n <= max_n points.
template <typename F>
void for_all_spaces(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) {
    topo::TopologyEnumerator en(n);
    for (std::size_t i = 0; i < en.count(); ++i) f(en.at(i));
  }
}

}  // namespace testutil
