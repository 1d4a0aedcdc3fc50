#pragma once

#include <string>
#include <vector>

namespace qlur {

// Bipartition of sites {0..n-1}. Canonical form: site 0 lives in `left`;
// both sides nonempty, disjoint, ascending, covering all sites.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  // 1-based site labels, e.g. {0,1}|{2,3} -> "12|34".
  std::string render() const;
};

// All 2^(n-1) - 1 canonical bipartitions, ordered by the left-set bitmask
// (bit i set = site i in left), ascending.
std::vector<Bipartition> enumerate_bipartitions(int n);

}  // namespace qlur
