#include "qlur/partition.hpp"

#include "qlur/errors.hpp"

namespace qlur {

std::string Bipartition::render() const {
  std::string out;
  for (int s : left) out += std::to_string(s + 1);
  out += '|';
  for (int s : right) out += std::to_string(s + 1);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2) throw InputError("enumerate_bipartitions: need at least 2 sites");
  if (n > 30) throw InputError("enumerate_bipartitions: site count too large");
  std::vector<Bipartition> out;
  out.reserve((1u << (n - 1)) - 1);
  const unsigned full = (1u << n) - 1;
  // Canonical form keeps site 0 in `left`: odd masks, excluding the full set.
  for (unsigned mask = 1; mask < full; mask += 2) {
    Bipartition p;
    for (int s = 0; s < n; ++s) {
      if (mask & (1u << s))
        p.left.push_back(s);
      else
        p.right.push_back(s);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qlur
