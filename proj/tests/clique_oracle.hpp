#ifndef BLOWUP_TESTS_CLIQUE_ORACLE_HPP
#define BLOWUP_TESTS_CLIQUE_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup::testing {

/// Clique number by trying every vertex subset. At most 24 vertices.
inline std::size_t naive_clique_number(const CompatGraph& g) {
  const auto n = g.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j))
        adj[i] |= std::uint32_t{1} << j;
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best)
      continue;
    bool clique = true;
    for (std::uint32_t rest = s; rest && clique; rest &= rest - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(rest));
      clique = (s & ~(std::uint32_t{1} << v) & ~adj[v]) == 0;
    }
    if (clique)
      best = size;
  }
  return best;
}

} // namespace blowup::testing

#endif
