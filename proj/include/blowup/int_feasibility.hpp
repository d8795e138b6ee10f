#ifndef BLOWUP_INT_FEASIBILITY_HPP
#define BLOWUP_INT_FEASIBILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace blowup {

/// sum_j coeffs[j] * x_j <= rhs
struct LinearLe {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

/// Integer point of {x in [lo, hi] componentwise : all constraints hold}, or
/// nullopt. Bounds propagation to a fixpoint, then bisection on the widest
/// domain. Exact for any finite box.
std::optional<std::vector<std::int64_t>> find_integer_point(const std::vector<LinearLe>& constraints,
                                                            std::vector<std::int64_t> lo,
                                                            std::vector<std::int64_t> hi);

} // namespace blowup

#endif // BLOWUP_INT_FEASIBILITY_HPP
