#ifndef BLOWUP_FORBIDDEN_HPP
#define BLOWUP_FORBIDDEN_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "blowup/divisor.hpp"

namespace blowup {

/// A cyclic block of negative alpha positions of length 2, 3 or 5.
class SignPattern {
public:
  SignPattern(int start, int length);

  const CyclicBlock& block() const { return block_; }
  bool negative(int position) const { return block_.contains(position); }
  friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
  CyclicBlock block_;
};

/// The 11 forbidden sign patterns: five rotations each of length 2 and 3, and
/// the full block.
const std::array<SignPattern, 11>& all_sign_patterns();

struct CompatibilityVerdict {
  bool forbidden_forward = false;  // x - y forbidden
  bool forbidden_backward = false; // y - x forbidden

  bool compatible() const { return !forbidden_forward && !forbidden_backward; }
};

/// Integer alpha with alpha_to_basis(alpha) == d whose negative positions are
/// exactly the block of p (alpha_2 <= -n+1 when position 2 is in it).
///
/// With s = alpha_1 and t = alpha_3 the remaining entries are a-s-t, b-t and
/// c-s, so every sign condition bounds s, t or s+t. An integer box in (s, t)
/// meets a strip lo <= s+t <= hi iff the strip meets [s_lo+t_lo, s_hi+t_hi].
std::optional<AlphaRep> pattern_witness(FamilyParam n, const SignPattern& p,
                                        const DivisorClass& d);

bool pattern_feasible(FamilyParam n, const SignPattern& p, const DivisorClass& d);

/// True iff d has nonvanishing higher cohomology by the sign-pattern rule.
bool is_forbidden(FamilyParam n, const DivisorClass& d);

/// First feasible pattern with its witness, if any.
std::optional<std::pair<SignPattern, AlphaRep>> forbidden_witness(FamilyParam n,
                                                                  const DivisorClass& d);

CompatibilityVerdict is_compatible(FamilyParam n, const DivisorClass& x, const DivisorClass& y);

/// Whether the alpha vector itself meets the forbidden-sign condition:
/// negatives form a cyclic block of length 2, 3 or 5, and alpha_2 <= -n+1
/// whenever alpha_2 < 0.
bool alpha_is_forbidden_pattern(FamilyParam n, const AlphaRep& r);

/// Smallest radius accepted by brute_force_is_forbidden.
std::int64_t brute_force_min_radius(FamilyParam n, const DivisorClass& d);

/// Scans every alpha in [-radius, radius]^5 mapping to d and tests the sign
/// condition directly. Throws std::invalid_argument when radius is below
/// brute_force_min_radius.
bool brute_force_is_forbidden(FamilyParam n, const DivisorClass& d, std::int64_t radius);

} // namespace blowup

#endif // BLOWUP_FORBIDDEN_HPP
