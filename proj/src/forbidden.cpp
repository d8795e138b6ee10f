#include "blowup/forbidden.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace blowup {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Range {
  std::int64_t lo = -kInf;
  std::int64_t hi = kInf;

  void at_least(std::int64_t v) { lo = std::max(lo, v); }
  void at_most(std::int64_t v) { hi = std::min(hi, v); }
  bool empty() const { return lo > hi; }
};

// Closest point of r to target.
std::int64_t clamp_to(const Range& r, std::int64_t target) {
  return std::clamp(target, r.lo, r.hi);
}

} // namespace

SignPattern::SignPattern(int start, int length) : block_{start, length} {
  if (start < 1 || start > 5)
    throw std::invalid_argument("sign pattern start must be in 1..5");
  if (length != 2 && length != 3 && length != 5)
    throw std::invalid_argument("sign pattern length must be 2, 3 or 5");
  if (length == 5 && start != 1)
    throw std::invalid_argument("full sign pattern starts at 1");
}

const std::array<SignPattern, 11>& all_sign_patterns() {
  static const std::array<SignPattern, 11> patterns{
      SignPattern(1, 2), SignPattern(2, 2), SignPattern(3, 2), SignPattern(4, 2),
      SignPattern(5, 2), SignPattern(1, 3), SignPattern(2, 3), SignPattern(3, 3),
      SignPattern(4, 3), SignPattern(5, 3), SignPattern(1, 5)};
  return patterns;
}

std::optional<AlphaRep> pattern_witness(FamilyParam n, const SignPattern& p,
                                        const DivisorClass& d) {
  Range s, t, u; // alpha_1, alpha_3, alpha_1 + alpha_3
  // alpha_1 = s
  if (p.negative(1))
    s.at_most(-1);
  else
    s.at_least(0);
  // alpha_3 = t
  if (p.negative(3))
    t.at_most(-1);
  else
    t.at_least(0);
  // alpha_2 = a - s - t
  if (p.negative(2))
    u.at_least(d.a + n.value() - 1);
  else
    u.at_most(d.a);
  // alpha_4 = b - t
  if (p.negative(4))
    t.at_least(d.b + 1);
  else
    t.at_most(d.b);
  // alpha_5 = c - s
  if (p.negative(5))
    s.at_least(d.c + 1);
  else
    s.at_most(d.c);

  if (s.empty() || t.empty() || u.empty())
    return std::nullopt;
  // Sums of infinite ends saturate, which keeps the comparisons correct.
  auto sum = [](std::int64_t x, std::int64_t y) {
    if (x <= -kInf || y <= -kInf)
      return -kInf;
    if (x >= kInf || y >= kInf)
      return kInf;
    return x + y;
  };
  if (sum(s.lo, t.lo) > u.hi || u.lo > sum(s.hi, t.hi))
    return std::nullopt;

  // Witness: start from the points nearest zero, then walk s and t toward
  // the strip.
  std::int64_t sv = clamp_to(s, 0);
  std::int64_t tv = clamp_to(t, 0);
  std::int64_t target = std::clamp(sv + tv, u.lo, u.hi);
  std::int64_t gap = target - (sv + tv);
  std::int64_t ns = clamp_to(s, sv + gap);
  gap -= ns - sv;
  sv = ns;
  tv = clamp_to(t, tv + gap);

  AlphaRep r{{sv, d.a - sv - tv, tv, d.b - tv, d.c - sv}};
  return r;
}

bool pattern_feasible(FamilyParam n, const SignPattern& p, const DivisorClass& d) {
  return pattern_witness(n, p, d).has_value();
}

std::optional<std::pair<SignPattern, AlphaRep>> forbidden_witness(FamilyParam n,
                                                                  const DivisorClass& d) {
  for (const auto& p : all_sign_patterns())
    if (auto w = pattern_witness(n, p, d))
      return std::make_pair(p, *w);
  return std::nullopt;
}

bool is_forbidden(FamilyParam n, const DivisorClass& d) {
  for (const auto& p : all_sign_patterns())
    if (pattern_feasible(n, p, d))
      return true;
  return false;
}

CompatibilityVerdict is_compatible(FamilyParam n, const DivisorClass& x, const DivisorClass& y) {
  DivisorClass diff = x - y;
  return {is_forbidden(n, diff), is_forbidden(n, -diff)};
}

bool alpha_is_forbidden_pattern(FamilyParam n, const AlphaRep& r) {
  auto block = negative_block(r);
  if (!block)
    return false;
  if (block->length != 2 && block->length != 3 && block->length != 5)
    return false;
  if (r.at(2) < 0 && r.at(2) > 1 - n.value())
    return false;
  return true;
}

std::int64_t brute_force_min_radius(FamilyParam n, const DivisorClass& d) {
  return d.max_abs() + n.value() + 2;
}

bool brute_force_is_forbidden(FamilyParam n, const DivisorClass& d, std::int64_t radius) {
  if (radius < brute_force_min_radius(n, d))
    throw std::invalid_argument("brute-force radius " + std::to_string(radius) +
                                " below completeness bound " +
                                std::to_string(brute_force_min_radius(n, d)));
  auto in_box = [radius](std::int64_t v) { return v >= -radius && v <= radius; };
  // alpha_1 and alpha_3 determine the rest through the three basis equations.
  for (std::int64_t a1 = -radius; a1 <= radius; ++a1) {
    for (std::int64_t a3 = -radius; a3 <= radius; ++a3) {
      AlphaRep r{{a1, d.a - a1 - a3, a3, d.b - a3, d.c - a1}};
      if (!in_box(r.alpha[1]) || !in_box(r.alpha[3]) || !in_box(r.alpha[4]))
        continue;
      if (alpha_is_forbidden_pattern(n, r))
        return true;
    }
  }
  return false;
}

} // namespace blowup
