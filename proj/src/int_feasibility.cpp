#include "blowup/int_feasibility.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace blowup {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Tightens lo/hi; false when some domain empties.
bool propagate(const std::vector<LinearLe>& cs, std::vector<std::int64_t>& lo,
               std::vector<std::int64_t>& hi) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : cs) {
      // Minimum of the left-hand side over the current box.
      std::int64_t min_lhs = 0;
      for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
        auto a = c.coeffs[j];
        min_lhs += a > 0 ? a * lo[j] : a * hi[j];
      }
      if (min_lhs > c.rhs)
        return false;
      for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
        auto a = c.coeffs[j];
        if (a == 0)
          continue;
        std::int64_t rest = min_lhs - (a > 0 ? a * lo[j] : a * hi[j]);
        std::int64_t slack = c.rhs - rest; // a * x_j <= slack
        if (a > 0) {
          auto bound = floor_div(slack, a);
          if (bound < hi[j]) {
            hi[j] = bound;
            changed = true;
          }
        } else {
          auto bound = ceil_div(slack, a);
          if (bound > lo[j]) {
            lo[j] = bound;
            changed = true;
          }
        }
        if (lo[j] > hi[j])
          return false;
      }
    }
  }
  return true;
}

// Fourier-Motzkin projection with integer rounding of each derived row. A
// false result proves there is no integer point; true may be inconclusive
// once the row count blows past the cap.
bool projection_feasible(const std::vector<LinearLe>& cs, const std::vector<std::int64_t>& lo,
                         const std::vector<std::int64_t>& hi) {
  constexpr std::size_t kRowCap = 4000;
  constexpr std::int64_t kCoeffCap = std::int64_t{1} << 40;
  const std::size_t dim = lo.size();
  std::map<std::vector<std::int64_t>, std::int64_t> rows;
  bool ok = true;
  auto add = [&](std::vector<std::int64_t> a, std::int64_t r) {
    std::int64_t g = 0;
    for (auto x : a)
      g = std::gcd(g, x);
    if (g == 0) {
      if (r < 0)
        ok = false;
      return;
    }
    for (auto& x : a)
      x /= g;
    r = floor_div(r, g);
    auto [it, fresh] = rows.try_emplace(std::move(a), r);
    if (!fresh && r < it->second)
      it->second = r;
  };
  for (const auto& c : cs)
    add(c.coeffs, c.rhs);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<std::int64_t> e(dim, 0);
    e[j] = 1;
    add(e, hi[j]);
    e[j] = -1;
    add(e, -lo[j]);
  }
  for (std::size_t j = 0; j < dim && ok; ++j) {
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> pos, neg;
    std::map<std::vector<std::int64_t>, std::int64_t> keep;
    for (auto& [a, r] : rows) {
      if (a[j] > 0)
        pos.emplace_back(a, r);
      else if (a[j] < 0)
        neg.emplace_back(a, r);
      else
        keep.emplace(a, r);
    }
    if (pos.size() * neg.size() > kRowCap)
      return true;
    rows = std::move(keep);
    for (const auto& [p, rp] : pos)
      for (const auto& [q, rq] : neg) {
        std::int64_t mp = -q[j], mq = p[j];
        std::vector<std::int64_t> a(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          __int128 v = static_cast<__int128>(mp) * p[k] + static_cast<__int128>(mq) * q[k];
          if (v > kCoeffCap || v < -kCoeffCap)
            return true;
          a[k] = static_cast<std::int64_t>(v);
        }
        __int128 r = static_cast<__int128>(mp) * rp + static_cast<__int128>(mq) * rq;
        if (r > kCoeffCap || r < -kCoeffCap)
          return true;
        add(std::move(a), static_cast<std::int64_t>(r));
        if (!ok)
          return false;
      }
    if (rows.size() > kRowCap)
      return true;
  }
  return ok;
}

std::optional<std::vector<std::int64_t>> search(const std::vector<LinearLe>& cs,
                                                std::vector<std::int64_t> lo,
                                                std::vector<std::int64_t> hi) {
  if (!propagate(cs, lo, hi) || !projection_feasible(cs, lo, hi))
    return std::nullopt;
  std::size_t widest = lo.size();
  std::int64_t width = 0;
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (hi[j] - lo[j] > width) {
      width = hi[j] - lo[j];
      widest = j;
    }
  if (widest == lo.size())
    return lo; // fixed point of a fully propagated box satisfies everything
  std::int64_t mid = lo[widest] + width / 2;
  auto left_hi = hi;
  left_hi[widest] = mid;
  if (auto r = search(cs, lo, left_hi))
    return r;
  lo[widest] = mid + 1;
  return search(cs, std::move(lo), std::move(hi));
}

} // namespace

std::optional<std::vector<std::int64_t>> find_integer_point(const std::vector<LinearLe>& constraints,
                                                            std::vector<std::int64_t> lo,
                                                            std::vector<std::int64_t> hi) {
  if (lo.size() != hi.size())
    throw std::invalid_argument("bound vectors differ in length");
  for (const auto& c : constraints)
    if (c.coeffs.size() != lo.size())
      throw std::invalid_argument("constraint arity mismatch");
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j])
      return std::nullopt;
  return search(constraints, std::move(lo), std::move(hi));
}

} // namespace blowup
