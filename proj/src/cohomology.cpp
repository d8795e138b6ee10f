#include "blowup/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "blowup/int_feasibility.hpp"

namespace blowup {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> mask_to_set(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1)
      out.push_back(i);
  return out;
}

Mask set_to_mask(const std::vector<std::size_t>& s) {
  Mask m = 0;
  for (auto i : s)
    m |= Mask{1} << i;
  return m;
}

std::optional<std::vector<std::int64_t>> realize(const Fan& f, const TDivisor& d, Mask negative,
                                                 std::int64_t radius) {
  std::vector<LinearLe> cs;
  cs.reserve(f.num_rays());
  for (std::size_t r = 0; r < f.num_rays(); ++r) {
    const auto& u = f.rays[r];
    if (negative >> r & 1) {
      cs.push_back({u, -d.coeffs[r] - 1}); // <m,u> <= -d-1
    } else {
      std::vector<std::int64_t> neg(u.size());
      for (std::size_t i = 0; i < u.size(); ++i)
        neg[i] = -u[i];
      cs.push_back({neg, d.coeffs[r]}); // <m,u> >= -d
    }
  }
  const auto dim = static_cast<std::size_t>(f.dim);
  return find_integer_point(cs, std::vector<std::int64_t>(dim, -radius),
                            std::vector<std::int64_t>(dim, radius));
}

void check_sizes(const Fan& f, const TDivisor& d, std::int64_t radius) {
  if (d.coeffs.size() != f.num_rays())
    throw std::invalid_argument("T-divisor size does not match the fan");
  if (radius < 1)
    throw std::invalid_argument("character radius must be >= 1");
  if (f.num_rays() > 24)
    throw std::invalid_argument("chamber enumeration limited to 24 rays");
}

} // namespace

SimplicialComplex support_complex(const Fan& f, const std::vector<std::size_t>& vertices) {
  Mask allowed = set_to_mask(vertices);
  std::vector<Simplex> facets;
  for (const auto& cone : f.max_cones) {
    Simplex face;
    for (auto r : cone)
      if (allowed >> r & 1)
        face.push_back(r);
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(facets);
}

std::int64_t oracle_radius(const Fan& f, const TDivisor& d) {
  std::int64_t m = 0;
  for (auto c : d.coeffs)
    m = std::max<std::int64_t>(m, std::llabs(c));
  return (f.dim + 2) * (m + 1);
}

std::vector<DegreeChamber> enumerate_chambers(const Fan& f, const TDivisor& d, std::int64_t radius) {
  check_sizes(f, d, radius);
  std::vector<DegreeChamber> out;
  for (Mask s = 0; s < (Mask{1} << f.num_rays()); ++s)
    if (auto m = realize(f, d, s, radius))
      out.push_back({mask_to_set(s), *m});
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.negative_set < y.negative_set; });
  return out;
}

void to_json(nlohmann::json& j, const CohomologyWitness& w) {
  j = {{"m", w.m}, {"negative_set", w.negative_set}, {"nonzero_degree", w.degree}};
}

void to_json(nlohmann::json& j, const OracleReport& r) {
  j = {{"divisor", r.divisor},
       {"radius", r.radius},
       {"chambers_checked", r.chambers_checked},
       {"has_higher_cohomology", r.has_higher_cohomology()},
       {"witnesses", r.witnesses}};
}

CohomologyOracle::CohomologyOracle(Fan fan) : fan_(std::move(fan)) {
  if (fan_.num_rays() > 24)
    throw std::invalid_argument("oracle limited to 24 rays");
  memo_.resize(std::size_t{1} << fan_.num_rays());
}

const std::vector<int>& CohomologyOracle::degrees_for_mask(Mask mask) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (memo_[mask])
      return *memo_[mask];
  }
  auto ranks = reduced_homology_ranks(support_complex(fan_, mask_to_set(mask)), fan_.dim - 1);
  std::vector<int> degrees;
  // ranks[0] is degree -1; reduced degree j >= 0 feeds H^{j+1}.
  for (std::size_t j = 1; j < ranks.size(); ++j)
    if (ranks[j] != 0)
      degrees.push_back(static_cast<int>(j));
  std::lock_guard lock(memo_mutex_);
  if (!memo_[mask])
    memo_[mask] = std::move(degrees);
  return *memo_[mask];
}

std::vector<int> CohomologyOracle::higher_degrees(const std::vector<std::size_t>& negative_set) const {
  return degrees_for_mask(set_to_mask(negative_set));
}

bool CohomologyOracle::has_higher_cohomology(const DivisorClass& d,
                                             std::optional<std::int64_t> radius) const {
  TDivisor t = divisor_class_to_ray_coeffs(fan_, d);
  std::int64_t r = radius.value_or(oracle_radius(fan_, t));
  check_sizes(fan_, t, r);
  // Only subsets with nonzero higher homology need a feasibility search.
  for (Mask s = 0; s < (Mask{1} << fan_.num_rays()); ++s)
    if (!degrees_for_mask(s).empty() && realize(fan_, t, s, r))
      return true;
  return false;
}

OracleReport CohomologyOracle::analyse(const DivisorClass& d, std::optional<std::int64_t> radius) const {
  TDivisor t = divisor_class_to_ray_coeffs(fan_, d);
  OracleReport rep;
  rep.divisor = d;
  rep.radius = radius.value_or(oracle_radius(fan_, t));
  auto chambers = enumerate_chambers(fan_, t, rep.radius);
  rep.chambers_checked = chambers.size();
  for (const auto& ch : chambers) {
    const auto& degs = higher_degrees(ch.negative_set);
    if (!degs.empty())
      rep.witnesses.push_back({ch.witness_m, ch.negative_set, degs.front()});
  }
  return rep;
}

bool has_higher_cohomology(const Fan& f, const DivisorClass& d, std::int64_t radius) {
  return CohomologyOracle(f).has_higher_cohomology(d, radius);
}

} // namespace blowup
