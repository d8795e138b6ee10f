#ifndef BLOWUP_COHOMOLOGY_HPP
#define BLOWUP_COHOMOLOGY_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "blowup/divisor.hpp"
#include "blowup/fan.hpp"
#include "blowup/homology.hpp"

namespace blowup {

/// A set of rays {rho : <m, u_rho> < -coeff_rho} realized by the character m.
struct DegreeChamber {
  std::vector<std::size_t> negative_set;
  std::vector<std::int64_t> witness_m;
};

/// Faces of the fan (faces of maximal cones) whose rays all lie in vertices.
SimplicialComplex support_complex(const Fan& f, const std::vector<std::size_t>& vertices);

/// Character box radius large enough to realize every chamber of d on this
/// family's fans: (n+2)(max|coeff|+1). Each coordinate of m is confined to an
/// interval with ends of size <= max|coeff|+1, and the coordinate sum to one
/// more such interval; starting from the points nearest zero, closing the gap
/// on the sum moves coordinates by at most (n+1)(max|coeff|+1).
std::int64_t oracle_radius(const Fan& f, const TDivisor& d);

/// Every distinct negative set realized by some m in [-radius, radius]^n,
/// ordered by negative set. Exact: each of the 2^rays candidate sets is
/// decided by an integer feasibility search over the box.
std::vector<DegreeChamber> enumerate_chambers(const Fan& f, const TDivisor& d, std::int64_t radius);

struct CohomologyWitness {
  std::vector<std::int64_t> m;
  std::vector<std::size_t> negative_set;
  int degree = 0; // i with H^i(X, O(d))_m != 0, i >= 1
};

struct OracleReport {
  DivisorClass divisor;
  std::int64_t radius = 0;
  std::size_t chambers_checked = 0;
  std::vector<CohomologyWitness> witnesses;

  bool has_higher_cohomology() const { return !witnesses.empty(); }
};

void to_json(nlohmann::json& j, const CohomologyWitness& w);
void to_json(nlohmann::json& j, const OracleReport& r);

/// Decides nonvanishing of H^i(X, O(d)), i > 0, from reduced homology of the
/// support complexes of all degree chambers. Homology per ray subset is
/// memoized; safe to share across threads.
class CohomologyOracle {
public:
  explicit CohomologyOracle(Fan fan);

  const Fan& fan() const { return fan_; }

  /// Degrees i >= 1 with nonzero H^i contribution for the given negative set.
  std::vector<int> higher_degrees(const std::vector<std::size_t>& negative_set) const;

  /// radius defaults to oracle_radius.
  bool has_higher_cohomology(const DivisorClass& d,
                             std::optional<std::int64_t> radius = std::nullopt) const;

  /// Full chamber enumeration with every witness chamber listed.
  OracleReport analyse(const DivisorClass& d, std::optional<std::int64_t> radius = std::nullopt) const;

private:
  const std::vector<int>& degrees_for_mask(std::uint64_t mask) const;

  Fan fan_;
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::optional<std::vector<int>>> memo_;
};

/// One-shot convenience over CohomologyOracle.
bool has_higher_cohomology(const Fan& f, const DivisorClass& d, std::int64_t radius);

} // namespace blowup

#endif // BLOWUP_COHOMOLOGY_HPP
