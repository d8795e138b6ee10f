#ifndef BLOWUP_FAN_HPP
#define BLOWUP_FAN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/divisor.hpp"
#include "blowup/report.hpp"

namespace blowup {

using Ray = std::vector<std::int64_t>;
/// Sorted ray indices.
using Cone = std::vector<std::size_t>;

/// The five linear-equivalence classes of T-divisors, in cyclic order
/// X_0..X_4: D_v, D_y, D_z, D_t, D_u.
enum class RayClass { V = 0, Y = 1, Z = 2, T = 3, U = 4 };

const char* class_name(RayClass c);

struct TDivisorLabel {
  RayClass label = RayClass::V;
  std::size_t member = 0; // position within the class; only Y has several
  std::size_t ray_index = 0;
};

/// Integer multiplicity per ray.
struct TDivisor {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const TDivisor&, const TDivisor&) = default;
};

struct Fan {
  int dim = 0;
  std::vector<Ray> rays;
  std::vector<Cone> max_cones;
  std::vector<TDivisorLabel> labels; // one per ray, indexed by ray

  std::size_t num_rays() const { return rays.size(); }
  /// Ray indices carrying a label, ascending.
  std::vector<std::size_t> rays_of(RayClass c) const;
  /// Smallest ray index in the class; for Y this is the basis ray.
  std::size_t representative(RayClass c) const;
  /// Indicator divisor of one ray.
  TDivisor ray_divisor(std::size_t ray) const;
  /// True iff the ray set is contained in some maximal cone.
  bool is_face(const std::vector<std::size_t>& ray_set) const;
};

/// Fan of P^n star-subdivided at the torus-fixed points <e_1..e_n> and
/// <e_0,e_2..e_n>, with e_0 = -(e_1+..+e_n). Rays: e_1..e_n, e_0, then the two
/// new rays e_1+..+e_n and -e_1. Labels come from primitive collections.
/// Throws std::invalid_argument for n < 2.
Fan build_fan(FamilyParam n);

/// Every maximal cone has n rays with determinant +-1.
bool is_smooth(const Fan& f);

/// Every codimension-one face lies in exactly two maximal cones and the
/// dual graph of maximal cones is connected.
bool is_complete(const Fan& f);

/// Number of rays minus the rank of the ray matrix.
std::size_t picard_rank(const Fan& f);

/// Minimal ray sets that are not faces though every proper subset is.
/// Ascending by size, then lexicographic. Limited to at most 24 rays.
std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f);

/// d1 - d2 is the divisor of a character m in Z^n.
bool linearly_equivalent(const Fan& f, const TDivisor& d1, const TDivisor& d2);

/// a*D_y + b*D_t + c*D_u on the representative rays.
TDivisor divisor_class_to_ray_coeffs(const Fan& f, const DivisorClass& d);

/// Class of a T-divisor in the basis (D_y, D_t, D_u).
DivisorClass reduce_to_class(const Fan& f, const TDivisor& d);

/// Checks 5 primitive collections X_i u X_{i+1} with |X_1| = n-1 and all
/// other classes singletons. Stats record the class sizes.
LemmaReport verify_batyrev_data(const Fan& f);

void to_json(nlohmann::json& j, const Fan& f);

} // namespace blowup

#endif // BLOWUP_FAN_HPP
