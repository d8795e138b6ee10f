#ifndef BLOWUP_HOMOLOGY_HPP
#define BLOWUP_HOMOLOGY_HPP

#include <cstddef>
#include <vector>

namespace blowup {

using Simplex = std::vector<std::size_t>;

/// Abstract simplicial complex; faces are kept closed under subsets and always
/// include the empty face.
class SimplicialComplex {
public:
  SimplicialComplex();
  /// Closure of the given facets.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  void add_face(Simplex face);
  bool contains(const Simplex& face) const;
  /// Faces of dimension d (d+1 vertices), sorted. d = -1 is the empty face.
  const std::vector<Simplex>& faces(int d) const;
  /// Largest d with a face, or -1 for the empty complex.
  int dimension() const;

private:
  std::vector<std::vector<Simplex>> by_size_; // index = number of vertices
};

/// Ranks of reduced rational homology in degrees -1..top_degree (inclusive).
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& k, int top_degree);

} // namespace blowup

#endif // BLOWUP_HOMOLOGY_HPP
