#include "blowup/homology.hpp"

#include <algorithm>
#include <map>

#include "blowup/linalg.hpp"

namespace blowup {

SimplicialComplex::SimplicialComplex() : by_size_(1, std::vector<Simplex>{Simplex{}}) {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  SimplicialComplex k;
  for (const auto& f : facets)
    k.add_face(f);
  return k;
}

void SimplicialComplex::add_face(Simplex face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (contains(face))
    return;
  const std::size_t size = face.size();
  if (by_size_.size() <= size)
    by_size_.resize(size + 1);
  auto& bucket = by_size_[size];
  bucket.insert(std::lower_bound(bucket.begin(), bucket.end(), face), face);
  for (std::size_t i = 0; i < size; ++i) {
    Simplex sub;
    for (std::size_t j = 0; j < size; ++j)
      if (j != i)
        sub.push_back(face[j]);
    add_face(std::move(sub));
  }
}

bool SimplicialComplex::contains(const Simplex& face) const {
  if (face.size() >= by_size_.size())
    return false;
  const auto& bucket = by_size_[face.size()];
  return std::binary_search(bucket.begin(), bucket.end(), face);
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  static const std::vector<Simplex> none;
  auto size = static_cast<std::size_t>(d + 1);
  if (d < -1 || size >= by_size_.size())
    return none;
  return by_size_[size];
}

int SimplicialComplex::dimension() const {
  for (std::size_t s = by_size_.size(); s-- > 0;)
    if (!by_size_[s].empty())
      return static_cast<int>(s) - 1;
  return -1;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& k, int top_degree) {
  // rank of the boundary map C_d -> C_{d-1} for d = 0..top_degree+1
  auto boundary_rank = [&](int d) -> std::size_t {
    const auto& rows = k.faces(d);
    const auto& cols = k.faces(d - 1);
    if (rows.empty() || cols.empty())
      return 0;
    std::map<Simplex, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i)
      col_index.emplace(cols[i], i);
    linalg::Matrix m(rows.size(), linalg::Vector(cols.size(), Rational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& face = rows[r];
      for (std::size_t i = 0; i < face.size(); ++i) {
        Simplex sub;
        for (std::size_t j = 0; j < face.size(); ++j)
          if (j != i)
            sub.push_back(face[j]);
        m[r][col_index.at(sub)] = Rational(i % 2 == 0 ? 1 : -1);
      }
    }
    return linalg::rank(std::move(m));
  };

  std::vector<std::size_t> ranks;
  std::size_t rank_out = 0; // boundary leaving degree -1 is zero
  for (int d = -1; d <= top_degree; ++d) {
    std::size_t rank_in = boundary_rank(d + 1);
    std::size_t chains = k.faces(d).size();
    ranks.push_back(chains - rank_out - rank_in);
    rank_out = rank_in;
  }
  return ranks;
}

} // namespace blowup
