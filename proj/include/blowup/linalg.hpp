#ifndef BLOWUP_LINALG_HPP
#define BLOWUP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

Matrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

std::size_t rank(Matrix m);

/// Square matrices only.
Rational determinant(Matrix m);

/// Some rational x with m * x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(Matrix m, Vector rhs);

} // namespace blowup::linalg

#endif // BLOWUP_LINALG_HPP
