#ifndef BLOWUP_DIVISOR_HPP
#define BLOWUP_DIVISOR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace blowup {

/// Dimension of the ambient projective space. Always >= 2.
class FamilyParam {
public:
  explicit FamilyParam(std::int64_t n);
  std::int64_t value() const { return n_; }
  operator std::int64_t() const { return n_; }

private:
  std::int64_t n_;
};

/// A Picard class a*D_y + b*D_t + c*D_u.
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  DivisorClass operator-() const;
  std::int64_t max_abs() const;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass sub(const DivisorClass& x, const DivisorClass& y);

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);
std::string to_string(const DivisorClass& d);

/// Parses "a,b,c" (whitespace tolerated). Throws std::invalid_argument.
DivisorClass parse_divisor(const std::string& text);

/// Multiplicities (alpha_1..alpha_5) over D_v, D_y, D_z, D_t, D_u.
/// Positions are 1-based and cyclic: position 6 is position 1.
struct AlphaRep {
  std::array<std::int64_t, 5> alpha{};

  std::int64_t at(int position) const;
  AlphaRep operator-() const;
  friend bool operator==(const AlphaRep&, const AlphaRep&) = default;
};

/// Cyclic run of consecutive positions, 1-based start.
struct CyclicBlock {
  int start = 1;
  int length = 0;

  bool contains(int position) const;
  friend bool operator==(const CyclicBlock&, const CyclicBlock&) = default;
};

/// Maps (alpha_1..alpha_5) to (a1+a2+a3, a3+a4, a1+a5) using D_z = D_t + D_y
/// and D_v = D_u + D_y.
DivisorClass alpha_to_basis(const AlphaRep& r);

/// The negative positions of r as a single cyclic block, or nullopt if there
/// are none or they are not cyclically contiguous. A full block starts at 1.
std::optional<CyclicBlock> negative_block(const AlphaRep& r);

void to_json(nlohmann::json& j, const DivisorClass& d);
void from_json(const nlohmann::json& j, DivisorClass& d);
void to_json(nlohmann::json& j, const AlphaRep& r);
void from_json(const nlohmann::json& j, AlphaRep& r);

} // namespace blowup

#endif // BLOWUP_DIVISOR_HPP
