#include "blowup/divisor.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace blowup {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("divisor coordinate overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t x) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, x, &r))
    throw std::overflow_error("divisor coordinate overflow");
  return r;
}

} // namespace

FamilyParam::FamilyParam(std::int64_t n) : n_(n) {
  if (n < 2)
    throw std::invalid_argument("family parameter n must be >= 2, got " +
                                std::to_string(n));
}

DivisorClass DivisorClass::operator-() const {
  return {checked_neg(a), checked_neg(b), checked_neg(c)};
}

std::int64_t DivisorClass::max_abs() const {
  return std::max({std::llabs(a), std::llabs(b), std::llabs(c)});
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c)};
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  return x + (-y);
}

DivisorClass sub(const DivisorClass& x, const DivisorClass& y) { return x - y; }

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  return os << '(' << d.a << ',' << d.b << ',' << d.c << ')';
}

std::string to_string(const DivisorClass& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

DivisorClass parse_divisor(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']')
      cleaned.push_back(ch);
  std::array<std::int64_t, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = cleaned.find(',', pos);
    if ((i < 2) != (end != std::string::npos))
      throw std::invalid_argument("divisor must be 'a,b,c': " + text);
    std::string part = cleaned.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t used = 0;
    try {
      v[i] = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad divisor coordinate '" + part + "'");
    }
    if (used != part.size())
      throw std::invalid_argument("bad divisor coordinate '" + part + "'");
    pos = end + 1;
  }
  return {v[0], v[1], v[2]};
}

std::int64_t AlphaRep::at(int position) const {
  int idx = ((position - 1) % 5 + 5) % 5;
  return alpha[static_cast<std::size_t>(idx)];
}

AlphaRep AlphaRep::operator-() const {
  AlphaRep r;
  for (std::size_t i = 0; i < 5; ++i)
    r.alpha[i] = checked_neg(alpha[i]);
  return r;
}

bool CyclicBlock::contains(int position) const {
  int offset = ((position - start) % 5 + 5) % 5;
  return offset < length;
}

DivisorClass alpha_to_basis(const AlphaRep& r) {
  const auto& x = r.alpha;
  return {checked_add(checked_add(x[0], x[1]), x[2]), checked_add(x[2], x[3]),
          checked_add(x[0], x[4])};
}

std::optional<CyclicBlock> negative_block(const AlphaRep& r) {
  int count = 0;
  for (auto v : r.alpha)
    count += v < 0;
  if (count == 0)
    return std::nullopt;
  if (count == 5)
    return CyclicBlock{1, 5};
  // A contiguous block starts right after a nonnegative entry.
  for (int start = 1; start <= 5; ++start) {
    if (r.at(start) >= 0 || r.at(start - 1) < 0)
      continue;
    int len = 0;
    while (len < 5 && r.at(start + len) < 0)
      ++len;
    if (len == count)
      return CyclicBlock{start, len};
    return std::nullopt;
  }
  return std::nullopt;
}

void to_json(nlohmann::json& j, const DivisorClass& d) { j = {d.a, d.b, d.c}; }

void from_json(const nlohmann::json& j, DivisorClass& d) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("divisor JSON must be [a,b,c]");
  d = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

void to_json(nlohmann::json& j, const AlphaRep& r) {
  j = nlohmann::json::array();
  for (auto v : r.alpha)
    j.push_back(v);
}

void from_json(const nlohmann::json& j, AlphaRep& r) {
  if (!j.is_array() || j.size() != 5)
    throw std::invalid_argument("alpha JSON must have 5 entries");
  for (std::size_t i = 0; i < 5; ++i)
    r.alpha[i] = j[i].get<std::int64_t>();
}

} // namespace blowup
