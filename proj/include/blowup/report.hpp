#ifndef BLOWUP_REPORT_HPP
#define BLOWUP_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/divisor.hpp"

namespace blowup {

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Box of divisor classes a_range x b_range x c_range.
struct Window {
  Interval a, b, c;

  bool empty() const { return a.size() == 0 || b.size() == 0 || c.size() == 0; }
  std::int64_t size() const { return a.size() * b.size() * c.size(); }
  bool contains(const DivisorClass& d) const {
    return a.contains(d.a) && b.contains(d.b) && c.contains(d.c);
  }
  /// Lexicographic on (a,b,c).
  std::vector<DivisorClass> points() const;
  std::string str() const;
  friend bool operator==(const Window&, const Window&) = default;
};

/// "aMin..aMax,bMin..bMax,cMin..cMax". Single values ("0") are allowed.
Window parse_window(const std::string& text);

void to_json(nlohmann::json& j, const Window& w);
void from_json(const nlohmann::json& j, Window& w);

struct Counterexample {
  std::vector<DivisorClass> divisors;
  std::string reason;
};

/// Outcome of one finite verification. Verified iff no counterexamples.
struct LemmaReport {
  std::string lemma_id;
  std::int64_t n = 0;
  std::string window;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0.0;
  std::int64_t cases_checked = 0;
  std::map<std::string, std::int64_t> stats;

  bool verified() const { return counterexamples.empty(); }
};

void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const LemmaReport& r);
void from_json(const nlohmann::json& j, Counterexample& c);
void from_json(const nlohmann::json& j, LemmaReport& r);

std::string to_text(const LemmaReport& r);

} // namespace blowup

#endif // BLOWUP_REPORT_HPP
