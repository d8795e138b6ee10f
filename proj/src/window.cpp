#include "blowup/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace blowup {

std::vector<DivisorClass> Window::points() const {
  std::vector<DivisorClass> out;
  if (empty())
    return out;
  out.reserve(static_cast<std::size_t>(size()));
  for (auto x = a.lo; x <= a.hi; ++x)
    for (auto y = b.lo; y <= b.hi; ++y)
      for (auto z = c.lo; z <= c.hi; ++z)
        out.push_back({x, y, z});
  return out;
}

std::string Window::str() const {
  std::ostringstream os;
  os << a.lo << ".." << a.hi << ',' << b.lo << ".." << b.hi << ',' << c.lo << ".." << c.hi;
  return os.str();
}

namespace {

Interval parse_interval(const std::string& text) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      auto v = std::stoll(text, &used);
      if (used != text.size())
        throw std::invalid_argument(text);
      return {v, v};
    }
    auto lo_text = text.substr(0, dots);
    auto hi_text = text.substr(dots + 2);
    Interval r{std::stoll(lo_text, &used), 0};
    if (used != lo_text.size())
      throw std::invalid_argument(text);
    r.hi = std::stoll(hi_text, &used);
    if (used != hi_text.size())
      throw std::invalid_argument(text);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad window range '" + text + "'");
  }
}

} // namespace

Window parse_window(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ')
      continue;
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("window must be 'aMin..aMax,bMin..bMax,cMin..cMax'");
  Window w{parse_interval(parts[0]), parse_interval(parts[1]), parse_interval(parts[2])};
  if (w.empty())
    throw std::invalid_argument("window is empty: " + text);
  return w;
}

void to_json(nlohmann::json& j, const Window& w) {
  j = {{"a", {w.a.lo, w.a.hi}}, {"b", {w.b.lo, w.b.hi}}, {"c", {w.c.lo, w.c.hi}}};
}

void from_json(const nlohmann::json& j, Window& w) {
  auto iv = [&](const char* key) {
    const auto& r = j.at(key);
    return Interval{r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>()};
  };
  w = {iv("a"), iv("b"), iv("c")};
}

void to_json(nlohmann::json& j, const Counterexample& c) {
  j = {{"divisors", c.divisors}, {"reason", c.reason}};
}

void from_json(const nlohmann::json& j, Counterexample& c) {
  c.divisors = j.at("divisors").get<std::vector<DivisorClass>>();
  c.reason = j.at("reason").get<std::string>();
}

void to_json(nlohmann::json& j, const LemmaReport& r) {
  j = {{"lemma_id", r.lemma_id},
       {"n", r.n},
       {"window", r.window},
       {"verified", r.verified()},
       {"cases_checked", r.cases_checked},
       {"counterexamples", r.counterexamples},
       {"stats", r.stats},
       {"elapsed_seconds", r.elapsed_seconds}};
}

void from_json(const nlohmann::json& j, LemmaReport& r) {
  r.lemma_id = j.at("lemma_id").get<std::string>();
  r.n = j.at("n").get<std::int64_t>();
  r.window = j.at("window").get<std::string>();
  r.cases_checked = j.at("cases_checked").get<std::int64_t>();
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.stats = j.at("stats").get<std::map<std::string, std::int64_t>>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
}

std::string to_text(const LemmaReport& r) {
  std::ostringstream os;
  os << (r.verified() ? "PASS" : "FAIL") << ' ' << r.lemma_id << " n=" << r.n
     << " window=" << r.window << " cases=" << r.cases_checked;
  for (const auto& [k, v] : r.stats)
    os << ' ' << k << '=' << v;
  os << " counterexamples=" << r.counterexamples.size() << " time=" << std::fixed
     << std::setprecision(3) << r.elapsed_seconds << "s\n";
  std::size_t shown = 0;
  for (const auto& c : r.counterexamples) {
    if (++shown > 10) {
      os << "  ...\n";
      break;
    }
    os << "  ";
    for (const auto& d : c.divisors)
      os << d << ' ';
    os << "- " << c.reason << '\n';
  }
  return os.str();
}

} // namespace blowup
