#include "blowup/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "blowup/forbidden.hpp"

namespace blowup {

namespace {

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

LemmaReport start_report(std::string id, FamilyParam n, std::string window) {
  LemmaReport r;
  r.lemma_id = std::move(id);
  r.n = n.value();
  r.window = std::move(window);
  return r;
}

void require_n_above_3(FamilyParam n, const char* id) {
  if (n.value() <= 3)
    throw std::invalid_argument(std::string(id) + " requires n > 3");
}

bool in_admissible_box(const DivisorClass& d) {
  return -1 <= d.b && d.b <= d.a && -1 + d.a - d.b <= d.c && d.c <= d.a &&
         -1 + d.a - d.c <= d.b;
}

// Type1 highs with a in [a_lo, a_hi]; c spans the box a-2..a widened by one.
std::vector<DivisorClass> type1_highs(FamilyParam n, std::int64_t a_lo, std::int64_t a_hi) {
  std::vector<DivisorClass> out;
  for (auto a = std::max(a_lo, n.value() + 1); a <= a_hi; ++a)
    for (auto c = a - 3; c <= a + 1; ++c) {
      DivisorClass d{a, 1, c};
      if (classify_high(n, d) == HighType::Type1)
        out.push_back(d);
    }
  return out;
}

std::vector<DivisorClass> type2_highs(FamilyParam n, std::int64_t a_lo, std::int64_t a_hi) {
  std::vector<DivisorClass> out;
  for (auto a = std::max(a_lo, n.value() + 1); a <= a_hi; ++a)
    for (auto b = a - 3; b <= a + 1; ++b) {
      DivisorClass d{a, b, 1};
      if (compatible_with_zero(n, d))
        out.push_back(d);
    }
  return out;
}

bool compatible(FamilyParam n, const DivisorClass& x, const DivisorClass& y) {
  return is_compatible(n, x, y).compatible();
}

} // namespace

const char* to_string(HighType t) {
  switch (t) {
  case HighType::NotHigh:
    return "not-high";
  case HighType::Type1:
    return "type1";
  case HighType::Type2:
    return "type2";
  case HighType::Forbidden:
    return "forbidden";
  }
  return "?";
}

bool compatible_with_zero(FamilyParam n, const DivisorClass& d) {
  return !is_forbidden(n, d) && !is_forbidden(n, -d);
}

HighType classify_high(FamilyParam n, const DivisorClass& d) {
  if (d.a <= n.value())
    return HighType::NotHigh;
  if (!compatible_with_zero(n, d))
    return HighType::Forbidden;
  if (d.b == 1)
    return HighType::Type1;
  if (d.c == 1)
    return HighType::Type2;
  return HighType::Forbidden;
}

const std::vector<DivisorClass>& zero_slice_neighbours() {
  static const std::vector<DivisorClass> six{{0, -1, 0}, {0, 0, -1}, {0, 1, 0},
                                             {0, 0, 1},  {0, -1, 1}, {0, 1, -1}};
  return six;
}

LemmaReport verify_lemma_l1(FamilyParam n, std::int64_t margin) {
  if (margin < n.value() + 2)
    throw std::invalid_argument("l1 margin must be at least n+2");
  Stopwatch clock;
  Window w{{0, 0}, {-margin, margin}, {-margin, margin}};
  auto rep = start_report("l1", n, w.str());
  const auto& six = zero_slice_neighbours();
  std::int64_t found = 0;
  for (const auto& d : w.points()) {
    if (d == DivisorClass{})
      continue;
    ++rep.cases_checked;
    bool listed = std::find(six.begin(), six.end(), d) != six.end();
    bool ok = compatible_with_zero(n, d);
    found += ok;
    if (ok && !listed)
      rep.counterexamples.push_back({{d}, "compatible with zero but not listed"});
    if (!ok && listed)
      rep.counterexamples.push_back({{d}, "listed but not compatible with zero"});
  }
  rep.stats["compatible"] = found;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_corollary_trzy(FamilyParam n, std::int64_t margin) {
  if (margin < 1)
    throw std::invalid_argument("trzy margin must be positive");
  Stopwatch clock;
  Window w{{0, 0}, {-margin, margin}, {-margin, margin}};
  auto rep = start_report("trzy", n, w.str());
  auto g = build_graph(n, w);
  auto best = max_clique(g);
  rep.cases_checked = static_cast<std::int64_t>(g.size());
  rep.stats["max_clique"] = static_cast<std::int64_t>(best.size);
  if (best.size > 3) {
    Counterexample c{{}, "more than 3 mutually compatible classes with a = 0"};
    for (auto v : best.members)
      c.divisors.push_back(g.vertex(v));
    rep.counterexamples.push_back(std::move(c));
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_gl(FamilyParam n, std::int64_t a_max, std::int64_t margin) {
  if (a_max < 1)
    throw std::invalid_argument("gl a_max must be >= 1");
  Stopwatch clock;
  Window w{{1, a_max}, {-margin, margin}, {-margin, margin}};
  auto rep = start_report("gl", n, w.str());
  std::int64_t admissible = 0;
  for (const auto& d : w.points()) {
    ++rep.cases_checked;
    if (!compatible_with_zero(n, d))
      continue;
    ++admissible;
    if (!in_admissible_box(d))
      rep.counterexamples.push_back({{d}, "compatible with zero outside the admissible box"});
  }
  rep.stats["admissible"] = admissible;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_8(FamilyParam n) {
  if (n.value() < 4)
    throw std::invalid_argument("8 requires n >= 4");
  Stopwatch clock;
  Window w{{0, 2}, {-2, 3}, {-2, 3}};
  auto rep = start_report("8", n, w.str());
  auto g = build_graph(n, w);
  auto zero = g.index_of({0, 0, 0});
  auto best = max_clique_containing(g, zero);
  rep.cases_checked = static_cast<std::int64_t>(g.size());
  rep.stats["max_clique"] = static_cast<std::int64_t>(best.size);
  if (best.size > 8) {
    Counterexample c{{}, "more than 8 classes over three consecutive a"};
    for (auto v : best.members)
      c.divisors.push_back(g.vertex(v));
    rep.counterexamples.push_back(std::move(c));
  }

  auto check_clique = [&](const std::vector<DivisorClass>& set, const char* name) {
    std::vector<std::size_t> idx;
    for (const auto& d : set)
      idx.push_back(g.index_of(d));
    bool ok = g.is_clique(idx);
    rep.stats[name] = ok;
    if (!ok)
      rep.counterexamples.push_back({set, std::string(name) + " is not a clique"});
  };
  check_clique({{0, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}}, "case1_clique");
  check_clique({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {2, 1, 1}},
               "case2_clique");
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_jeden(FamilyParam n, std::int64_t a_max) {
  Stopwatch clock;
  auto rep = start_report("jeden", n,
                          std::to_string(n.value() + 1) + ".." + std::to_string(a_max) +
                              ",-2..a+1,-2..a+1");
  std::int64_t type1 = 0, type2 = 0;
  for (auto a = n.value() + 1; a <= a_max; ++a)
    for (auto b = std::int64_t{-2}; b <= a + 1; ++b)
      for (auto c = std::int64_t{-2}; c <= a + 1; ++c) {
        DivisorClass d{a, b, c};
        ++rep.cases_checked;
        if (!compatible_with_zero(n, d))
          continue;
        type1 += b == 1;
        type2 += c == 1;
        if (b != 1 && c != 1)
          rep.counterexamples.push_back({{d}, "high, compatible with zero, b != 1 and c != 1"});
      }
  rep.stats["type1"] = type1;
  rep.stats["type2"] = type2;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_jedwE(FamilyParam n, std::int64_t a_max) {
  require_n_above_3(n, "jedwE");
  Stopwatch clock;
  auto rep = start_report("jedwE", n, std::to_string(n.value() + 1) + ".." + std::to_string(a_max));
  std::vector<DivisorClass> ones, twos;
  for (const auto& d : type1_highs(n, n.value() + 1, a_max)) {
    if (d.c < n.value() - 1)
      rep.counterexamples.push_back({{d}, "type1 high with c < n-1"});
    if (d.c != 1)
      ones.push_back(d);
  }
  for (const auto& d : type2_highs(n, n.value() + 1, a_max)) {
    if (d.b < n.value() - 1)
      rep.counterexamples.push_back({{d}, "type2 high with b < n-1"});
    if (d.b != 1)
      twos.push_back(d);
  }
  for (const auto& x : ones)
    for (const auto& y : twos) {
      ++rep.cases_checked;
      if (compatible(n, x, y))
        rep.counterexamples.push_back({{x, y}, "compatible highs of both types"});
    }
  rep.stats["type1"] = static_cast<std::int64_t>(ones.size());
  rep.stats["type2"] = static_cast<std::int64_t>(twos.size());
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_bound(FamilyParam n, std::int64_t a_max) {
  require_n_above_3(n, "bound");
  Stopwatch clock;
  auto rep = start_report("bound", n, std::to_string(n.value() + 1) + ".." + std::to_string(a_max));
  auto g = build_graph(n, type1_highs(n, n.value() + 1, a_max));

  for (const auto& d : g.vertices())
    if (d.a - d.c < 0 || d.a - d.c > 2)
      rep.counterexamples.push_back({{d}, "a - c outside {0,1,2}"});

  // Monotonicity is pairwise, so checking edges covers every clique.
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto j : g.neighbours(i).members()) {
      const auto& x = g.vertex(i);
      const auto& y = g.vertex(j);
      if (x.a < y.a && y.a - y.c < x.a - x.c)
        rep.counterexamples.push_back({{x, y}, "a - c decreases while a increases"});
    }

  // The excess |C| - #a(C) never drops when a vertex is added, so maximal
  // cliques attain its maximum.
  std::int64_t max_excess = 0, cliques = 0;
  for_each_maximal_clique(g, [&](const std::vector<std::size_t>& c) {
    ++cliques;
    std::set<std::int64_t> as;
    for (auto v : c)
      as.insert(g.vertex(v).a);
    auto excess = static_cast<std::int64_t>(c.size()) - static_cast<std::int64_t>(as.size());
    max_excess = std::max(max_excess, excess);
    if (excess > 2) {
      Counterexample ce{{}, "more than k+2 type1 highs"};
      for (auto v : c)
        ce.divisors.push_back(g.vertex(v));
      rep.counterexamples.push_back(std::move(ce));
    }
  });
  rep.cases_checked = cliques;
  rep.stats["vertices"] = static_cast<std::int64_t>(g.size());
  rep.stats["maximal_cliques"] = cliques;
  rep.stats["max_excess"] = max_excess;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_lemma_pom(FamilyParam n, std::int64_t k, std::int64_t a_max) {
  require_n_above_3(n, "pom");
  if (k < 1 || k > n.value() + 1)
    throw std::invalid_argument("pom requires 1 <= k <= n+1");
  Stopwatch clock;
  auto rep = start_report("pom", n,
                          "k=" + std::to_string(k) + " L:" + std::to_string(n.value() + k) + ".." +
                              std::to_string(a_max) + " B:0.." + std::to_string(k - 1));
  auto highs = type1_highs(n, n.value() + k, a_max);
  std::vector<DivisorClass> very_low;
  for (std::int64_t a = 0; a < k; ++a)
    for (auto b = std::int64_t{-2}; b <= a + 2; ++b)
      for (auto c = std::int64_t{-2}; c <= a + 2; ++c)
        if (compatible_with_zero(n, {a, b, c}))
          very_low.push_back({a, b, c});
  for (const auto& l : highs)
    for (const auto& b : very_low) {
      ++rep.cases_checked;
      if (!compatible(n, l, b))
        continue;
      if (b.b != 0)
        rep.counterexamples.push_back({{l, b}, "very low class with b != 0 beside a high"});
      else if (b.a >= 1 && b.c != b.a && b.c != b.a - 1)
        rep.counterexamples.push_back({{l, b}, "very low class with c not in {a-1, a}"});
    }
  rep.stats["k"] = k;
  rep.stats["highs"] = static_cast<std::int64_t>(highs.size());
  rep.stats["very_low"] = static_cast<std::int64_t>(very_low.size());
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

LemmaReport verify_remark_k(FamilyParam n, std::int64_t a_max) {
  require_n_above_3(n, "uwa");
  Stopwatch clock;
  auto rep = start_report("uwa", n, std::to_string(n.value() + 1) + ".." + std::to_string(a_max));
  auto highs = type1_highs(n, n.value() + 1, a_max);
  std::int64_t spread = 0;
  for (std::size_t i = 0; i < highs.size(); ++i)
    for (std::size_t j = i + 1; j < highs.size(); ++j) {
      ++rep.cases_checked;
      const auto& x = highs[i];
      const auto& y = highs[j];
      if (!compatible(n, x, y))
        continue;
      auto gap = std::max(x.a, y.a) - std::min(x.a, y.a);
      spread = std::max(spread, gap);
      if (gap > n.value())
        rep.counterexamples.push_back({{x, y}, "compatible type1 highs differ in a by more than n"});
    }
  rep.stats["max_a_gap"] = spread;
  rep.stats["max_k"] = spread + 1;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

TheoremBound theorem_bound(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || k > n + 1)
    throw std::invalid_argument("theorem_bound requires n >= 1 and 0 <= k <= n+1");
  const Rational eight_thirds(8, 3);
  TheoremBound t;
  t.n = n;
  t.k = k;
  t.chain = Rational(k + 1) + eight_thirds * Rational(n - k - 1) + Rational(6) + Rational(k + 2);
  t.closed_form = eight_thirds * Rational(n) - Rational(2, 3) * Rational(k) + Rational(19, 3);
  t.low_cap = eight_thirds * Rational(n - 1) + Rational(6);
  t.rank = 3 * n - 1;
  return t;
}

std::int64_t theorem_threshold(std::int64_t n_max) {
  std::int64_t threshold = n_max + 1;
  for (std::int64_t n = n_max; n >= 1; --n) {
    bool all = true;
    for (std::int64_t k = 1; k <= n + 1 && all; ++k)
      all = theorem_bound(n, k).below_rank();
    if (!all)
      break;
    threshold = n;
  }
  return threshold;
}

std::int64_t low_cap_threshold(std::int64_t n_max) {
  std::int64_t threshold = n_max + 1;
  for (std::int64_t n = n_max; n >= 1; --n) {
    if (!(theorem_bound(n, 0).low_cap < Rational(3 * n - 1)))
      break;
    threshold = n;
  }
  return threshold;
}

LemmaReport verify_theorem(std::int64_t n_max) {
  if (n_max < 21)
    throw std::invalid_argument("tw needs n_max >= 21");
  Stopwatch clock;
  LemmaReport rep;
  rep.lemma_id = "tw";
  rep.n = n_max;
  rep.window = "n=1.." + std::to_string(n_max) + ",k=1..n+1";
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 1; k <= n + 1; ++k) {
      ++rep.cases_checked;
      auto t = theorem_bound(n, k);
      if (!t.chain_within_closed_form())
        rep.counterexamples.push_back({{}, "chain exceeds closed form at n=" + std::to_string(n) +
                                               " k=" + std::to_string(k)});
      if (n > 20 && !t.below_rank())
        rep.counterexamples.push_back({{}, "bound not below 3n-1 at n=" + std::to_string(n) +
                                               " k=" + std::to_string(k)});
    }
  auto tw = theorem_threshold(n_max);
  auto ob = low_cap_threshold(n_max);
  rep.stats["theorem_threshold"] = tw;
  rep.stats["low_cap_threshold"] = ob;
  if (tw != 21)
    rep.counterexamples.push_back({{}, "length bound threshold is n >= " + std::to_string(tw)});
  if (ob != 14)
    rep.counterexamples.push_back({{}, "low bundle cap threshold is n >= " + std::to_string(ob)});
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"l1",    "trzy",  "gl",  "8",   "jeden",
                                            "jedwE", "bound", "pom", "uwa", "tw"};
  return ids;
}

bool lemma_applies(const std::string& id, FamilyParam n, std::string& why) {
  if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end()) {
    why = "unknown lemma id '" + id + "'";
    return false;
  }
  if (id == "8" && n.value() < 4) {
    why = "requires n >= 4";
    return false;
  }
  if ((id == "jedwE" || id == "bound" || id == "pom" || id == "uwa") && n.value() <= 3) {
    why = "requires n > 3";
    return false;
  }
  return true;
}

LemmaReport run_lemma(const std::string& id, FamilyParam n) {
  std::string why;
  if (!lemma_applies(id, n, why))
    throw std::invalid_argument(id + ": " + why);
  const auto nv = n.value();
  const auto a_max = 3 * nv;
  if (id == "l1")
    return verify_lemma_l1(n, nv + 4);
  if (id == "trzy")
    return verify_corollary_trzy(n, nv + 4);
  if (id == "gl")
    return verify_lemma_gl(n, a_max, a_max + 2);
  if (id == "8")
    return verify_lemma_8(n);
  if (id == "jeden")
    return verify_lemma_jeden(n, a_max);
  if (id == "jedwE")
    return verify_lemma_jedwE(n, a_max);
  if (id == "bound")
    return verify_lemma_bound(n, a_max);
  if (id == "uwa")
    return verify_remark_k(n, a_max);
  if (id == "tw")
    return verify_theorem(std::max<std::int64_t>(1000, nv));
  // pom: merge every k into one report.
  Stopwatch clock;
  auto rep = start_report("pom", n, "k=1.." + std::to_string(nv + 1));
  for (std::int64_t k = 1; k <= nv + 1; ++k) {
    auto part = verify_lemma_pom(n, k, a_max);
    rep.cases_checked += part.cases_checked;
    rep.counterexamples.insert(rep.counterexamples.end(), part.counterexamples.begin(),
                               part.counterexamples.end());
  }
  rep.stats["k_values"] = nv + 1;
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

} // namespace blowup
