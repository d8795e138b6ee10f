// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/cohomology.hpp"
#include "blowup/fan.hpp"
#include "blowup/forbidden.hpp"
#include "blowup/graph.hpp"
#include "blowup/lemmas.hpp"
#include "clique_oracle.hpp"

using namespace blowup;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok)
      detail << why;
    ok = false;
  }
};

int failures = 0;

void criterion(const char* name, const std::function<void(Outcome&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %s (%.1fs)%s%s\n", out.ok ? "PASS" : "FAIL", name, secs,
              out.detail.str().empty() ? "" : " ", out.detail.str().c_str());
  std::fflush(stdout);
  failures += !out.ok;
}

Window cube5() { return Window{{-5, 5}, {-5, 5}, {-5, 5}}; }

void expect_report(Outcome& out, const LemmaReport& r) {
  if (!r.verified()) {
    std::ostringstream s;
    s << r.lemma_id << " n=" << r.n << " counterexamples=" << r.counterexamples.size();
    out.fail(s.str());
  }
}

TDivisor add(const TDivisor& x, const TDivisor& y) {
  TDivisor s = x;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i)
    s.coeffs[i] += y.coeffs[i];
  return s;
}

} // namespace

int main() {
  criterion("classifier equals cohomology oracle, n=3..5, [-5,5]^3", [](Outcome& out) {
    std::size_t checked = 0;
    for (std::int64_t n : {3, 4, 5}) {
      CohomologyOracle oracle(build_fan(FamilyParam(n)));
      for (const auto& d : cube5().points()) {
        ++checked;
        if (is_forbidden(FamilyParam(n), d) != oracle.has_higher_cohomology(d))
          out.fail("n=" + std::to_string(n) + " " + to_string(d));
      }
    }
    out.detail << "classes=" << checked;
  });

  criterion("classifier equals brute force, n=3..5, [-5,5]^3", [](Outcome& out) {
    for (std::int64_t n : {3, 4, 5}) {
      FamilyParam fp(n);
      for (const auto& d : cube5().points())
        if (is_forbidden(fp, d) != brute_force_is_forbidden(fp, d, brute_force_min_radius(fp, d)))
          out.fail("n=" + std::to_string(n) + " " + to_string(d));
    }
  });

  criterion("l1: six compatible classes at a=0, n=4..12", [](Outcome& out) {
    for (std::int64_t n = 4; n <= 12; ++n) {
      auto r = verify_lemma_l1(FamilyParam(n), n + 4);
      expect_report(out, r);
      if (r.stats.at("compatible") != 6)
        out.fail("n=" + std::to_string(n) + " compatible=" + std::to_string(r.stats.at("compatible")));
    }
  });

  criterion("trzy: a=0 clique number is 3, n=4..12", [](Outcome& out) {
    for (std::int64_t n = 4; n <= 12; ++n) {
      auto r = verify_corollary_trzy(FamilyParam(n), n + 4);
      expect_report(out, r);
      if (r.stats.at("max_clique") != 3)
        out.fail("n=" + std::to_string(n) + " max_clique=" + std::to_string(r.stats.at("max_clique")));
    }
  });

  criterion("8: at most 8 classes over a=0..2 with zero, n=4..10", [](Outcome& out) {
    std::int64_t worst = 0;
    for (std::int64_t n = 4; n <= 10; ++n) {
      auto r = verify_lemma_8(FamilyParam(n));
      expect_report(out, r);
      worst = std::max(worst, r.stats.at("max_clique"));
      if (r.stats.at("max_clique") > 8 || r.stats.at("case2_clique") != 1)
        out.fail("n=" + std::to_string(n));
    }
    out.detail << "max_clique=" << worst;
  });

  criterion("gl jeden jedwE bound pom uwa: no counterexamples, n=4..8, a_max=3n", [](Outcome& out) {
    for (std::int64_t n = 4; n <= 8; ++n) {
      FamilyParam fp(n);
      const auto a_max = 3 * n;
      expect_report(out, verify_lemma_gl(fp, a_max, a_max + 2));
      expect_report(out, verify_lemma_jeden(fp, a_max));
      expect_report(out, verify_lemma_jedwE(fp, a_max));
      expect_report(out, verify_lemma_bound(fp, a_max));
      for (std::int64_t k = 1; k <= n + 1; ++k)
        expect_report(out, verify_lemma_pom(fp, k, a_max));
      expect_report(out, verify_remark_k(fp, a_max));
    }
  });

  criterion("fan facts, n=2..10", [](Outcome& out) {
    for (std::int64_t n = 2; n <= 10; ++n) {
      auto f = build_fan(FamilyParam(n));
      auto tag = "n=" + std::to_string(n) + " ";
      if (f.num_rays() != static_cast<std::size_t>(n + 3))
        out.fail(tag + "ray count");
      if (f.max_cones.size() != static_cast<std::size_t>(3 * n - 1))
        out.fail(tag + "cone count");
      if (!is_smooth(f))
        out.fail(tag + "not unimodular");
      if (!is_complete(f))
        out.fail(tag + "not complete");
      if (picard_rank(f) != 3)
        out.fail(tag + "picard rank");
      auto b = verify_batyrev_data(f);
      if (!b.verified() || b.stats.at("size_v") != 1 || b.stats.at("size_y") != n - 1 ||
          b.stats.at("size_z") != 1 || b.stats.at("size_t") != 1 || b.stats.at("size_u") != 1)
        out.fail(tag + "primitive collections");
      auto ray = [&](RayClass c) { return f.ray_divisor(f.representative(c)); };
      if (!linearly_equivalent(f, ray(RayClass::Z), add(ray(RayClass::T), ray(RayClass::Y))))
        out.fail(tag + "D_z != D_t + D_y");
      if (!linearly_equivalent(f, ray(RayClass::V), add(ray(RayClass::U), ray(RayClass::Y))))
        out.fail(tag + "D_v != D_u + D_y");
    }
  });

  criterion("theorem arithmetic, n=21..1000, k=1..n+1", [](Outcome& out) {
    std::size_t rows = 0;
    for (std::int64_t n = 21; n <= 1000; ++n)
      for (std::int64_t k = 1; k <= n + 1; ++k) {
        auto b = theorem_bound(n, k);
        ++rows;
        if (!b.chain_within_closed_form() || !b.below_rank())
          out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    if (theorem_threshold(1000) != 21)
      out.fail("theorem threshold " + std::to_string(theorem_threshold(1000)));
    if (low_cap_threshold(1000) != 14)
      out.fail("low-cap threshold " + std::to_string(low_cap_threshold(1000)));
    expect_report(out, verify_theorem(1000));
    out.detail << "rows=" << rows;
  });

  criterion("clique search equals naive enumeration, n=4,6", [](Outcome& out) {
    std::mt19937_64 rng(20240611);
    std::size_t graphs = 0;
    for (std::int64_t n : {4, 6}) {
      auto g = build_graph(FamilyParam(n), Window{{0, 2}, {-3, 3}, {-3, 3}});
      std::vector<std::size_t> all(g.size());
      std::iota(all.begin(), all.end(), 0);
      for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        auto size = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        std::vector<std::size_t> keep(all.begin(), all.begin() + size);
        std::sort(keep.begin(), keep.end());
        auto h = g.induced(keep);
        ++graphs;
        if (max_clique(h).size != testing::naive_clique_number(h))
          out.fail("n=" + std::to_string(n) + " trial=" + std::to_string(trial));
      }
    }
    out.detail << "graphs=" << graphs;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
