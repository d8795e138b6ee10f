#ifndef BLOWUP_LEMMAS_HPP
#define BLOWUP_LEMMAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "blowup/divisor.hpp"
#include "blowup/graph.hpp"
#include "blowup/rational.hpp"
#include "blowup/report.hpp"

// Finite verifications of the counting statements about strongly exceptional
// collections of line bundles on P^n blown up in two points. Every collection
// is normalized to contain (0,0,0) with all other members having a >= 0, so a
// candidate member must be compatible with zero: neither d nor -d forbidden.
//
// Windows: (b,c) ranges are the admissible box -1 <= b,c <= a widened by one,
// which dominates all candidates once verify_lemma_gl has passed.

namespace blowup {

enum class HighType { NotHigh, Type1, Type2, Forbidden };

const char* to_string(HighType t);

/// Neither d nor -d is forbidden.
bool compatible_with_zero(FamilyParam n, const DivisorClass& d);

/// NotHigh when a <= n. Otherwise Type1 (b = 1) or Type2 (c = 1) when d is
/// compatible with zero, Forbidden otherwise. b = c = 1 reports Type1.
HighType classify_high(FamilyParam n, const DivisorClass& d);

/// The six classes (0,b,c) compatible with zero.
const std::vector<DivisorClass>& zero_slice_neighbours();

/// All (0,b,c), |b|,|c| <= margin: compatible with zero iff listed.
/// Throws if margin < n+2.
LemmaReport verify_lemma_l1(FamilyParam n, std::int64_t margin);

/// Clique number of the a = 0 slice with |b|,|c| <= margin is at most 3.
/// stats["max_clique"] holds the exact clique number.
LemmaReport verify_corollary_trzy(FamilyParam n, std::int64_t margin);

/// For 1 <= a <= a_max and |b|,|c| <= margin, classes compatible with zero
/// satisfy -1 <= b <= a, -1+a-b <= c <= a and -1+a-c <= b <= a.
LemmaReport verify_lemma_gl(FamilyParam n, std::int64_t a_max, std::int64_t margin);

/// Cliques containing (0,0,0) within a in {0,1,2} have at most 8 members;
/// also confirms the two extremal configurations from the case analysis.
LemmaReport verify_lemma_8(FamilyParam n);

/// High classes (n < a <= a_max) compatible with zero have b = 1 or c = 1.
LemmaReport verify_lemma_jeden(FamilyParam n, std::int64_t a_max);

/// No strict Type1 high is compatible with a strict Type2 high. Requires n > 3.
LemmaReport verify_lemma_jedwE(FamilyParam n, std::int64_t a_max);

/// Cliques of Type1 highs have at most (#distinct a) + 2 members, a - c lies in
/// {0,1,2}, and a - c never decreases as a increases. Requires n > 3.
LemmaReport verify_lemma_bound(FamilyParam n, std::int64_t a_max);

/// With a Type1 high L of a >= n+k in the collection, every very low class
/// (a < k) has b = 0. Requires n > 3 and 1 <= k <= n+1.
LemmaReport verify_lemma_pom(FamilyParam n, std::int64_t k, std::int64_t a_max);

/// Two compatible Type1 highs differ in a by at most n, so k <= n+1.
/// Requires n > 3.
LemmaReport verify_remark_k(FamilyParam n, std::int64_t a_max);

/// Length bound for a collection with k distinct high a-values.
struct TheoremBound {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Rational chain;        // k+1 + (8/3)(n-k-1) + 6 + k+2
  Rational closed_form;  // (8/3)n - (2/3)k + 19/3
  Rational low_cap;      // (8/3)(n-1) + 6
  std::int64_t rank = 0; // 3n-1
  bool chain_within_closed_form() const { return chain <= closed_form; }
  bool below_rank() const { return closed_form < Rational(rank); }
};

/// Throws unless n >= 1 and 0 <= k <= n+1.
TheoremBound theorem_bound(std::int64_t n, std::int64_t k);

/// Smallest n0 such that the closed form is below 3n-1 for every n in
/// [n0, n_max] and every 1 <= k <= n+1.
std::int64_t theorem_threshold(std::int64_t n_max);

/// Smallest n0 such that (8/3)(n-1)+6 < 3n-1 for every n in [n0, n_max].
std::int64_t low_cap_threshold(std::int64_t n_max);

/// Exact check of the length bound for 21 <= n <= n_max and all k, plus the
/// thresholds n > 20 and n > 13 being sharp.
LemmaReport verify_theorem(std::int64_t n_max);

/// Lemma ids in reporting order: l1 trzy gl 8 jeden jedwE bound pom uwa tw.
const std::vector<std::string>& lemma_ids();

/// Runs one verifier with windows derived from n (a_max = 3n, margins n+4).
/// pom runs every k in 1..n+1. Throws std::invalid_argument for an unknown id
/// or an n outside the verifier's range.
LemmaReport run_lemma(const std::string& id, FamilyParam n);

/// Whether run_lemma accepts n for this id; otherwise sets why.
bool lemma_applies(const std::string& id, FamilyParam n, std::string& why);

} // namespace blowup

#endif // BLOWUP_LEMMAS_HPP
