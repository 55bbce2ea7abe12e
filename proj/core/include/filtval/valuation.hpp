#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "filtval/extvalue.hpp"
#include "filtval/filtration.hpp"
#include "filtval/verdict.hpp"

namespace filtval {

inline constexpr int kDefaultMaxLevel = 64;

/// The level map: nu(a) = Finite(i) for the least i with a in level(i) but
/// not in level(i+1); Infinity when a provably lies in every level (a = 0,
/// or a inside a stabilized tail); AtLeast(max_level) when the bounded scan
/// runs out without a stabilization proof. Total by construction — the
/// classical map is undefined on the intersection of all levels, which is
/// exactly where Infinity and AtLeast take over.
ExtValue nu(const Filtration& F, const Element& a, int max_level = kDefaultMaxLevel);

enum class Relation { Geq, Eq, MinGeq };

struct AxiomCheckResult {
    Element a;
    Element b;
    ExtValue lhs;
    ExtValue rhs;
    Relation relation;
    Outcome verdict;
};

/// nu(a*b) >= nu(a) + nu(b); Inconclusive when AtLeast bounds block the
/// comparison at this max_level.
AxiomCheckResult check_superadditive(const Filtration& F, const Element& a, const Element& b,
                                     int max_level = kDefaultMaxLevel);

/// nu(a+b) >= min(nu(a), nu(b)).
AxiomCheckResult check_min_inequality(const Filtration& F, const Element& a, const Element& b,
                                      int max_level = kDefaultMaxLevel);

/// nu(a*b) == nu(a) + nu(b), the equality that upgrades the level map to a
/// valuation. Total under the extended semantics: the comparison is made
/// for every pair, including zero products.
AxiomCheckResult check_additive(const Filtration& F, const Element& a, const Element& b,
                                int max_level = kDefaultMaxLevel);

enum class Membership { Yes, No, Unknown };

/// Membership in nu^{-1}(infinity) — Yes/No only when proved.
Membership is_in_inf_preimage(const Filtration& F, const Element& a,
                              int max_level = kDefaultMaxLevel);

/// Per-pair classifier for multiplicative primality of nu^{-1}(infinity):
/// Fails when a*b lies in the preimage while neither factor does.
Outcome classify_inf_preimage_pair(const Filtration& F, const Element& a, const Element& b,
                                   int max_level = kDefaultMaxLevel);

/// Scans sample x sample (diagonal order) for a primality violation of
/// nu^{-1}(infinity); the witness is the first violating pair.
Verdict check_inf_preimage_prime(const Filtration& F, const std::vector<Element>& sample,
                                 int max_level = kDefaultMaxLevel);

struct SurjectivityReport {
    std::set<long> attained;  // values in [0, k_max] hit by a Finite nu
    std::set<long> missing;
    std::uint64_t unknown_count = 0;  // sample elements stuck at AtLeast
};

/// Which values in [0, k_max] the level map attains over the sample.
SurjectivityReport surjectivity_report(const Filtration& F, const std::vector<Element>& sample,
                                       int k_max, int max_level = kDefaultMaxLevel);

}  // namespace filtval
