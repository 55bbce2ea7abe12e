#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "filtval/filtration.hpp"
#include "filtval/sampler.hpp"
#include "filtval/valuation.hpp"
#include "filtval/verdict.hpp"

namespace filtval {

/// The audited properties. QV_* hold on every valid filtration (they are
/// theorems of the construction); VAL_* / NUCLOSED_* carry preconditions
/// (strongness, a prime adic base) and can genuinely fail; DV_SURJECTIVE
/// is a range diagnostic.
enum class ClaimId {
    QvSuperadd,
    QvMin,
    QvExists,
    ValStrong,
    ValPrimeAdic,
    NuclosedStrong,
    NuclosedPrimeAdic,
    DvSurjective,
};

struct ClaimInfo {
    ClaimId id;
    std::string_view name;       // wire name, e.g. "QV_SUPERADD"
    std::string_view kind;       // Lemma / Theorem / Proposition / Definition
    std::string_view statement;  // what the checker tests
};

/// All claims in catalog order.
const std::array<ClaimInfo, 8>& claim_catalog();

std::string to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(std::string_view name);

/// One ring + filtration + sampler cell for the audit matrix.
struct Instance {
    RingDescriptor ring;
    Filtration filtration;
    SamplerSpec sampler;
    int max_level = kDefaultMaxLevel;
    int validate_depth = 16;
    int surjectivity_k = 8;

    /// "Z adic(4) int±200" — stable identifier echoed into witnesses.
    std::string fingerprint() const;
};

/// Runs one claim over one instance. The filtration is validated first and
/// claim preconditions are checked; unmet or undecidable preconditions
/// yield Inconclusive, never a silent skip. Pair iteration is the sampler's
/// deterministic stream; the first failure short-circuits, so a reported
/// witness is minimal in enumeration order among the pairs examined.
Verdict run_claim(ClaimId claim, const Instance& instance);

/// Exhaustive scan in enumeration order, ignoring the pair budget; returns
/// the first failing pair. Throws budget_exceeded past 10^7 pairs.
/// nullopt when the claim holds, is inconclusive, or has unmet
/// preconditions.
std::optional<Witness> find_minimal_witness(ClaimId claim, const Instance& instance);

}  // namespace filtval
