#include "filtval/claims.hpp"

#include <algorithm>

#include "filtval/errors.hpp"

namespace filtval {

namespace {

constexpr std::uint64_t kWitnessScanCap = 10000000;

const std::array<ClaimInfo, 8> kCatalog = {{
    {ClaimId::QvSuperadd, "QV_SUPERADD", "Lemma", "v(ab) >= v(a)+v(b)"},
    {ClaimId::QvMin, "QV_MIN", "Lemma", "v(a+b) >= min{v(a), v(b)}"},
    {ClaimId::QvExists, "QV_EXISTS", "Theorem",
     "a filtered ring admits a quasi valuation (both lemmas hold)"},
    {ClaimId::ValStrong, "VAL_STRONG", "Proposition",
     "a strongly filtered ring admits a valuation: v(ab) = v(a)+v(b)"},
    {ClaimId::ValPrimeAdic, "VAL_PRIME_ADIC", "Proposition",
     "be P-adic filtration with P prime => v(ab) = v(a)+v(b)"},
    {ClaimId::NuclosedStrong, "NUCLOSED_STRONG", "Proposition",
     "strong filtration => v^-1(infinity) is multiplicatively prime"},
    {ClaimId::NuclosedPrimeAdic, "NUCLOSED_PRIME_ADIC", "Proposition",
     "prime-adic filtration => v^-1(infinity) is multiplicatively prime"},
    {ClaimId::DvSurjective, "DV_SURJECTIVE", "Definition",
     "discrete valuation diagnostic: v attains every value in [0, K]"},
}};

// Everything a pair-loop needs, independent of budget/thinning policy.
struct ClaimContext {
    const Instance& inst;
    std::vector<Element> sample;
    std::vector<ExtValue> sample_nu;  // memoized per sample index

    explicit ClaimContext(const Instance& instance)
        : inst(instance), sample(make_sample(instance.ring, instance.sampler)) {
        sample_nu.reserve(sample.size());
        for (const Element& e : sample) {
            sample_nu.push_back(nu(inst.filtration, e, inst.max_level));
        }
    }
};

Witness make_pair_witness(ClaimId claim, const ClaimContext& ctx, const Element& a,
                          const Element& b, const ExtValue& lhs, const ExtValue& rhs,
                          std::string note) {
    Witness w;
    w.claim = to_string(claim);
    w.a = format_element(a);
    w.b = format_element(b);
    w.lhs = lhs;
    w.rhs = rhs;
    w.note = std::move(note);
    w.instance = ctx.inst.fingerprint();
    return w;
}

// Per-pair evaluation; Fails fills `witness`.
Outcome evaluate_pair(ClaimId claim, const ClaimContext& ctx, std::size_t i, std::size_t j,
                      std::optional<Witness>& witness) {
    const Filtration& F = ctx.inst.filtration;
    const int max_level = ctx.inst.max_level;
    const Element& a = ctx.sample[i];
    const Element& b = ctx.sample[j];
    auto geq_result = [&](const char* op, const Element& combined,
                          const ExtValue& rhs) -> Outcome {
        ExtValue lhs = nu(F, combined, max_level);
        Truth truth = ext_geq(lhs, rhs);
        if (truth == Truth::False) {
            witness = make_pair_witness(claim, ctx, a, b, lhs, rhs,
                                        std::string("nu(") + op + ") < bound");
        }
        return truth == Truth::True    ? Outcome::Holds
               : truth == Truth::False ? Outcome::Fails
                                       : Outcome::Inconclusive;
    };

    switch (claim) {
        case ClaimId::QvSuperadd:
            return geq_result("a*b", mul(a, b), ctx.sample_nu[i] + ctx.sample_nu[j]);
        case ClaimId::QvMin:
            return geq_result("a+b", add(a, b), ext_min(ctx.sample_nu[i], ctx.sample_nu[j]));
        case ClaimId::QvExists: {
            Outcome first = geq_result("a*b", mul(a, b), ctx.sample_nu[i] + ctx.sample_nu[j]);
            if (first == Outcome::Fails) return first;
            Outcome second =
                geq_result("a+b", add(a, b), ext_min(ctx.sample_nu[i], ctx.sample_nu[j]));
            if (second == Outcome::Fails) return second;
            return (first == Outcome::Inconclusive || second == Outcome::Inconclusive)
                       ? Outcome::Inconclusive
                       : Outcome::Holds;
        }
        case ClaimId::ValStrong:
        case ClaimId::ValPrimeAdic: {
            // The additivity axiom ranges over pairs with a nonzero product
            // (the classical map has no value at 0); such pairs hold vacuously.
            Element product = mul(a, b);
            if (is_zero(product) && !(is_zero(a) || is_zero(b))) return Outcome::Holds;
            ExtValue lhs = nu(F, product, max_level);
            ExtValue rhs = ctx.sample_nu[i] + ctx.sample_nu[j];
            Truth truth = ext_eq(lhs, rhs);
            if (truth == Truth::False) {
                witness = make_pair_witness(claim, ctx, a, b, lhs, rhs,
                                            "nu(a*b) != nu(a) + nu(b)");
            }
            return truth == Truth::True    ? Outcome::Holds
                   : truth == Truth::False ? Outcome::Fails
                                           : Outcome::Inconclusive;
        }
        case ClaimId::NuclosedStrong:
        case ClaimId::NuclosedPrimeAdic: {
            Outcome outcome = classify_inf_preimage_pair(F, a, b, max_level);
            if (outcome == Outcome::Fails) {
                Witness w = make_pair_witness(claim, ctx, a, b, nu(F, mul(a, b), max_level),
                                              ctx.sample_nu[i] + ctx.sample_nu[j],
                                              "a*b in nu^-1(infinity), neither factor is");
                w.rhs.reset();
                witness = std::move(w);
            }
            return outcome;
        }
        case ClaimId::DvSurjective:
            throw error("DV_SURJECTIVE is not a pair claim");
    }
    throw error("unreachable claim id");
}

// Precondition gate; nullopt means "go ahead".
std::optional<Verdict> check_preconditions(ClaimId claim, const Instance& inst) {
    Verdict validity = inst.filtration.validate(inst.validate_depth);
    if (!validity.holds()) {
        return Verdict::inconclusive("precondition: filtration invalid (" +
                                     validity.witness->note + ")");
    }
    switch (claim) {
        case ClaimId::ValStrong:
        case ClaimId::NuclosedStrong: {
            StrongnessReport report = inst.filtration.strongness(inst.validate_depth);
            if (!report.verdict.holds()) {
                return Verdict::inconclusive("precondition: filtration not strong (" +
                                             report.verdict.witness->note + ")");
            }
            return std::nullopt;
        }
        case ClaimId::ValPrimeAdic:
        case ClaimId::NuclosedPrimeAdic: {
            const Ideal* base = inst.filtration.adic_base();
            if (base == nullptr) {
                return Verdict::inconclusive("precondition: filtration is not adic");
            }
            PrimalityResult primality = is_prime(*base);
            if (primality.status == Primality::Unknown) {
                return Verdict::inconclusive("precondition: primality of " + base->describe() +
                                             " undecided (" + primality.note + ")");
            }
            if (primality.status == Primality::NotPrime) {
                return Verdict::inconclusive("precondition: base ideal " + base->describe() +
                                             " is not prime");
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

Verdict run_surjectivity(const Instance& inst) {
    ClaimContext ctx(inst);
    int k_max = std::min(inst.surjectivity_k, inst.max_level);
    SurjectivityReport report =
        surjectivity_report(inst.filtration, ctx.sample, k_max, inst.max_level);
    std::uint64_t tested = ctx.sample.size();
    if (report.missing.empty()) return Verdict::pass(tested);
    std::string missing_text;
    for (long k : report.missing) {
        if (!missing_text.empty()) missing_text += ",";
        missing_text += std::to_string(k);
    }
    if (report.unknown_count > 0 && k_max >= inst.max_level) {
        return Verdict::inconclusive("values {" + missing_text +
                                         "} unattained but bounded elements remain",
                                     tested, report.unknown_count);
    }
    Witness w;
    w.claim = to_string(ClaimId::DvSurjective);
    w.note = "nu misses values {" + missing_text + "} on [0," + std::to_string(k_max) + "]";
    w.instance = inst.fingerprint();
    return Verdict::fail(std::move(w), tested);
}

}  // namespace

const std::array<ClaimInfo, 8>& claim_catalog() { return kCatalog; }

std::string to_string(ClaimId id) {
    for (const ClaimInfo& info : kCatalog) {
        if (info.id == id) return std::string(info.name);
    }
    return {};
}

std::optional<ClaimId> claim_from_string(std::string_view name) {
    for (const ClaimInfo& info : kCatalog) {
        if (info.name == name) return info.id;
    }
    return std::nullopt;
}

std::string Instance::fingerprint() const {
    return ring.name() + " " + filtration.describe() + " " + sampler.describe();
}

Verdict run_claim(ClaimId claim, const Instance& instance) {
    if (auto blocked = check_preconditions(claim, instance)) return *blocked;
    if (claim == ClaimId::DvSurjective) return run_surjectivity(instance);

    ClaimContext ctx(instance);
    PairStream stream(ctx.sample.size(), instance.sampler.pair_budget, instance.sampler.seed);
    std::uint64_t pairs = 0;
    std::uint64_t inconclusive = 0;
    while (auto indices = stream.next()) {
        ++pairs;
        std::optional<Witness> witness;
        Outcome outcome = evaluate_pair(claim, ctx, indices->first, indices->second, witness);
        if (outcome == Outcome::Fails) return Verdict::fail(std::move(*witness), pairs);
        if (outcome == Outcome::Inconclusive) ++inconclusive;
    }
    if (inconclusive > 0) {
        return Verdict::inconclusive("comparison undecided at max_level for some pairs", pairs,
                                     inconclusive);
    }
    return Verdict::pass(pairs);
}

std::optional<Witness> find_minimal_witness(ClaimId claim, const Instance& instance) {
    if (check_preconditions(claim, instance)) return std::nullopt;
    if (claim == ClaimId::DvSurjective) {
        Verdict verdict = run_surjectivity(instance);
        return verdict.witness;
    }
    ClaimContext ctx(instance);
    PairStream stream(ctx.sample.size(), 0, instance.sampler.seed);  // unthinned
    if (stream.total_pairs() > kWitnessScanCap) {
        throw budget_exceeded("minimal-witness scan over " +
                              std::to_string(stream.total_pairs()) + " pairs exceeds cap");
    }
    while (auto indices = stream.next()) {
        std::optional<Witness> witness;
        if (evaluate_pair(claim, ctx, indices->first, indices->second, witness) ==
            Outcome::Fails) {
            return witness;
        }
    }
    return std::nullopt;
}

}  // namespace filtval
