#include "filtval/valuation.hpp"

#include <algorithm>

#include "filtval/errors.hpp"

namespace filtval {

namespace {

Outcome outcome_of(Truth truth) {
    switch (truth) {
        case Truth::True:
            return Outcome::Holds;
        case Truth::False:
            return Outcome::Fails;
        case Truth::Unknown:
            return Outcome::Inconclusive;
    }
    return Outcome::Inconclusive;
}

void require_ring(const Filtration& F, const Element& a) {
    if (F.ring() != a.ring()) {
        throw ring_mismatch("element lives in " + a.ring().name() + ", filtration in " +
                            F.ring().name());
    }
}

}  // namespace

ExtValue nu(const Filtration& F, const Element& a, int max_level) {
    require_ring(F, a);
    if (max_level < 1) throw error("nu requires max_level >= 1");
    if (is_zero(a)) return ExtValue::infinity();
    for (int i = 1; i <= max_level; ++i) {
        if (!contains(F.level(i), a)) return ExtValue::finite(i - 1);
    }
    // a survived every scanned level; only a stabilized tail can promote
    // the bound to a proof.
    if (F.stabilization_index(max_level)) return ExtValue::infinity();
    return ExtValue::at_least(max_level);
}

AxiomCheckResult check_superadditive(const Filtration& F, const Element& a, const Element& b,
                                     int max_level) {
    ExtValue lhs = nu(F, mul(a, b), max_level);
    ExtValue rhs = nu(F, a, max_level) + nu(F, b, max_level);
    return {a, b, lhs, rhs, Relation::Geq, outcome_of(ext_geq(lhs, rhs))};
}

AxiomCheckResult check_min_inequality(const Filtration& F, const Element& a, const Element& b,
                                      int max_level) {
    ExtValue lhs = nu(F, add(a, b), max_level);
    ExtValue rhs = ext_min(nu(F, a, max_level), nu(F, b, max_level));
    return {a, b, lhs, rhs, Relation::MinGeq, outcome_of(ext_geq(lhs, rhs))};
}

AxiomCheckResult check_additive(const Filtration& F, const Element& a, const Element& b,
                                int max_level) {
    ExtValue lhs = nu(F, mul(a, b), max_level);
    ExtValue rhs = nu(F, a, max_level) + nu(F, b, max_level);
    return {a, b, lhs, rhs, Relation::Eq, outcome_of(ext_eq(lhs, rhs))};
}

Membership is_in_inf_preimage(const Filtration& F, const Element& a, int max_level) {
    ExtValue value = nu(F, a, max_level);
    if (value.is_infinity()) return Membership::Yes;
    if (value.is_finite()) return Membership::No;
    return Membership::Unknown;
}

Outcome classify_inf_preimage_pair(const Filtration& F, const Element& a, const Element& b,
                                   int max_level) {
    Membership product = is_in_inf_preimage(F, mul(a, b), max_level);
    if (product == Membership::No) return Outcome::Holds;
    Membership ma = is_in_inf_preimage(F, a, max_level);
    if (ma == Membership::Yes) return Outcome::Holds;
    Membership mb = is_in_inf_preimage(F, b, max_level);
    if (mb == Membership::Yes) return Outcome::Holds;
    if (product == Membership::Yes && ma == Membership::No && mb == Membership::No) {
        return Outcome::Fails;
    }
    return Outcome::Inconclusive;
}

Verdict check_inf_preimage_prime(const Filtration& F, const std::vector<Element>& sample,
                                 int max_level) {
    std::uint64_t pairs = 0;
    std::uint64_t inconclusive = 0;
    const long size = static_cast<long>(sample.size());
    for (long s = 0; s <= 2 * (size - 1); ++s) {
        for (long i = std::max(0L, s - size + 1); i <= std::min(s, size - 1); ++i) {
            const Element& a = sample[static_cast<std::size_t>(i)];
            const Element& b = sample[static_cast<std::size_t>(s - i)];
            ++pairs;
            Outcome outcome = classify_inf_preimage_pair(F, a, b, max_level);
            if (outcome == Outcome::Fails) {
                Witness w;
                w.claim = "inf_preimage_prime";
                w.a = format_element(a);
                w.b = format_element(b);
                w.lhs = nu(F, mul(a, b), max_level);
                w.note = "a*b in nu^-1(infinity) with nu(a)=" + nu(F, a, max_level).str() +
                         ", nu(b)=" + nu(F, b, max_level).str();
                return Verdict::fail(std::move(w), pairs);
            }
            if (outcome == Outcome::Inconclusive) ++inconclusive;
        }
    }
    if (inconclusive > 0) {
        return Verdict::inconclusive("membership undecided for some pairs at max_level", pairs,
                                     inconclusive);
    }
    return Verdict::pass(pairs);
}

SurjectivityReport surjectivity_report(const Filtration& F, const std::vector<Element>& sample,
                                       int k_max, int max_level) {
    if (k_max > max_level) throw error("surjectivity range exceeds max_level");
    SurjectivityReport report;
    for (const Element& a : sample) {
        ExtValue value = nu(F, a, max_level);
        if (value.is_finite() && value.bound() <= k_max) {
            report.attained.insert(value.bound());
        } else if (value.is_at_least()) {
            ++report.unknown_count;
        }
    }
    for (long k = 0; k <= k_max; ++k) {
        if (!report.attained.count(k)) report.missing.insert(k);
    }
    return report;
}

}  // namespace filtval
