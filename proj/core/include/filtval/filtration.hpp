#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "filtval/ideal.hpp"
#include "filtval/verdict.hpp"

namespace filtval {

struct StrongnessReport {
    int checked_depth = 0;
    Verdict verdict;
};

/// Descending chain of ideal levels R = level(0) ⊇ level(1) ⊇ ... given
/// either as the powers of a base ideal (adic) or as an explicit list with
/// a repeat-last tail. Immutable after construction apart from the power
/// cache and the validated-depth mark, both deterministic; copies share
/// state and are cheap.
class Filtration {
public:
    /// Powers of `base`. The unit ideal is accepted but flagged (the chain
    /// degenerates to the constant ring).
    static Filtration adic(Ideal base);

    /// chain[0] must be the unit ideal; levels past the end repeat the
    /// last entry.
    static Filtration explicit_chain(std::vector<Ideal> chain);

    const RingDescriptor& ring() const;
    Ideal level(int n) const;

    bool is_adic() const;
    /// Base ideal for adic filtrations; nullptr for explicit chains.
    const Ideal* adic_base() const;
    bool unit_base_flag() const;

    int validated_to() const;

    /// Checks the chain conditions — level(0) = (1), level(n+1) ⊆ level(n),
    /// level(n)·level(m) ⊆ level(n+m) — for all n + m <= depth. Inclusions
    /// are decided on generators (levels are principal). Records the depth
    /// on success.
    Verdict validate(int depth) const;

    /// Equality level(n)·level(m) = level(n+m) for all n + m <= depth.
    /// Throws not_validated unless validate reached the depth first.
    StrongnessReport strongness(int depth) const;

    /// Least s <= max_exponent from which the chain is provably constant:
    /// cache stabilization for adic filtrations, the constant suffix for
    /// explicit chains.
    std::optional<int> stabilization_index(int max_exponent) const;

    /// "adic(2)", "chain[(1),(2),(4)]"
    std::string describe() const;

private:
    struct State;
    explicit Filtration(std::shared_ptr<State> state) : state_(std::move(state)) {}

    std::shared_ptr<State> state_;
};

}  // namespace filtval
