#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "filtval/extvalue.hpp"

namespace filtval {

enum class Outcome { Holds, Fails, Inconclusive };

std::string to_string(Outcome outcome);

/// A reproducible counterexample: replaying the named check on (a, b) in
/// the same instance reproduces the failure with identical values.
struct Witness {
    std::string claim;            // check or claim identifier
    std::string a;                // canonical element text
    std::string b;                // empty for unary / structural checks
    std::optional<ExtValue> lhs;  // both sides, when the check compares values
    std::optional<ExtValue> rhs;
    std::string note;             // human-readable detail
    std::string instance;         // instance fingerprint
};

struct Verdict {
    Outcome status = Outcome::Holds;
    std::uint64_t pairs_tested = 0;
    std::uint64_t inconclusive_count = 0;
    std::string reason;              // set when Inconclusive
    std::optional<Witness> witness;  // set when Fails

    bool holds() const noexcept { return status == Outcome::Holds; }
    bool fails() const noexcept { return status == Outcome::Fails; }

    static Verdict pass(std::uint64_t pairs) { return {Outcome::Holds, pairs, 0, {}, {}}; }
    static Verdict fail(Witness w, std::uint64_t pairs) {
        return {Outcome::Fails, pairs, 0, {}, std::move(w)};
    }
    static Verdict inconclusive(std::string reason, std::uint64_t pairs = 0,
                                std::uint64_t count = 0) {
        return {Outcome::Inconclusive, pairs, count, std::move(reason), {}};
    }
};

}  // namespace filtval
