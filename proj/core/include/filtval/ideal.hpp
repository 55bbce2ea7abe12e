#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filtval/ring.hpp"

namespace filtval {

enum class IdealNormalForm { PrincipalGcd, ResidueLattice, RawGenerators };

/// Finitely generated ideal, normalized to a single canonical generator.
///
/// Over Z, PolyQ and PolyZmodP the generator is the canonical gcd of the
/// inputs (nonnegative / monic). Over ZmodN it is gcd(inputs, n) reduced
/// into [0, n), so every ideal is the residue lattice of a divisor of n.
/// The zero ideal carries generator 0.
class Ideal {
public:
    static Ideal from_generators(const RingDescriptor& ring, const std::vector<Element>& gens);
    static Ideal from_strings(const RingDescriptor& ring, const std::vector<std::string>& gens);
    static Ideal principal(const Element& g);
    static Ideal unit(const RingDescriptor& ring);
    static Ideal zero_ideal(const RingDescriptor& ring);

    const RingDescriptor& ring() const noexcept { return generator_.ring(); }
    const Element& generator() const noexcept { return generator_; }
    IdealNormalForm normal_form() const noexcept { return normal_form_; }

    /// "(2)", "(x - 1)", ...
    std::string describe() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.generator_ == b.generator_;
    }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

private:
    Ideal(Element generator, IdealNormalForm form)
        : generator_(std::move(generator)), normal_form_(form) {}

    Element generator_;
    IdealNormalForm normal_form_;
};

bool contains(const Ideal& I, const Element& a);
Ideal mul_ideals(const Ideal& I, const Ideal& J);
bool eq_ideals(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);
bool is_proper(const Ideal& I);
bool is_zero_ideal(const Ideal& I);

/// Memoized powers of a fixed base ideal with stabilization detection:
/// powers[0] is the unit ideal and once I^s = I^(s+1) every later power
/// collapses to I^s. Reads and writes are serialized internally, so the
/// cache may be shared across threads; results are deterministic.
class IdealPowerCache {
public:
    explicit IdealPowerCache(Ideal base);

    const Ideal& base() const noexcept { return base_; }

    Ideal power(int k) const;

    /// The exponent s with I^s = I^(s+1), if discovered so far.
    std::optional<int> stabilized_at() const;

    /// Computes powers until stabilization is found or max_exponent passed.
    std::optional<int> find_stabilization(int max_exponent) const;

private:
    Ideal base_;
    mutable std::mutex mutex_;
    mutable std::vector<Ideal> powers_;
    mutable std::optional<int> stabilized_;
};

inline Ideal pow_ideal(const IdealPowerCache& cache, int k) { return cache.power(k); }

enum class Primality { Prime, NotPrime, Unknown };

struct PrimalityResult {
    Primality status;
    /// For NotPrime where one exists: a*b in I with a, b not in I.
    std::optional<std::pair<Element, Element>> witness;
    std::string note;
};

/// Decides primality where the carrier allows it and answers Unknown
/// rather than guessing: Z via integer primality, Z/n via the quotient
/// Z/g, PolyQ up to degree 3 (rational root test), PolyZmodP up to
/// degree 8 (exhaustive factor search when p^(deg/2) stays small).
PrimalityResult is_prime(const Ideal& I);

}  // namespace filtval
