#include "filtval/ideal.hpp"

#include <algorithm>

#include "filtval/errors.hpp"
#include "filtval/parser.hpp"

namespace filtval {

namespace {

// gcd of the generators, folded through the carrier's canonical gcd; for
// ZmodN the modulus joins the fold so the result divides n.
Element normalize_generator(const RingDescriptor& ring, const std::vector<Element>& gens) {
    if (ring.kind() == RingKind::ZmodN) {
        Int g = ring.modulus();
        for (const Element& e : gens) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.scalar_value().get_mpz_t());
        }
        return Element::scalar(ring, std::move(g));  // g == n reduces to 0
    }
    Element acc = zero(ring);
    for (const Element& e : gens) {
        if (is_zero(e)) continue;
        acc = is_zero(acc) ? e : gcd(acc, e);
    }
    if (is_zero(acc)) return acc;
    return gcd(acc, zero(ring));  // canonicalizes sign / leading coefficient
}

IdealNormalForm form_for(const RingDescriptor& ring) {
    return ring.kind() == RingKind::ZmodN ? IdealNormalForm::ResidueLattice
                                          : IdealNormalForm::PrincipalGcd;
}

PrimalityResult prime_result(Primality status) { return {status, std::nullopt, {}}; }

PrimalityResult not_prime(Element a, Element b, std::string note = {}) {
    return {Primality::NotPrime, std::make_pair(std::move(a), std::move(b)), std::move(note)};
}

// Diagonal-order scan over residue pairs for a witness a*b in (g), a,b not.
std::optional<std::pair<Element, Element>> zmod_witness_scan(const Ideal& I) {
    const Int& n = I.ring().modulus();
    if (n > 4096) return std::nullopt;
    long size = static_cast<long>(n.get_ui());
    for (long s = 0; s <= 2 * (size - 1); ++s) {
        for (long i = std::max(0L, s - size + 1); i <= std::min(s, size - 1); ++i) {
            long j = s - i;
            Element a = Element::scalar(I.ring(), Int(i));
            Element b = Element::scalar(I.ring(), Int(j));
            if (!contains(I, a) && !contains(I, b) && contains(I, mul(a, b))) {
                return std::make_pair(std::move(a), std::move(b));
            }
        }
    }
    return std::nullopt;
}

PrimalityResult integer_generator_primality(const Ideal& I, const Int& g,
                                            const RingDescriptor& witness_ring) {
    // Shared by Z and ZmodN: the quotient by (g) is Z/g, a domain iff g prime.
    if (is_prime_int(g)) return prime_result(Primality::Prime);
    auto factor = nontrivial_factor(g);
    if (!factor) return {Primality::Unknown, std::nullopt, "could not factor " + g.get_str()};
    Int cofactor = g / *factor;
    return not_prime(Element::scalar(witness_ring, *factor),
                     Element::scalar(witness_ring, cofactor));
}

// All positive divisors of |v|; nullopt when |v| is too large to factor
// by trial division.
std::optional<std::vector<Int>> positive_divisors(const Int& value) {
    Int n = abs(value);
    if (n == 0 || n > Int("1000000000000")) return std::nullopt;
    std::vector<Int> divisors;
    Int d = 1;
    while (d * d <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            divisors.push_back(d);
            Int other = n / d;
            if (other != d) divisors.push_back(other);
        }
        ++d;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

PrimalityResult polyq_primality(const Ideal& I) {
    const Element& g = I.generator();
    int deg = g.degree();
    if (deg > 3) return {Primality::Unknown, std::nullopt, "degree > 3"};
    if (deg == 1) return prime_result(Primality::Prime);
    // deg 2 or 3: reducible over Q iff a rational root exists. Clear
    // denominators to a primitive integer polynomial first.
    const std::vector<Rat>& coeffs = g.rational_coeffs();
    Int common_den = 1;
    for (const Rat& c : coeffs) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> zc;
    zc.reserve(coeffs.size());
    for (const Rat& c : coeffs) zc.push_back(Int(c.get_num() * (common_den / c.get_den())));
    Int constant = zc.front();
    Int leading = zc.back();
    if (constant == 0) {
        // x divides g.
        Element factor = parse_element(I.ring(), "x");
        Element quotient = *try_exact_div(g, factor);
        return not_prime(std::move(factor), std::move(quotient));
    }
    auto ps = positive_divisors(constant);
    auto qs = positive_divisors(leading);
    if (!ps || !qs) return {Primality::Unknown, std::nullopt, "coefficients too large to factor"};
    for (const Int& p : *ps) {
        for (const Int& q : *qs) {
            for (int sign : {1, -1}) {
                Rat root(sign * p, q);
                root.canonicalize();
                Rat value(0);
                for (std::size_t i = coeffs.size(); i-- > 0;) {
                    value = value * root + coeffs[i];
                }
                if (value == 0) {
                    Element factor =
                        Element::poly_rational(I.ring(), {Rat(-root), Rat(1)});  // x - root
                    Element quotient = *try_exact_div(g, factor);
                    return not_prime(std::move(factor), std::move(quotient));
                }
            }
        }
    }
    return prime_result(Primality::Prime);
}

PrimalityResult polymod_primality(const Ideal& I) {
    const Element& g = I.generator();
    int deg = g.degree();
    if (deg > 8) return {Primality::Unknown, std::nullopt, "degree > 8"};
    const Int& p = I.ring().modulus();
    if (deg >= 2 && p > 1000000) {
        return {Primality::Unknown, std::nullopt, "search space too large"};
    }
    long pl = static_cast<long>(p.get_ui());
    // Monic candidate divisors of degree 1..deg/2, lexicographic by index.
    for (int d = 1; 2 * d <= deg; ++d) {
        double count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<double>(pl);
        if (count > 1e6) return {Primality::Unknown, std::nullopt, "search space too large"};
        long total = static_cast<long>(count);
        for (long index = 0; index < total; ++index) {
            std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, Int(0));
            long rest = index;
            for (int i = 0; i < d; ++i) {
                coeffs[static_cast<std::size_t>(i)] = Int(rest % pl);
                rest /= pl;
            }
            coeffs.back() = 1;
            Element candidate = Element::poly_residue(I.ring(), std::move(coeffs));
            if (auto quotient = try_exact_div(g, candidate)) {
                return not_prime(std::move(candidate), std::move(*quotient));
            }
        }
    }
    return prime_result(Primality::Prime);
}

}  // namespace

Ideal Ideal::from_generators(const RingDescriptor& ring, const std::vector<Element>& gens) {
    if (gens.empty()) throw empty_generators("ideal needs at least one generator");
    for (const Element& e : gens) {
        if (e.ring() != ring) {
            throw ring_mismatch("ideal generator lives in " + e.ring().name() + ", not " +
                                ring.name());
        }
    }
    return Ideal(normalize_generator(ring, gens), form_for(ring));
}

Ideal Ideal::from_strings(const RingDescriptor& ring, const std::vector<std::string>& gens) {
    std::vector<Element> parsed;
    parsed.reserve(gens.size());
    for (const std::string& text : gens) parsed.push_back(parse_element(ring, text));
    return from_generators(ring, parsed);
}

Ideal Ideal::principal(const Element& g) { return from_generators(g.ring(), {g}); }

Ideal Ideal::unit(const RingDescriptor& ring) { return principal(one(ring)); }

Ideal Ideal::zero_ideal(const RingDescriptor& ring) {
    return Ideal(zero(ring), form_for(ring));
}

std::string Ideal::describe() const { return "(" + format_element(generator_) + ")"; }

bool contains(const Ideal& I, const Element& a) {
    if (I.ring() != a.ring()) {
        throw ring_mismatch("contains: element lives in " + a.ring().name() + ", ideal in " +
                            I.ring().name());
    }
    if (is_zero(a)) return true;
    if (is_zero(I.generator())) return false;
    return try_exact_div(a, I.generator()).has_value();
}

Ideal mul_ideals(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw ring_mismatch("mul_ideals: different rings");
    return Ideal::principal(mul(I.generator(), J.generator()));
}

bool eq_ideals(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw ring_mismatch("eq_ideals: different rings");
    return contains(I, J.generator()) && contains(J, I.generator());
}

bool is_unit_ideal(const Ideal& I) { return contains(I, one(I.ring())); }

bool is_proper(const Ideal& I) { return !is_unit_ideal(I); }

bool is_zero_ideal(const Ideal& I) { return is_zero(I.generator()); }

IdealPowerCache::IdealPowerCache(Ideal base) : base_(std::move(base)) {
    powers_.push_back(Ideal::unit(base_.ring()));
}

Ideal IdealPowerCache::power(int k) const {
    if (k < 0) throw error("ideal power with negative exponent");
    std::lock_guard<std::mutex> lock(mutex_);
    if (stabilized_ && k >= *stabilized_) return powers_[static_cast<std::size_t>(*stabilized_)];
    while (static_cast<int>(powers_.size()) <= k) {
        Ideal next = mul_ideals(powers_.back(), base_);
        if (eq_ideals(next, powers_.back())) {
            stabilized_ = static_cast<int>(powers_.size()) - 1;
            return powers_[static_cast<std::size_t>(*stabilized_)];
        }
        powers_.push_back(std::move(next));
    }
    return powers_[static_cast<std::size_t>(k)];
}

std::optional<int> IdealPowerCache::stabilized_at() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return stabilized_;
}

std::optional<int> IdealPowerCache::find_stabilization(int max_exponent) const {
    power(max_exponent + 1);
    std::lock_guard<std::mutex> lock(mutex_);
    if (stabilized_ && *stabilized_ <= max_exponent) return stabilized_;
    return std::nullopt;
}

PrimalityResult is_prime(const Ideal& I) {
    if (is_unit_ideal(I)) {
        return {Primality::NotPrime, std::nullopt, "unit ideal is not proper"};
    }
    switch (I.ring().kind()) {
        case RingKind::Z: {
            const Int& g = I.generator().scalar_value();
            if (g == 0) return prime_result(Primality::Prime);
            return integer_generator_primality(I, g, I.ring());
        }
        case RingKind::ZmodN: {
            const Int& g = I.generator().scalar_value();
            // Quotient by (g) is Z/g when g != 0, and Z/n for the zero ideal.
            const Int quotient_modulus = g == 0 ? I.ring().modulus() : g;
            if (is_prime_int(quotient_modulus)) return prime_result(Primality::Prime);
            if (auto witness = zmod_witness_scan(I)) {
                return {Primality::NotPrime, std::move(witness), {}};
            }
            return integer_generator_primality(I, quotient_modulus, I.ring());
        }
        case RingKind::PolyQ:
            if (is_zero_ideal(I)) return prime_result(Primality::Prime);
            return polyq_primality(I);
        case RingKind::PolyZmodP:
            if (is_zero_ideal(I)) return prime_result(Primality::Prime);
            return polymod_primality(I);
    }
    throw error("unreachable ring kind");
}

}  // namespace filtval
