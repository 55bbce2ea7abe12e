#include "filtval/ring.hpp"

#include <algorithm>
#include <utility>

#include "filtval/errors.hpp"

namespace filtval {

namespace {

void require_same_ring(const Element& a, const Element& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw ring_mismatch(std::string(op) + ": operands live in " + a.ring().name() + " and " +
                            b.ring().name());
    }
}

Int mod_reduce(const Int& value, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), n.get_mpz_t());
    return r;
}

template <typename Coeff>
void strip_trailing_zeros(std::vector<Coeff>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::vector<Rat> canonical_rational(std::vector<Rat> coeffs) {
    for (Rat& c : coeffs) c.canonicalize();
    strip_trailing_zeros(coeffs);
    return coeffs;
}

std::vector<Int> canonical_residue(std::vector<Int> coeffs, const Int& p) {
    for (Int& c : coeffs) c = mod_reduce(c, p);
    strip_trailing_zeros(coeffs);
    return coeffs;
}

template <typename Coeff>
std::vector<Coeff> poly_add(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    std::vector<Coeff> out(std::max(a.size(), b.size()), Coeff(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

template <typename Coeff>
std::vector<Coeff> poly_mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Coeff> out(a.size() + b.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Long division over Q; returns {quotient, remainder}.
std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod_q(std::vector<Rat> rem,
                                                            const std::vector<Rat>& div) {
    std::vector<Rat> quot(rem.size() > div.size() ? rem.size() - div.size() + 1 : 1, Rat(0));
    const Rat& lead = div.back();
    while (rem.size() >= div.size() && !rem.empty()) {
        Rat factor = rem.back() / lead;
        std::size_t shift = rem.size() - div.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < div.size(); ++i) {
            rem[shift + i] -= factor * div[i];
        }
        strip_trailing_zeros(rem);
        if (rem.size() < div.size()) break;
    }
    strip_trailing_zeros(quot);
    strip_trailing_zeros(rem);
    return {std::move(quot), std::move(rem)};
}

// Long division over F_p (p prime, so every nonzero lead is invertible).
std::pair<std::vector<Int>, std::vector<Int>> poly_divmod_p(std::vector<Int> rem,
                                                            const std::vector<Int>& div,
                                                            const Int& p) {
    std::vector<Int> quot(rem.size() > div.size() ? rem.size() - div.size() + 1 : 1, Int(0));
    Int lead_inv = *mod_inverse(div.back(), p);
    while (rem.size() >= div.size() && !rem.empty()) {
        Int factor = mod_reduce(rem.back() * lead_inv, p);
        std::size_t shift = rem.size() - div.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < div.size(); ++i) {
            rem[shift + i] = mod_reduce(rem[shift + i] - factor * div[i], p);
        }
        strip_trailing_zeros(rem);
        if (rem.size() < div.size()) break;
    }
    strip_trailing_zeros(quot);
    strip_trailing_zeros(rem);
    return {std::move(quot), std::move(rem)};
}

std::string format_rat(const Rat& value) { return value.get_str(); }

// One polynomial term at the given degree; magnitude only (sign handled
// by the caller for rational coefficients).
std::string format_term(const std::string& coeff_text, int degree) {
    std::string power;
    if (degree == 1) {
        power = "x";
    } else if (degree > 1) {
        power = "x^" + std::to_string(degree);
    }
    if (power.empty()) return coeff_text;
    if (coeff_text == "1") return power;
    return coeff_text + "*" + power;
}

}  // namespace

RingDescriptor RingDescriptor::integers() { return {RingKind::Z, Int(0)}; }

RingDescriptor RingDescriptor::integers_mod(Int n) {
    if (n < 2) throw error("ZmodN requires n >= 2, got " + n.get_str());
    return {RingKind::ZmodN, std::move(n)};
}

RingDescriptor RingDescriptor::rational_polynomials() { return {RingKind::PolyQ, Int(0)}; }

RingDescriptor RingDescriptor::polynomials_mod(Int p) {
    if (!is_prime_int(p)) throw error("PolyZmodP requires a prime modulus, got " + p.get_str());
    return {RingKind::PolyZmodP, std::move(p)};
}

std::string RingDescriptor::name() const {
    switch (kind_) {
        case RingKind::Z:
            return "Z";
        case RingKind::ZmodN:
            return "Zmod:" + modulus_.get_str();
        case RingKind::PolyQ:
            return "PolyQ";
        case RingKind::PolyZmodP:
            return "PolyZmod:" + modulus_.get_str();
    }
    return {};
}

RingDescriptor RingDescriptor::from_name(const std::string& text) {
    if (text == "Z") return integers();
    if (text == "PolyQ") return rational_polynomials();
    auto parse_modulus = [&](std::size_t prefix_len) {
        std::string digits = text.substr(prefix_len);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw error("bad ring name: " + text);
        }
        return Int(digits);
    };
    if (text.rfind("Zmod:", 0) == 0) return integers_mod(parse_modulus(5));
    if (text.rfind("PolyZmod:", 0) == 0) return polynomials_mod(parse_modulus(9));
    throw error("bad ring name: " + text + " (expected Z, Zmod:<n>, PolyQ, PolyZmod:<p>)");
}

Element Element::from_integer(const RingDescriptor& ring, const Int& value) {
    switch (ring.kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return scalar(ring, value);
        case RingKind::PolyQ:
            return poly_rational(ring, {Rat(value)});
        case RingKind::PolyZmodP:
            return poly_residue(ring, {value});
    }
    throw error("unreachable ring kind");
}

Element Element::scalar(const RingDescriptor& ring, Int value) {
    if (ring.kind() == RingKind::ZmodN) {
        value = mod_reduce(value, ring.modulus());
    } else if (ring.kind() != RingKind::Z) {
        throw error("scalar payload requires Z or ZmodN");
    }
    return Element(ring, std::move(value));
}

Element Element::poly_rational(const RingDescriptor& ring, std::vector<Rat> coeffs) {
    if (ring.kind() != RingKind::PolyQ) throw error("rational coefficients require PolyQ");
    return Element(ring, canonical_rational(std::move(coeffs)));
}

Element Element::poly_residue(const RingDescriptor& ring, std::vector<Int> coeffs) {
    if (ring.kind() != RingKind::PolyZmodP) throw error("residue coefficients require PolyZmodP");
    return Element(ring, canonical_residue(std::move(coeffs), ring.modulus()));
}

const Int& Element::scalar_value() const { return std::get<Int>(payload_); }

const std::vector<Rat>& Element::rational_coeffs() const {
    return std::get<std::vector<Rat>>(payload_);
}

const std::vector<Int>& Element::residue_coeffs() const {
    return std::get<std::vector<Int>>(payload_);
}

int Element::degree() const {
    if (ring_.kind() == RingKind::PolyQ) return static_cast<int>(rational_coeffs().size()) - 1;
    if (ring_.kind() == RingKind::PolyZmodP) return static_cast<int>(residue_coeffs().size()) - 1;
    throw error("degree: not a polynomial carrier");
}

Element zero(const RingDescriptor& ring) { return Element::from_integer(ring, Int(0)); }

Element one(const RingDescriptor& ring) { return Element::from_integer(ring, Int(1)); }

bool is_zero(const Element& a) {
    switch (a.ring().kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return a.scalar_value() == 0;
        case RingKind::PolyQ:
            return a.rational_coeffs().empty();
        case RingKind::PolyZmodP:
            return a.residue_coeffs().empty();
    }
    return false;
}

bool is_one(const Element& a) { return a == one(a.ring()); }

Element add(const Element& a, const Element& b) {
    require_same_ring(a, b, "add");
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return Element::scalar(ring, a.scalar_value() + b.scalar_value());
        case RingKind::PolyQ:
            return Element::poly_rational(ring, poly_add(a.rational_coeffs(), b.rational_coeffs()));
        case RingKind::PolyZmodP:
            return Element::poly_residue(ring, poly_add(a.residue_coeffs(), b.residue_coeffs()));
    }
    throw error("unreachable ring kind");
}

Element neg(const Element& a) {
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return Element::scalar(ring, -a.scalar_value());
        case RingKind::PolyQ: {
            std::vector<Rat> coeffs = a.rational_coeffs();
            for (Rat& c : coeffs) c = -c;
            return Element::poly_rational(ring, std::move(coeffs));
        }
        case RingKind::PolyZmodP: {
            std::vector<Int> coeffs = a.residue_coeffs();
            for (Int& c : coeffs) c = -c;
            return Element::poly_residue(ring, std::move(coeffs));
        }
    }
    throw error("unreachable ring kind");
}

Element sub(const Element& a, const Element& b) {
    require_same_ring(a, b, "sub");
    return add(a, neg(b));
}

Element mul(const Element& a, const Element& b) {
    require_same_ring(a, b, "mul");
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return Element::scalar(ring, a.scalar_value() * b.scalar_value());
        case RingKind::PolyQ:
            return Element::poly_rational(ring, poly_mul(a.rational_coeffs(), b.rational_coeffs()));
        case RingKind::PolyZmodP:
            return Element::poly_residue(ring, poly_mul(a.residue_coeffs(), b.residue_coeffs()));
    }
    throw error("unreachable ring kind");
}

std::optional<Element> try_exact_div(const Element& a, const Element& b) {
    require_same_ring(a, b, "try_exact_div");
    if (is_zero(b)) throw divisor_zero("try_exact_div: divisor is zero");
    const RingDescriptor& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Z: {
            if (!mpz_divisible_p(a.scalar_value().get_mpz_t(), b.scalar_value().get_mpz_t())) {
                return std::nullopt;
            }
            Int q;
            mpz_divexact(q.get_mpz_t(), a.scalar_value().get_mpz_t(), b.scalar_value().get_mpz_t());
            return Element::scalar(ring, std::move(q));
        }
        case RingKind::ZmodN: {
            // q*b = a (mod n) is solvable iff gcd(b, n) | a; the solutions are
            // q0 + t*(n/g), so the smallest nonnegative one lives in [0, n/g).
            const Int& n = ring.modulus();
            Int g;
            mpz_gcd(g.get_mpz_t(), b.scalar_value().get_mpz_t(), n.get_mpz_t());
            if (!mpz_divisible_p(a.scalar_value().get_mpz_t(), g.get_mpz_t())) {
                return std::nullopt;
            }
            Int n_red = n / g;
            Int b_red = b.scalar_value() / g;
            Int a_red = a.scalar_value() / g;
            Int q0 = n_red == 1 ? Int(0) : mod_reduce(a_red * *mod_inverse(b_red, n_red), n_red);
            return Element::scalar(ring, std::move(q0));
        }
        case RingKind::PolyQ: {
            auto [quot, rem] = poly_divmod_q(a.rational_coeffs(), b.rational_coeffs());
            if (!rem.empty()) return std::nullopt;
            return Element::poly_rational(ring, std::move(quot));
        }
        case RingKind::PolyZmodP: {
            auto [quot, rem] =
                poly_divmod_p(a.residue_coeffs(), b.residue_coeffs(), ring.modulus());
            if (!rem.empty()) return std::nullopt;
            return Element::poly_residue(ring, std::move(quot));
        }
    }
    throw error("unreachable ring kind");
}

Element gcd(const Element& a, const Element& b) {
    require_same_ring(a, b, "gcd");
    const RingDescriptor& ring = a.ring();
    if (ring.kind() == RingKind::ZmodN) {
        throw unsupported_ring("gcd: Z/n is not a gcd domain here");
    }
    if (is_zero(a) && is_zero(b)) throw both_zero("gcd(0, 0) is undefined");
    switch (ring.kind()) {
        case RingKind::Z: {
            Int g;
            mpz_gcd(g.get_mpz_t(), a.scalar_value().get_mpz_t(), b.scalar_value().get_mpz_t());
            return Element::scalar(ring, std::move(g));
        }
        case RingKind::PolyQ: {
            std::vector<Rat> u = a.rational_coeffs();
            std::vector<Rat> v = b.rational_coeffs();
            while (!v.empty()) {
                auto [quot, rem] = poly_divmod_q(u, v);
                (void)quot;
                u = std::move(v);
                v = std::move(rem);
            }
            const Rat lead = u.back();
            for (Rat& c : u) c /= lead;
            return Element::poly_rational(ring, std::move(u));
        }
        case RingKind::PolyZmodP: {
            const Int& p = ring.modulus();
            std::vector<Int> u = a.residue_coeffs();
            std::vector<Int> v = b.residue_coeffs();
            while (!v.empty()) {
                auto [quot, rem] = poly_divmod_p(u, v, p);
                (void)quot;
                u = std::move(v);
                v = std::move(rem);
            }
            Int lead_inv = *mod_inverse(u.back(), p);
            for (Int& c : u) c = mod_reduce(c * lead_inv, p);
            return Element::poly_residue(ring, std::move(u));
        }
        default:
            throw error("unreachable ring kind");
    }
}

std::string format_element(const Element& a) {
    switch (a.ring().kind()) {
        case RingKind::Z:
        case RingKind::ZmodN:
            return a.scalar_value().get_str();
        case RingKind::PolyQ: {
            const std::vector<Rat>& coeffs = a.rational_coeffs();
            if (coeffs.empty()) return "0";
            std::string out;
            for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
                const Rat& c = coeffs[static_cast<std::size_t>(d)];
                if (c == 0) continue;
                bool negative = c < 0;
                Rat magnitude = negative ? Rat(-c) : c;
                if (out.empty()) {
                    if (negative) out += "-";
                } else {
                    out += negative ? " - " : " + ";
                }
                out += format_term(format_rat(magnitude), d);
            }
            return out;
        }
        case RingKind::PolyZmodP: {
            const std::vector<Int>& coeffs = a.residue_coeffs();
            if (coeffs.empty()) return "0";
            std::string out;
            for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
                const Int& c = coeffs[static_cast<std::size_t>(d)];
                if (c == 0) continue;
                if (!out.empty()) out += " + ";
                out += format_term(c.get_str(), d);
            }
            return out;
        }
    }
    throw error("unreachable ring kind");
}

}  // namespace filtval
