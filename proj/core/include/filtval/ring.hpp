#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "filtval/numeric.hpp"

namespace filtval {

enum class RingKind { Z, ZmodN, PolyQ, PolyZmodP };

/// Identifies one of the supported carrier rings. Equality is structural.
/// Construction validates the parameters (n >= 2; p prime).
class RingDescriptor {
public:
    static RingDescriptor integers();
    static RingDescriptor integers_mod(Int n);
    static RingDescriptor rational_polynomials();
    static RingDescriptor polynomials_mod(Int p);

    RingKind kind() const noexcept { return kind_; }

    /// n for ZmodN, p for PolyZmodP; zero otherwise.
    const Int& modulus() const noexcept { return modulus_; }

    bool is_polynomial() const noexcept {
        return kind_ == RingKind::PolyQ || kind_ == RingKind::PolyZmodP;
    }
    bool is_scalar() const noexcept { return !is_polynomial(); }

    /// Canonical text form: "Z", "Zmod:12", "PolyQ", "PolyZmod:5".
    std::string name() const;

    /// Parses the canonical text form above.
    static RingDescriptor from_name(const std::string& text);

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

private:
    RingDescriptor(RingKind kind, Int modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    Int modulus_;
};

/// A canonical-form element of a carrier ring.
///
/// Payloads: an integer for Z, a residue in [0, n) for ZmodN, and dense
/// low-to-high coefficient vectors for the polynomial carriers (trailing
/// zeros stripped; rationals reduced with positive denominator; residues
/// in [0, p)). Two elements are equal iff ring and canonical payload match.
class Element {
public:
    /// Coerces an integer into any carrier (mod-reduced / constant poly).
    static Element from_integer(const RingDescriptor& ring, const Int& value);

    static Element scalar(const RingDescriptor& ring, Int value);
    static Element poly_rational(const RingDescriptor& ring, std::vector<Rat> coeffs);
    static Element poly_residue(const RingDescriptor& ring, std::vector<Int> coeffs);

    const RingDescriptor& ring() const noexcept { return ring_; }

    const Int& scalar_value() const;
    const std::vector<Rat>& rational_coeffs() const;
    const std::vector<Int>& residue_coeffs() const;

    /// Degree of a polynomial payload; -1 for the zero polynomial.
    int degree() const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.ring_ == b.ring_ && a.payload_ == b.payload_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Element(RingDescriptor ring, std::variant<Int, std::vector<Rat>, std::vector<Int>> payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}

    RingDescriptor ring_;
    std::variant<Int, std::vector<Rat>, std::vector<Int>> payload_;
};

Element zero(const RingDescriptor& ring);
Element one(const RingDescriptor& ring);
bool is_zero(const Element& a);
bool is_one(const Element& a);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element mul(const Element& a, const Element& b);

/// Exact quotient q with q*b = a when one exists in the carrier; nullopt
/// otherwise. Over ZmodN returns the smallest nonnegative solution of
/// q*b = a (mod n). Throws divisor_zero when b = 0.
std::optional<Element> try_exact_div(const Element& a, const Element& b);

/// Canonical gcd: nonnegative over Z, monic over the polynomial carriers.
/// gcd(a, 0) is the canonical form of a. Throws unsupported_ring for ZmodN
/// and both_zero when both arguments vanish.
Element gcd(const Element& a, const Element& b);

/// Deterministic canonical text; parse_element(ring, format_element(a)) == a.
std::string format_element(const Element& a);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

}  // namespace filtval
