#include "filtval/extvalue.hpp"

namespace filtval {

std::string ExtValue::str() const {
    switch (tag_) {
        case Tag::Finite:
            return std::to_string(value_);
        case Tag::Infinity:
            return "infinity";
        case Tag::AtLeast:
            return ">=" + std::to_string(value_);
    }
    return {};
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() || b.is_infinity()) return ExtValue::infinity();
    if (a.is_finite() && b.is_finite()) return ExtValue::finite(a.bound() + b.bound());
    // At least one AtLeast operand; the sum is only bounded below.
    return ExtValue::at_least(a.bound() + b.bound());
}

ExtValue ext_min(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;
    if (a.is_finite() && b.is_finite()) {
        return ExtValue::finite(a.bound() < b.bound() ? a.bound() : b.bound());
    }
    if (a.is_finite()) return a.bound() <= b.bound() ? a : b;  // b = AtLeast(N), N >= k
    if (b.is_finite()) return b.bound() <= a.bound() ? b : a;
    return ExtValue::at_least(a.bound() < b.bound() ? a.bound() : b.bound());
}

Truth ext_geq(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity()) return Truth::True;
    if (b.is_infinity()) return a.is_finite() ? Truth::False : Truth::Unknown;
    if (a.is_finite() && b.is_finite()) {
        return a.bound() >= b.bound() ? Truth::True : Truth::False;
    }
    if (a.is_at_least() && b.is_finite()) {
        return a.bound() >= b.bound() ? Truth::True : Truth::Unknown;
    }
    if (a.is_finite() && b.is_at_least()) {
        // b's true value is at least b.bound().
        return a.bound() < b.bound() ? Truth::False : Truth::Unknown;
    }
    return Truth::Unknown;  // AtLeast vs AtLeast
}

Truth ext_eq(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() && b.is_infinity()) return Truth::True;
    if (a.is_finite() && b.is_finite()) {
        return a.bound() == b.bound() ? Truth::True : Truth::False;
    }
    if (a.is_finite() && b.is_infinity()) return Truth::False;
    if (a.is_infinity() && b.is_finite()) return Truth::False;
    // AtLeast(N) can still disagree with any Finite(k < N) for sure.
    if (a.is_at_least() && b.is_finite() && b.bound() < a.bound()) return Truth::False;
    if (b.is_at_least() && a.is_finite() && a.bound() < b.bound()) return Truth::False;
    return Truth::Unknown;
}

}  // namespace filtval
