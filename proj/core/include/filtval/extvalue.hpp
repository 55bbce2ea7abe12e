#pragma once

#include <string>

namespace filtval {

enum class Truth { True, False, Unknown };

/// Value of the level map: a nonnegative integer, a proven infinity, or
/// "at least N" when a bounded search could not separate the element.
///
/// Ordering and arithmetic follow the extended-integer rules: Infinity
/// absorbs addition, AtLeast(N) + Finite(k) = AtLeast(N + k), and
/// comparisons against AtLeast values are three-valued (ext_geq / ext_eq
/// answer Unknown where the bound does not decide).
class ExtValue {
public:
    static ExtValue finite(long k) { return {Tag::Finite, k}; }
    static ExtValue infinity() { return {Tag::Infinity, 0}; }
    static ExtValue at_least(long n) { return {Tag::AtLeast, n}; }

    bool is_finite() const noexcept { return tag_ == Tag::Finite; }
    bool is_infinity() const noexcept { return tag_ == Tag::Infinity; }
    bool is_at_least() const noexcept { return tag_ == Tag::AtLeast; }

    /// The k of Finite(k) or the N of AtLeast(N).
    long bound() const noexcept { return value_; }

    /// "3", "infinity", ">=64"
    std::string str() const;

    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        return a.tag_ == b.tag_ && (a.tag_ == Tag::Infinity || a.value_ == b.value_);
    }
    friend bool operator!=(const ExtValue& a, const ExtValue& b) { return !(a == b); }

private:
    enum class Tag { Finite, Infinity, AtLeast };

    ExtValue(Tag tag, long value) : tag_(tag), value_(value) {}

    Tag tag_;
    long value_;
};

ExtValue operator+(const ExtValue& a, const ExtValue& b);

/// Minimum in the extended order; sound but possibly an AtLeast bound when
/// an operand is itself only bounded.
ExtValue ext_min(const ExtValue& a, const ExtValue& b);

/// a >= b, three-valued.
Truth ext_geq(const ExtValue& a, const ExtValue& b);

/// a == b as values, three-valued (distinct from representation equality).
Truth ext_eq(const ExtValue& a, const ExtValue& b);

}  // namespace filtval
