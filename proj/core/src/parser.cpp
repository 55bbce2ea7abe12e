#include "filtval/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "filtval/errors.hpp"

namespace filtval {

namespace {

constexpr unsigned long kMaxExponent = 4096;
constexpr std::size_t kMaxDegree = 65536;

// Polynomials over Q as the universal evaluation domain; coercion into the
// target carrier happens once, at the end.
using QPoly = std::vector<Rat>;

void strip(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    strip(out);
    return out;
}

QPoly q_neg(QPoly a) {
    for (Rat& c : a) c = -c;
    return a;
}

QPoly q_mul(const QPoly& a, const QPoly& b, std::size_t position) {
    if (a.empty() || b.empty()) return {};
    if (a.size() + b.size() - 1 > kMaxDegree) {
        throw syntax_error("polynomial degree limit exceeded", position);
    }
    QPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    strip(out);
    return out;
}

class Parser {
public:
    Parser(const RingDescriptor& ring, const std::string& text) : ring_(ring), text_(text) {}

    Element run() {
        QPoly value = parse_expression();
        skip_spaces();
        if (pos_ != text_.size()) throw syntax_error("unexpected trailing input", pos_);
        return coerce(std::move(value));
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    QPoly parse_expression() {
        QPoly value = eat('-') ? q_neg(parse_term()) : parse_term();
        for (;;) {
            if (eat('+')) {
                value = q_add(value, parse_term());
            } else if (eat('-')) {
                value = q_add(value, q_neg(parse_term()));
            } else {
                return value;
            }
        }
    }

    QPoly parse_term() {
        QPoly value = parse_factor();
        while (eat('*')) value = q_mul(value, parse_factor(), pos_);
        return value;
    }

    QPoly parse_factor() {
        QPoly base = parse_base();
        if (eat('^')) {
            std::size_t at = pos_;
            unsigned long exponent = parse_uint(kMaxExponent, "exponent");
            QPoly result = {Rat(1)};
            for (unsigned long i = 0; i < exponent; ++i) result = q_mul(result, base, at);
            return result;
        }
        return base;
    }

    QPoly parse_base() {
        skip_spaces();
        if (pos_ >= text_.size()) throw syntax_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly inner = parse_expression();
            if (!eat(')')) throw syntax_error("expected ')'", pos_);
            return inner;
        }
        if (c == 'x') {
            if (ring_.is_scalar()) {
                throw syntax_error("variable not allowed in " + ring_.name(), pos_);
            }
            ++pos_;
            return {Rat(0), Rat(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        throw syntax_error(std::string("unexpected character '") + c + "'", pos_);
    }

    // number := digits ['/' digits]; the slash belongs to the literal, not to
    // the operator set, so `x/2` stays a syntax error.
    QPoly parse_number() {
        Int numerator = parse_integer();
        if (eat('/')) {
            skip_spaces();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw syntax_error("expected denominator digits", at);
            }
            Int denominator = parse_integer();
            if (denominator == 0) throw syntax_error("zero denominator", at);
            Rat value(numerator, denominator);
            value.canonicalize();
            return {value};
        }
        return {Rat(numerator)};
    }

    Int parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    unsigned long parse_uint(unsigned long max, const char* what) {
        skip_spaces();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw syntax_error(std::string("expected nonnegative integer ") + what, pos_);
        }
        Int value = parse_integer();
        if (value > max) throw syntax_error(std::string(what) + " out of range", start);
        return value.get_ui();
    }

    Element coerce(QPoly value) {
        switch (ring_.kind()) {
            case RingKind::PolyQ:
                return Element::poly_rational(ring_, std::move(value));
            case RingKind::PolyZmodP: {
                std::vector<Int> coeffs;
                coeffs.reserve(value.size());
                for (const Rat& c : value) coeffs.push_back(residue_of(c, ring_.modulus()));
                return Element::poly_residue(ring_, std::move(coeffs));
            }
            case RingKind::Z: {
                Rat c = constant_of(value);
                if (c.get_den() != 1) {
                    throw coefficient_not_in_ring(c.get_str() + " is not an integer");
                }
                return Element::scalar(ring_, c.get_num());
            }
            case RingKind::ZmodN: {
                Rat c = constant_of(value);
                return Element::scalar(ring_, residue_of(c, ring_.modulus()));
            }
        }
        throw error("unreachable ring kind");
    }

    static Rat constant_of(const QPoly& value) {
        // The scalar grammar admits no variable, so degree 0 is guaranteed.
        return value.empty() ? Rat(0) : value.front();
    }

    static Int residue_of(const Rat& c, const Int& m) {
        auto inverse = mod_inverse(c.get_den(), m);
        if (!inverse) {
            throw coefficient_not_in_ring(c.get_str() + " has no meaning mod " + m.get_str() +
                                          " (denominator not invertible)");
        }
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), Int(c.get_num() * *inverse).get_mpz_t(), m.get_mpz_t());
        return r;
    }

    const RingDescriptor& ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const RingDescriptor& ring, const std::string& text) {
    return Parser(ring, text).run();
}

}  // namespace filtval
