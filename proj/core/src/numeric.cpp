#include "filtval/numeric.hpp"

#include <array>

namespace filtval {

namespace {

// Strong probable-prime test to base a for odd n > 2, n - 1 = d * 2^r.
bool miller_rabin_round(const Int& n, const Int& d, unsigned long r, const Int& a) {
    if (a % n == 0) return true;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

// Largest bound for which the witness set below is known exhaustive.
const Int& deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

}  // namespace

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long w : witnesses) {
        if (n == w) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
    }
    if (n > deterministic_bound()) {
        return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
    }
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long w : witnesses) {
        if (!miller_rabin_round(n, d, r, Int(w))) return false;
    }
    return true;
}

std::optional<Int> nontrivial_factor(const Int& value) {
    Int n = abs(value);
    if (n < 4 || is_prime_int(n)) return std::nullopt;
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long d = 3; d <= 1000000; d += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return Int(d);
        Int square = Int(d) * d;
        if (square > n) return std::nullopt;  // unreachable: composite has a factor <= sqrt
    }
    // Brent's cycle-finding rho with a fixed constant schedule.
    for (unsigned long c = 1; c <= 32; ++c) {
        Int y = 2, x = 2, factor = 1;
        unsigned long power = 1, lam = 0;
        while (factor == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            Int diff = x > y ? Int(x - y) : Int(y - x);
            if (diff == 0) break;
            mpz_gcd(factor.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (lam > 2000000) break;
        }
        if (factor > 1 && factor < n) return factor;
    }
    return std::nullopt;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
    Int result;
    if (mpz_invert(result.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    return result;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

}  // namespace filtval
