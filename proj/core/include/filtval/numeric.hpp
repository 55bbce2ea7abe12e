#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace filtval {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality test: Miller-Rabin with the fixed witness set
/// {2,...,37}, exact for n < 3.317e24; BPSW-style fallback above that.
bool is_prime_int(const Int& n);

/// A nontrivial factor of composite |n| >= 4: the smallest one when trial
/// division finds it, otherwise whatever Brent's rho produces. nullopt only
/// if every strategy gives up (n prime-like or pathological).
std::optional<Int> nontrivial_factor(const Int& n);

Int pow_int(const Int& base, unsigned long exp);

/// Inverse of a mod m (m >= 1); nullopt when gcd(a, m) != 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

/// FNV-1a over a byte string; stable across platforms and runs.
std::uint64_t fnv1a(std::string_view bytes);

std::string to_hex(std::uint64_t value);

}  // namespace filtval
