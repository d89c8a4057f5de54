#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace orthorep {

/// Deterministic Miller-Rabin (bases 2..37), exact for every 64-bit n.
bool is_prime_u64(std::uint64_t n);

/// Exact below 2^64; above that GMP's BPSW plus Miller-Rabin rounds.
bool is_prime(const mpz_class& n);

/// Human-readable statement of the policy is_prime follows.
const char* primality_policy();

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Distinct prime factors, ascending (trial division plus Pollard rho).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace orthorep
