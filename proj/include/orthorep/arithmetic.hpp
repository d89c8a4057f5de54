#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orthorep {

struct BoundInputs {
    std::int64_t n;    ///< even, >= 2
    std::int64_t k;    ///< tame inertia weight bound, >= 1
    mpz_class cond;    ///< auxiliary conductor bound N, >= 1

    /// Throws std::invalid_argument when an invariant fails.
    void validate() const;
};

/// Primes dividing 2 * prod_{i=1}^{f} (2^{2i} - 1) when n = 2^f, empty otherwise.
std::vector<std::uint64_t> power_of_two_clause_primes(std::int64_t n);

/// The smallest admissible M: one more than the largest of n^4 (n+2)!, N,
/// k n! + 1 and (for n a power of two) the clause primes.
mpz_class compute_M(const BoundInputs& in);

/// Least d >= 1 with t^d = 1 mod p. Throws when p is not prime or p | t.
std::uint64_t multiplicative_order(std::uint64_t t, std::uint64_t p);

/// Whether t has multiplicative order exactly n modulo p.
bool has_order(const mpz_class& t, const mpz_class& p, std::int64_t n);

struct PairChecks {
    bool p_prime = false;
    bool t_prime = false;
    bool distinct = false;
    bool p_one_mod_n = false;
    bool p_above_M = false;
    bool t_above_M = false;
    bool order_is_n = false;
    bool half_power_is_minus_one = false;
    /// Complete splitting of t in the compositum L0 is not finitely checkable.
    static constexpr const char* l0_splitting = "not checked";

    bool all() const noexcept
    {
        return p_prime && t_prime && distinct && p_one_mod_n && p_above_M && t_above_M && order_is_n &&
               half_power_is_minus_one;
    }
};

struct PrimePair {
    mpz_class p;
    mpz_class t;
    std::int64_t n = 0;
    mpz_class M;
    PairChecks checks;
};

/// Recomputes every recorded check for (p, t) independently.
PairChecks check_pair(const mpz_class& p, const mpz_class& t, std::int64_t n, const mpz_class& M);

struct PairSearch {
    std::vector<PrimePair> pairs;
    bool complete = false;         ///< false when the budget ran out before `count` pairs
    std::uint64_t candidates_tested = 0;
};

/// Pairs (p, t) in increasing lexicographic order: p prime, p = 1 mod n,
/// p > M; t prime, t != p, t > M, with ord_p(t) = n. `search_limit` caps the
/// number of primality tests.
PairSearch find_prime_pairs(std::int64_t n, const mpz_class& M, std::size_t count, std::uint64_t search_limit);

} // namespace orthorep
