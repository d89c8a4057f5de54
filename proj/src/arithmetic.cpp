#include "orthorep/arithmetic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "orthorep/primes.hpp"

namespace orthorep {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod)
{
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

mpz_class factorial(std::int64_t n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class to_mpz(std::int64_t v)
{
    return mpz_class(static_cast<long>(v));
}

} // namespace

void BoundInputs::validate() const
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be an even integer >= 2, got " + std::to_string(n));
    if (k < 1) throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
    if (cond < 1) throw std::invalid_argument("N must be a positive integer, got " + cond.get_str());
}

std::vector<std::uint64_t> power_of_two_clause_primes(std::int64_t n)
{
    if (n < 2 || (n & (n - 1)) != 0) return {};
    int f = 0;
    while ((std::int64_t{1} << f) < n) ++f;
    std::set<std::uint64_t> primes{2};
    for (int i = 1; i <= f; ++i) {
        // 2^{2i} - 1 = (2^i - 1)(2^i + 1)
        const std::uint64_t a = (std::uint64_t{1} << i) - 1;
        const std::uint64_t b = (std::uint64_t{1} << i) + 1;
        for (auto q : prime_factors(a)) primes.insert(q);
        for (auto q : prime_factors(b)) primes.insert(q);
    }
    return {primes.begin(), primes.end()};
}

mpz_class compute_M(const BoundInputs& in)
{
    in.validate();
    mpz_class n = to_mpz(in.n);
    mpz_class collineation = n * n * n * n * factorial(in.n + 2);
    mpz_class weight_bound = to_mpz(in.k) * factorial(in.n) + 1;
    mpz_class largest = std::max({collineation, in.cond, weight_bound});
    for (auto q : power_of_two_clause_primes(in.n)) largest = std::max(largest, mpz_class(static_cast<unsigned long>(q)));
    return largest + 1;
}

std::uint64_t multiplicative_order(std::uint64_t t, std::uint64_t p)
{
    if (!is_prime_u64(p)) throw std::invalid_argument("multiplicative order needs a prime modulus, got " + std::to_string(p));
    if (t % p == 0)
        throw std::invalid_argument(std::to_string(p) + " divides " + std::to_string(t) + ", so t has no order mod p");
    std::uint64_t d = p - 1;
    for (auto q : prime_factors(p - 1)) {
        while (d % q == 0 && pow_mod(t, d / q, p) == 1) d /= q;
    }
    return d;
}

bool has_order(const mpz_class& t, const mpz_class& p, std::int64_t n)
{
    if (n < 1 || p < 2) return false;
    mpz_class r = t % p;
    if (r < 0) r += p;
    if (r == 0) return false;
    if (powm(r, to_mpz(n), p) != 1) return false;
    for (auto q : prime_factors(static_cast<std::uint64_t>(n)))
        if (powm(r, to_mpz(n / static_cast<std::int64_t>(q)), p) == 1) return false;
    return true;
}

PairChecks check_pair(const mpz_class& p, const mpz_class& t, std::int64_t n, const mpz_class& M)
{
    PairChecks c;
    c.p_prime = is_prime(p);
    c.t_prime = is_prime(t);
    c.distinct = p != t;
    c.p_one_mod_n = n > 0 && p % to_mpz(n) == 1;
    c.p_above_M = p > M;
    c.t_above_M = t > M;
    c.order_is_n = has_order(t, p, n);
    c.half_power_is_minus_one = n % 2 == 0 && p > 2 && powm(t, to_mpz(n / 2), p) == p - 1;
    return c;
}

PairSearch find_prime_pairs(std::int64_t n, const mpz_class& M, std::size_t count, std::uint64_t search_limit)
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be an even integer >= 2, got " + std::to_string(n));
    if (M < 1) throw std::invalid_argument("M must be >= 1, got " + M.get_str());
    if (count == 0) throw std::invalid_argument("count must be >= 1");

    PairSearch out;
    const mpz_class nz = to_mpz(n);
    auto budget_left = [&] { return out.candidates_tested < search_limit; };
    auto test_prime = [&](const mpz_class& x) {
        ++out.candidates_tested;
        return is_prime(x);
    };

    // Smallest p > M with p = 1 mod n.
    mpz_class p = M + 1;
    mpz_class r = (p - 1) % nz;
    if (r != 0) p += nz - r;

    std::vector<std::int64_t> units;
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) units.push_back(k);

    for (; out.pairs.size() < count && budget_left(); p += nz) {
        if (!test_prime(p)) continue;

        // g generates the order-n subgroup; its generators are g^k, gcd(k, n) = 1.
        mpz_class g;
        const mpz_class cofactor = (p - 1) / nz;
        for (mpz_class h = 2;; ++h) {
            g = powm(h, cofactor, p);
            if (has_order(g, p, n)) break;
        }
        // Merge the progressions t = g^k (mod p), t > M, in increasing t.
        using Entry = std::pair<mpz_class, mpz_class>; // (value, residue)
        auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
        std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
        for (auto k : units) {
            mpz_class residue = powm(g, to_mpz(k), p);
            mpz_class first = M + 1;
            mpz_class shift = (residue - first) % p;
            if (shift < 0) shift += p;
            heap.emplace(first + shift, residue);
        }
        while (out.pairs.size() < count && budget_left()) {
            Entry e = heap.top();
            heap.pop();
            heap.emplace(e.first + p, e.second);
            if (e.first == p || !test_prime(e.first)) continue;
            PrimePair pair{p, e.first, n, M, check_pair(p, e.first, n, M)};
            if (!pair.checks.all())
                throw std::logic_error("pair (" + p.get_str() + ", " + e.first.get_str() + ") failed an independent check");
            out.pairs.push_back(std::move(pair));
        }
    }
    out.complete = out.pairs.size() >= count;
    return out;
}

} // namespace orthorep
