#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "orthorep/arithmetic.hpp"
#include "orthorep/induced_rep.hpp"
#include "orthorep/primes.hpp"

using namespace orthorep;

namespace {

ModMatrix random_matrix(std::size_t n, std::uint64_t q, std::mt19937_64& rng)
{
    ModMatrix m(n, q);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() % q);
    return m;
}

/// Commutant size by enumerating every n x n matrix over F_q.
std::size_t brute_commutant_log(const std::vector<ModMatrix>& gens)
{
    const std::size_t n = gens.front().size();
    const std::uint64_t q = gens.front().modulus();
    const std::size_t cells = n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= q;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        ModMatrix x(n, q);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= q) x.set(i / n, i % n, c % q);
        bool commutes = true;
        for (const auto& g : gens) commutes = commutes && x * g == g * x;
        count += commutes;
    }
    std::size_t log = 0;
    for (std::uint64_t v = 1; v < count; v *= q) ++log;
    return log;
}

} // namespace

TEST_CASE("matrices over a prime field")
{
    std::mt19937_64 rng(5);
    const std::uint64_t q = 101;
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_matrix(4, q, rng);
        auto b = random_matrix(4, q, rng);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a.pow(5) == a * a * a * a * a);
        CHECK(a.pow(0) == ModMatrix::identity(4, q));
        CHECK((a * b).determinant() == a.determinant() * b.determinant() % q);
        if (a.determinant() != 0) {
            CHECK(a * a.inverse() == ModMatrix::identity(4, q));
        } else {
            CHECK_THROWS_AS(a.inverse(), std::domain_error);
        }
    }
    // 3 x 3 determinant by the Leibniz formula
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_matrix(3, q, rng);
        auto e = [&](std::size_t r, std::size_t c) { return static_cast<long long>(a(r, c)); };
        long long leibniz = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                            e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        leibniz %= static_cast<long long>(q);
        if (leibniz < 0) leibniz += static_cast<long long>(q);
        CHECK(a.determinant() == static_cast<std::uint64_t>(leibniz));
    }
    CHECK(ModMatrix::identity(3, 7).is_scalar());
    CHECK(ModMatrix::identity(3, 7).is_symmetric());
    CHECK(inv_mod(3, 7) == 5);
}

TEST_CASE("rank over F_q matches the image size")
{
    std::mt19937_64 rng(11);
    const std::uint64_t q = 3;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        std::vector<std::uint64_t> m(rows * cols);
        for (auto& x : m) x = rng() % q;
        // |{A x}| = q^rank
        std::set<std::vector<std::uint64_t>> image;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < cols; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::uint64_t> x(cols), y(rows, 0);
            std::uint64_t c = code;
            for (auto& v : x) {
                v = c % q;
                c /= q;
            }
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t k = 0; k < cols; ++k) y[r] = (y[r] + m[r * cols + k] * x[k]) % q;
            image.insert(y);
        }
        std::size_t expected = 0;
        for (std::size_t v = 1; v < image.size(); v *= q) ++expected;
        auto copy = m;
        CHECK(rank_mod(copy, rows, cols, q) == expected);
    }
}

TEST_CASE("commutant dimension against exhaustive search")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ModMatrix> gens{random_matrix(2, 3, rng)};
        if (trial % 2) gens.push_back(random_matrix(2, 3, rng));
        CHECK(commutant_dimension(gens) == brute_commutant_log(gens));
    }
    CHECK(commutant_dimension({ModMatrix::identity(3, 5)}) == 9);
    CHECK_THROWS_AS(commutant_dimension(std::vector<ModMatrix>{}), std::invalid_argument);
}

TEST_CASE("induced representation for (p, t, n) = (5, 3, 4)")
{
    auto rep = build_induced_rep(5, 3, 4);
    CHECK(rep.params.lambda == 11);
    CHECK(rep.params.zeta == 3);
    // tau = diag(zeta^(t^i mod p)) with exponents 1, 3, 4, 2
    const std::vector<std::uint64_t> exponents{1, 3, 4, 2};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rep.tau(i, i) == pow_mod(3, exponents[i], 11));
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(rep.tau(i, j) == 0);
    }
    CHECK(satisfies_tame_relation(rep));
    CHECK(verify_orthogonality(rep));
    CHECK(commutant_dimension(rep) == 1);
    CHECK(commutant_dimension({rep.tau}) == 4);
    CHECK(projective_order(rep, Generator::tau) == 5);
    CHECK(projective_order(rep, Generator::phi) == 4);
    CHECK(projective_order(ModMatrix::identity(4, 11)) == 1);
    CHECK(rep.gram.is_symmetric());
    CHECK(rep.gram(0, 2) == 1);
    CHECK(rep.gram(1, 3) == 1);
    CHECK(rep.gram(0, 0) == 0);
    // phi e_j = e_{j-1}
    CHECK(rep.phi(0, 1) == 1);
    CHECK(rep.phi(3, 0) == 1);
}

TEST_CASE("a Gram matrix that is not invariant is detected")
{
    auto rep = build_induced_rep(5, 3, 4);
    rep.gram = ModMatrix::identity(4, rep.params.lambda);
    CHECK_FALSE(verify_orthogonality(rep));
}

TEST_CASE("further worked cases")
{
    auto small = build_induced_rep(3, 2, 2);
    CHECK(small.params.lambda == 7);
    CHECK(small.params.zeta == 2);
    CHECK(commutant_dimension(small) == 1);
    CHECK(projective_order(small, Generator::tau) == 3);

    auto twelve = build_induced_rep(13, 2, 12);
    CHECK(twelve.params.lambda == 53);
    CHECK(satisfies_tame_relation(twelve));
    CHECK(verify_orthogonality(twelve));
    CHECK(commutant_dimension(twelve) == 1);
    CHECK(projective_order(twelve, Generator::tau) == 13);
    CHECK(projective_order(twelve, Generator::phi) == 12);

    auto chosen = build_induced_rep(5, 3, 4, 31);
    CHECK(chosen.params.lambda == 31);
    CHECK(commutant_dimension(chosen) == 1);
}

TEST_CASE("invalid parameters are rejected")
{
    CHECK_THROWS_AS(build_induced_rep(5, 4, 4), std::invalid_argument);  // t not prime
    CHECK_THROWS_AS(build_induced_rep(6, 5, 2), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(build_induced_rep(5, 3, 3), std::invalid_argument);  // n odd
    CHECK_THROWS_AS(build_induced_rep(13, 3, 12), std::invalid_argument); // ord_13(3) = 3
    CHECK_THROWS_AS(build_induced_rep(5, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_induced_rep(5, 3, 4, 13), std::invalid_argument); // 13 != 1 mod 5
    CHECK_THROWS_WITH(build_induced_rep(13, 3, 12), Catch::Matchers::ContainsSubstring("differs from n"));
}

TEST_CASE("every small admissible triple gives an absolutely irreducible orthogonal representation")
{
    int built = 0;
    for (std::uint64_t p = 3; p <= 13; ++p) {
        if (!is_prime_u64(p)) continue;
        for (std::uint64_t t = 2; t < 60; ++t) {
            if (!is_prime_u64(t) || t == p) continue;
            const auto n = multiplicative_order(t, p);
            if (n % 2 != 0 || n > 6) continue;
            CAPTURE(p, t, n);
            auto rep = build_induced_rep(p, t, n);
            CHECK(satisfies_tame_relation(rep));
            CHECK(verify_orthogonality(rep));
            CHECK(commutant_dimension(rep) == 1);
            CHECK(commutant_dimension({rep.tau}) == n);
            CHECK(projective_order(rep, Generator::tau) == p);
            CHECK(projective_order(rep, Generator::phi) == n);
            CHECK(rep.phi.pow(n) == ModMatrix::identity(n, rep.params.lambda));
            ++built;
        }
    }
    CHECK(built > 20);
}
