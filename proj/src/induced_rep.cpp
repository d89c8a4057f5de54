#include "orthorep/induced_rep.hpp"

#include <stdexcept>
#include <string>

#include "orthorep/arithmetic.hpp"
#include "orthorep/primes.hpp"

namespace orthorep {

MonomialRep build_induced_rep(std::uint64_t p, std::uint64_t t, std::uint64_t n, std::optional<std::uint64_t> lambda)
{
    if (!is_prime_u64(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (!is_prime_u64(t)) throw std::invalid_argument("t = " + std::to_string(t) + " is not prime");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 2, got " + std::to_string(n));
    if (t % p == 0) throw std::invalid_argument("t must be prime to p");
    if (const auto ord = multiplicative_order(t, p); ord != n)
        throw std::invalid_argument("ord_" + std::to_string(p) + "(" + std::to_string(t) + ") = " + std::to_string(ord) +
                                    " differs from n = " + std::to_string(n) + ": the induction would not be irreducible");

    std::uint64_t q = 0;
    if (lambda) {
        q = *lambda;
        if (!is_prime_u64(q) || q % p != 1)
            throw std::invalid_argument("lambda = " + std::to_string(q) + " must be a prime congruent to 1 mod " + std::to_string(p));
        if (q == t) throw std::invalid_argument("lambda must differ from t");
    } else {
        for (q = p + 1; !(q % p == 1 && q != t && is_prime_u64(q)); ++q) {}
    }

    std::uint64_t zeta = 2;
    while (zeta < q && pow_mod(zeta, p, q) != 1) ++zeta;
    if (zeta >= q) throw std::logic_error("no element of order p in F_lambda although lambda = 1 mod p");

    std::vector<std::uint64_t> diag(n);
    std::uint64_t exponent = 1; // t^i mod p
    for (std::uint64_t i = 0; i < n; ++i) {
        diag[i] = pow_mod(zeta, exponent, q);
        exponent = mul_mod(exponent, t, p);
    }

    MonomialRep rep{TameParameters{p, t, n, q, zeta}, ModMatrix::diagonal(diag, q), ModMatrix(n, q), ModMatrix(n, q)};
    for (std::uint64_t i = 0; i < n; ++i) {
        rep.phi.set(i, (i + 1) % n, 1);
        rep.gram.set(i, (i + n / 2) % n, 1);
    }

    if (!satisfies_tame_relation(rep)) throw std::logic_error("constructed matrices violate phi tau phi^-1 = tau^t");
    if (rep.tau.pow(p) != ModMatrix::identity(n, q))
        throw std::logic_error("tau^p is not the identity");
    if (rep.phi.pow(n) != ModMatrix::identity(n, q)) throw std::logic_error("phi^n is not the identity");
    if (!verify_orthogonality(rep)) throw std::logic_error("gram form is not preserved");
    return rep;
}

bool satisfies_tame_relation(const MonomialRep& rep)
{
    return rep.phi * rep.tau * rep.phi.inverse() == rep.tau.pow(rep.params.t);
}

bool verify_orthogonality(const MonomialRep& rep)
{
    if (!rep.gram.is_symmetric() || rep.gram.determinant() == 0) return false;
    for (const ModMatrix* g : {&rep.tau, &rep.phi})
        if (g->transpose() * rep.gram * *g != rep.gram) return false;
    return true;
}

std::size_t commutant_dimension(const std::vector<ModMatrix>& gens)
{
    if (gens.empty()) throw std::invalid_argument("commutant needs at least one generator");
    const std::size_t n = gens.front().size();
    const std::uint64_t q = gens.front().modulus();
    const std::size_t unknowns = n * n; // X(r, c) -> r * n + c
    std::vector<std::uint64_t> system;
    system.reserve(gens.size() * unknowns * unknowns);
    for (const auto& g : gens) {
        if (g.size() != n || g.modulus() != q) throw std::invalid_argument("generators differ in size or field");
        // (X g - g X)(i, j) = sum_k X(i,k) g(k,j) - g(i,k) X(k,j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::uint64_t> row(unknowns, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] = (row[i * n + k] + g(k, j)) % q;
                    row[k * n + j] = (row[k * n + j] + q - g(i, k)) % q;
                }
                system.insert(system.end(), row.begin(), row.end());
            }
    }
    const std::size_t rows = system.size() / unknowns;
    return unknowns - rank_mod(system, rows, unknowns, q);
}

std::size_t commutant_dimension(const MonomialRep& rep)
{
    return commutant_dimension({rep.tau, rep.phi});
}

std::uint64_t projective_order(const ModMatrix& g, std::uint64_t limit)
{
    ModMatrix power = g;
    for (std::uint64_t d = 1; d <= limit; ++d) {
        if (power.is_scalar()) return d;
        power = power * g;
    }
    throw std::runtime_error("no scalar power found up to exponent " + std::to_string(limit));
}

std::uint64_t projective_order(const MonomialRep& rep, Generator which)
{
    return projective_order(which == Generator::tau ? rep.tau : rep.phi);
}

} // namespace orthorep
