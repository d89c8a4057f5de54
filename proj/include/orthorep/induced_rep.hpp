#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthorep/modmatrix.hpp"

namespace orthorep {

/// Parameters of the tame model: order-p character of the degree-n
/// unramified extension of Q_t, values in F_lambda.
struct TameParameters {
    std::uint64_t p = 0;      ///< prime, the character order
    std::uint64_t t = 0;      ///< prime residue characteristic, ord_p(t) = n
    std::uint64_t n = 0;      ///< even degree
    std::uint64_t lambda = 0; ///< prime, lambda = 1 mod p
    std::uint64_t zeta = 0;   ///< element of F_lambda of exact order p
};

/// Ind(chi_t) on the tame quotient <phi, tau | phi tau phi^-1 = tau^t>,
/// written in the basis where tau is diagonal and phi shifts the basis.
struct MonomialRep {
    TameParameters params;
    ModMatrix tau;  ///< diag(zeta^{t^i mod p}), i = 0..n-1
    ModMatrix phi;  ///< phi e_i = e_{i-1 mod n}
    ModMatrix gram; ///< ones at (i, i + n/2 mod n)
};

/// Builds the representation and checks every structural invariant. When
/// lambda is omitted the smallest prime lambda = 1 mod p with lambda != t is
/// used; zeta is always the smallest element of exact order p.
MonomialRep build_induced_rep(std::uint64_t p, std::uint64_t t, std::uint64_t n,
                              std::optional<std::uint64_t> lambda = std::nullopt);

/// phi tau phi^-1 == tau^t.
bool satisfies_tame_relation(const MonomialRep& rep);

/// g^T gram g == gram for g in {tau, phi}, with gram symmetric and invertible.
bool verify_orthogonality(const MonomialRep& rep);

/// dim_F { X : X g = g X for every g in gens }.
std::size_t commutant_dimension(const std::vector<ModMatrix>& gens);
std::size_t commutant_dimension(const MonomialRep& rep);

enum class Generator { tau, phi };

/// Least d >= 1 with g^d scalar. Throws std::runtime_error past `limit`.
std::uint64_t projective_order(const ModMatrix& g, std::uint64_t limit = 1'000'000);
std::uint64_t projective_order(const MonomialRep& rep, Generator which);

} // namespace orthorep
