#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthorep/irreps.hpp"

namespace orthorep {

/// How multi-factor twisted tensor products are admitted.
///  - orbit: every factor is the same module (a Galois-twist orbit), the
///    only decomposable shape the A1 analysis allows;
///  - all:   any multiset of restricted modules whose dimensions multiply to n.
enum class ProductMode { orbit, all };

const char* to_string(ProductMode mode);
ProductMode parse_product_mode(const std::string& text);

struct TensorCandidate {
    LieType type;
    std::vector<IrrepCandidate> factors; ///< non-decreasing (dim, weight); twist indices abstracted away
    ProductMode mode = ProductMode::orbit;
    BigInt dim;
    bool self_dual = false;
    int fs = 0;
    std::int64_t min_char = kDefaultMinChar;

    /// "D34 w1" or "A1 w1 (x) w1^(1)"; the k-th factor carries the k-th Frobenius twist.
    std::string label() const;
};

/// Combines already-chosen factors: dim multiplies, self-dual iff every factor
/// is, indicator is the product of the factor indicators.
TensorCandidate tensor_of(const LieType& type, std::vector<IrrepCandidate> factors, ProductMode mode);

/// Unordered factorizations of n into factors > 1, each sorted ascending;
/// listed by number of factors, then lexicographically.
std::vector<std::vector<std::int64_t>> factorizations(std::int64_t n);

struct Exclusion {
    std::string rule;
    std::string type;
    std::string detail;
};

/// All ways to realize a factorization of n with nontrivial restricted
/// modules of one type. Products rejected by the orbit rule are reported
/// through `dropped` when it is non-null.
std::vector<TensorCandidate> steinberg_products(const std::vector<IrrepCandidate>& restricted, const LieType& type,
                                                std::int64_t n, ProductMode mode, std::vector<Exclusion>* dropped = nullptr);
std::vector<TensorCandidate> steinberg_products(const LieType& type, std::int64_t n, ProductMode mode);

struct ClassificationReport {
    std::int64_t n = 0;
    std::int64_t min_char = 0;
    ProductMode mode = ProductMode::orbit;
    std::vector<TensorCandidate> orthogonal;
    std::vector<TensorCandidate> symplectic;
    std::size_t excluded_non_self_dual = 0;
    std::vector<Exclusion> exclusions;
    std::vector<std::string> notes;
};

/// Self-dual tensor candidates of dimension n over every type a dimension-n
/// scan visits, split by indicator. Requires n even and min_char >= 20.
ClassificationReport classify_orthogonal(std::int64_t n, std::int64_t min_char, ProductMode mode);

struct Theorem1Result {
    std::int64_t pi = 0;
    bool passed = false;
    std::string verdict;
    ClassificationReport report;
};

/// For n = 4*pi the only orthogonal candidate must be the natural module of D_{2 pi}.
Theorem1Result verify_theorem1(std::int64_t pi);

/// Primes in [17, 73].
std::vector<std::int64_t> theorem1_primes();

} // namespace orthorep
