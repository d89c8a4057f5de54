#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orthorep/root_datum.hpp"

namespace orthorep {

using BigInt = mpz_class;

/// lambda = sum a_i omega_i with every a_i >= 0.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<std::int64_t> coeffs);
    static DominantWeight zero(int rank) { return DominantWeight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }
    /// a * omega_i, with i 1-based as in Bourbaki.
    static DominantWeight fundamental(int rank, int i, std::int64_t a = 1);
    /// Parses "[0,2,1]" or "0,2,1".
    static DominantWeight parse(const std::string& text);

    int rank() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
    std::int64_t max_coeff() const noexcept;
    bool is_zero() const noexcept { return max_coeff() == 0; }

    DominantWeight plus_fundamental(int index0) const;

    /// "[a1,a2,...]"
    std::string str() const;
    /// "w1+3w4", "0" for the trivial weight.
    std::string pretty() const;

    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

enum class Dominance { less, greater, equal, incomparable };

const char* to_string(Dominance d);

/// Exact Weyl dimension prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
BigInt weyl_dimension(const RootDatum& datum, const DominantWeight& weight);

/// Weyl dimension when it is at most `cap`, nullopt otherwise. Stops as soon
/// as a partial product already exceeds the cap.
std::optional<BigInt> weyl_dimension_at_most(const RootDatum& datum, const DominantWeight& weight, const BigInt& cap);

/// Compares in the dominance order: lhs < rhs iff rhs - lhs is a non-negative
/// integer combination of simple roots.
Dominance dominance_compare(const RootDatum& datum, const DominantWeight& lhs, const DominantWeight& rhs);

bool is_q_restricted(const DominantWeight& weight, std::uint64_t q);

/// Highest weight of the dual module.
DominantWeight minus_w0(const LieType& type, const DominantWeight& weight);
bool is_self_dual(const LieType& type, const DominantWeight& weight);

/// <lambda, 2 rho^vee> mod 2.
int two_rho_parity(const RootDatum& datum, const DominantWeight& weight);

/// +1 orthogonal, -1 symplectic. Throws for weights that are not self-dual.
int fs_indicator(const RootDatum& datum, const DominantWeight& weight);

} // namespace orthorep
