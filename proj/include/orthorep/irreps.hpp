#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

#include "orthorep/root_datum.hpp"
#include "orthorep/weight.hpp"

namespace orthorep {

/// Characteristic above which generic dimensions are trusted when no
/// exception data says otherwise.
inline constexpr std::int64_t kDefaultMinChar = 20;

struct IrrepCandidate {
    LieType type;
    DominantWeight weight;
    BigInt dim;
    bool self_dual = false;
    int fs = 0; ///< +1, -1, or 0 when not self-dual
    int epsilon = 1;
    std::int64_t min_char = kDefaultMinChar;
    /// Set for rows taken from exception data: the dimension holds only in this characteristic.
    std::optional<std::int64_t> only_char;

    bool generic() const noexcept { return !only_char.has_value(); }
};

/// Candidate for `weight` with its generic dimension, duality and indicator.
IrrepCandidate make_candidate(const RootDatum& datum, const DominantWeight& weight);

/// All dominant weights with Weyl dimension <= bound, trivial weight
/// included, sorted by dimension then decreasing lexicographic weight.
std::vector<IrrepCandidate> enumerate_restricted(const RootDatum& datum, const BigInt& bound);
std::vector<IrrepCandidate> enumerate_restricted(const LieType& type, const BigInt& bound);

/// Types a dimension-n scan has to visit: classical ranks whose natural
/// module fits in dimension n, plus every exceptional type. C starts at
/// rank 3 and D at rank 4 so that C2 = B2 and D3 = A3 are not visited twice.
std::vector<LieType> types_for_dimension(std::int64_t n);

/// Restricted candidates of dimension exactly n (trivial module excluded).
std::vector<IrrepCandidate> candidates_of_dimension(const std::vector<LieType>& types, std::int64_t n, bool self_dual_only);

struct ExceptionRecord {
    LieType type;
    DominantWeight weight;
    std::int64_t ell;
    BigInt corrected_dim;
};

/// Reads `family,rank,weight,ell,dim` CSV rows (weight bracketed, e.g.
/// B,2,[1,3],7,71). Errors name the offending line.
std::vector<ExceptionRecord> load_exceptions(std::istream& in);

/// Lowers min_char of matching generic candidates to one above the largest
/// listed characteristic and appends the exceptional rows whose corrected
/// dimension is within `bound`. Output keeps the enumeration order.
std::vector<IrrepCandidate> apply_exceptions(const RootDatum& datum, std::vector<IrrepCandidate> candidates,
                                             const std::vector<ExceptionRecord>& exceptions, const BigInt& bound);

} // namespace orthorep
