#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orthorep/lie_type.hpp"

namespace orthorep {

/// Coroots of one simple root system together with the pairings the
/// dimension and indicator computations need.
///
/// Positive coroots are stored in the simple-coroot basis, so entry i of a
/// coroot equals its pairing with the fundamental weight omega_i. They are
/// generated by root-string closure from the simple coroots of the dual
/// system (Cartan matrix transposed) and ordered by height, then in
/// decreasing lexicographic order so simple coroots appear as 1..m.
///
/// Immutable after construction.
class RootDatum {
public:
    explicit RootDatum(LieType type);

    const LieType& type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }

    /// Cartan entry <alpha_i^vee, alpha_j>, 0-based.
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i) * rank_ + j]; }

    std::size_t coroot_count() const noexcept { return heights_.size(); }
    std::span<const std::uint8_t> coroot(std::size_t k) const
    {
        return {coroots_.data() + k * static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_)};
    }
    /// <rho, alpha^vee> for the k-th positive coroot.
    int rho_pairing(std::size_t k) const { return heights_[k]; }
    std::span<const int> rho_pairings() const noexcept { return heights_; }

    /// <omega_i, 2 rho^vee>, the coordinate sums of all positive coroots.
    std::span<const std::int64_t> two_rho_check() const noexcept { return two_rho_check_; }

    /// Permutation of node indices (0-based) realizing -w0 on fundamental weights.
    std::span<const int> dynkin_symmetry() const noexcept { return symmetry_; }

    /// Order of the diagram symmetry used for twisted forms: 1 or 2.
    int epsilon() const noexcept { return epsilon_; }
    /// D4 also carries an order-3 symmetry; recorded, never used for twisting.
    bool has_triality() const noexcept { return type_.family() == Family::D && rank_ == 4; }

    /// Positive coroots whose i-th coordinate is nonzero, with that coordinate.
    struct Column {
        std::span<const std::uint32_t> index;
        std::span<const std::uint8_t> coeff;
    };
    Column coroots_through(int i) const;

private:
    LieType type_;
    int rank_;
    std::vector<int> cartan_;
    std::vector<std::uint8_t> coroots_;
    std::vector<int> heights_;
    std::vector<std::int64_t> two_rho_check_;
    std::vector<int> symmetry_;
    int epsilon_;
    std::vector<std::size_t> column_offsets_;
    std::vector<std::uint32_t> column_index_;
    std::vector<std::uint8_t> column_coeff_;
};

/// Bourbaki Cartan matrix, row-major, entries <alpha_i^vee, alpha_j>.
std::vector<int> cartan_matrix(const LieType& type);

/// -w0 as a 0-based permutation of node indices: reversal for A, swap of the
/// two spin nodes for odd D, the 1<->6, 3<->5 flip for E6, identity otherwise.
std::vector<int> diagram_automorphism(const LieType& type);

/// Closed-form count of positive roots.
std::size_t expected_positive_root_count(const LieType& type);

} // namespace orthorep
