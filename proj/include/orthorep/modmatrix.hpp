#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace orthorep {

/// Dense square matrix over the prime field F_q, row-major, entries in [0, q).
class ModMatrix {
public:
    ModMatrix(std::size_t n, std::uint64_t modulus);
    static ModMatrix identity(std::size_t n, std::uint64_t modulus);
    static ModMatrix diagonal(std::span<const std::uint64_t> entries, std::uint64_t modulus);

    std::size_t size() const noexcept { return n_; }
    std::uint64_t modulus() const noexcept { return q_; }

    std::uint64_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { a_[r * n_ + c] = v % q_; }
    std::span<const std::uint64_t> data() const noexcept { return a_; }

    ModMatrix operator*(const ModMatrix& rhs) const;
    ModMatrix transpose() const;
    ModMatrix pow(std::uint64_t e) const;
    /// Throws std::domain_error when singular.
    ModMatrix inverse() const;
    std::uint64_t determinant() const;

    bool is_scalar() const;
    bool is_symmetric() const;

    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

private:
    std::size_t n_;
    std::uint64_t q_;
    std::vector<std::uint64_t> a_;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

/// Rank over F_q of a rows x cols matrix given row-major; destroys the input.
std::size_t rank_mod(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t q);

} // namespace orthorep
