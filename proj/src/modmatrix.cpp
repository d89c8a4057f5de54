#include "orthorep/modmatrix.hpp"

#include <stdexcept>
#include <utility>

#include "orthorep/primes.hpp"

namespace orthorep {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q)
{
    a %= q;
    if (a == 0) throw std::domain_error("zero has no inverse");
    return pow_mod(a, q - 2, q);
}

ModMatrix::ModMatrix(std::size_t n, std::uint64_t modulus) : n_(n), q_(modulus), a_(n * n, 0)
{
    if (modulus < 2) throw std::invalid_argument("matrix modulus must be >= 2");
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t modulus)
{
    ModMatrix m(n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

ModMatrix ModMatrix::diagonal(std::span<const std::uint64_t> entries, std::uint64_t modulus)
{
    ModMatrix m(entries.size(), modulus);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const
{
    if (n_ != rhs.n_ || q_ != rhs.q_) throw std::invalid_argument("matrix shape or modulus mismatch");
    ModMatrix out(n_, q_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const std::uint64_t x = a_[i * n_ + k];
            if (!x) continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.a_[i * n_ + j] = (out.a_[i * n_ + j] + mul_mod(x, rhs.a_[k * n_ + j], q_)) % q_;
        }
    return out;
}

ModMatrix ModMatrix::transpose() const
{
    ModMatrix out(n_, q_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.a_[j * n_ + i] = a_[i * n_ + j];
    return out;
}

ModMatrix ModMatrix::pow(std::uint64_t e) const
{
    ModMatrix result = identity(n_, q_);
    ModMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

ModMatrix ModMatrix::inverse() const
{
    const std::size_t w = 2 * n_;
    std::vector<std::uint64_t> m(n_ * w, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m[i * w + j] = a_[i * n_ + j];
        m[i * w + n_ + i] = 1;
    }
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && m[piv * w + col] == 0) ++piv;
        if (piv == n_) throw std::domain_error("matrix is singular");
        for (std::size_t j = 0; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
        const std::uint64_t inv = inv_mod(m[col * w + col], q_);
        for (std::size_t j = 0; j < w; ++j) m[col * w + j] = mul_mod(m[col * w + j], inv, q_);
        for (std::size_t r = 0; r < n_; ++r) {
            const std::uint64_t f = m[r * w + col];
            if (r == col || f == 0) continue;
            for (std::size_t j = 0; j < w; ++j)
                m[r * w + j] = (m[r * w + j] + q_ - mul_mod(f, m[col * w + j], q_)) % q_;
        }
    }
    ModMatrix out(n_, q_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.a_[i * n_ + j] = m[i * w + n_ + j];
    return out;
}

std::uint64_t ModMatrix::determinant() const
{
    std::vector<std::uint64_t> m = a_;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && m[piv * n_ + col] == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[col * n_ + j]);
            det = (q_ - det) % q_;
        }
        det = mul_mod(det, m[col * n_ + col], q_);
        const std::uint64_t inv = inv_mod(m[col * n_ + col], q_);
        for (std::size_t r = col + 1; r < n_; ++r) {
            const std::uint64_t f = mul_mod(m[r * n_ + col], inv, q_);
            if (!f) continue;
            for (std::size_t j = col; j < n_; ++j)
                m[r * n_ + j] = (m[r * n_ + j] + q_ - mul_mod(f, m[col * n_ + j], q_)) % q_;
        }
    }
    return det;
}

bool ModMatrix::is_scalar() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j && a_[i * n_ + j] != 0) return false;
            if (i == j && a_[i * n_ + i] != a_[0]) return false;
        }
    return true;
}

bool ModMatrix::is_symmetric() const
{
    return *this == transpose();
}

std::size_t rank_mod(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t q)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
        const std::uint64_t inv = inv_mod(m[rank * cols + col], q);
        for (std::size_t j = col; j < cols; ++j) m[rank * cols + j] = mul_mod(m[rank * cols + j], inv, q);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::uint64_t f = m[r * cols + col];
            if (r == rank || f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r * cols + j] = (m[r * cols + j] + q - mul_mod(f, m[rank * cols + j], q)) % q;
        }
        ++rank;
    }
    return rank;
}

} // namespace orthorep
