#include "orthorep/root_datum.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace orthorep {

std::vector<int> cartan_matrix(const LieType& type)
{
    const int m = type.rank();
    std::vector<int> a(static_cast<std::size_t>(m) * m, 0);
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i - 1) * m + (j - 1)]; };
    auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
    for (int i = 1; i <= m; ++i)
        at(i, i) = 2;

    switch (type.family()) {
    case Family::A:
        for (int i = 1; i < m; ++i) bond(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < m; ++i) bond(i, i + 1);
        at(m, m - 1) = -2; // alpha_m short
        break;
    case Family::C:
        for (int i = 1; i < m; ++i) bond(i, i + 1);
        at(m - 1, m) = -2; // alpha_m long
        break;
    case Family::D:
        for (int i = 1; i < m - 1; ++i) bond(i, i + 1);
        bond(m - 2, m);
        break;
    case Family::E:
        bond(1, 3);
        bond(2, 4);
        for (int i = 3; i < m; ++i) bond(i, i + 1);
        break;
    case Family::F:
        bond(1, 2);
        bond(2, 3);
        bond(3, 4);
        at(3, 2) = -2; // alpha_3, alpha_4 short
        break;
    case Family::G:
        bond(1, 2);
        at(1, 2) = -3; // alpha_1 short
        break;
    }
    return a;
}

std::vector<int> diagram_automorphism(const LieType& type)
{
    const int m = type.rank();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    switch (type.family()) {
    case Family::A:
        std::reverse(perm.begin(), perm.end());
        break;
    case Family::D:
        if (m % 2 == 1) std::swap(perm[m - 2], perm[m - 1]);
        break;
    case Family::E:
        if (m == 6) {
            std::swap(perm[0], perm[5]);
            std::swap(perm[2], perm[4]);
        }
        break;
    default:
        break;
    }
    return perm;
}

std::size_t expected_positive_root_count(const LieType& type)
{
    const std::size_t m = static_cast<std::size_t>(type.rank());
    switch (type.family()) {
    case Family::A: return m * (m + 1) / 2;
    case Family::B:
    case Family::C: return m * m;
    case Family::D: return m * (m - 1);
    case Family::E: return m == 6 ? 36 : m == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

namespace {

struct Level {
    std::vector<std::uint8_t> flat;
    std::vector<std::uint8_t> q;     ///< string depth below each new coroot, per simple index
    std::vector<std::int8_t> pairing; ///< <alpha_i, beta> per simple index
    std::vector<std::uint64_t> hashes;
};

} // namespace

RootDatum::RootDatum(LieType type)
    : type_(type), rank_(type.rank()), cartan_(cartan_matrix(type)), symmetry_(diagram_automorphism(type)),
      epsilon_(1)
{
    const int m = rank_;
    const auto um = static_cast<std::size_t>(m);
    if (type.family() == Family::D || (type.family() == Family::E && m == 6) || (type.family() == Family::A && m >= 2))
        epsilon_ = 2;

    // Linear hash h(v) = sum v_j * salt_j, so h(v +- e_i) = h(v) +- salt_i.
    std::mt19937_64 rng(0x5eed5eedULL + static_cast<std::uint64_t>(m));
    std::vector<std::uint64_t> salt(um);
    for (auto& s : salt) s = rng();

    // Nonzero entries of each Cartan row: adding alpha_i^vee to beta adds row i
    // to the vector of pairings <alpha_j, beta>.
    std::vector<std::vector<std::pair<int, int>>> row(um);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (int v = cartan(i, j); v != 0) row[i].emplace_back(j, v);

    // Per level, q[k * m + i] is how far the alpha_i string through coroot k
    // extends downwards. A coroot at height h + 1 has exactly one parent
    // beta - alpha_i per i, at height h, so q is complete for a level before the
    // level is expanded. The pairings are carried the same way.
    Level current;
    std::vector<std::uint8_t> unit(um, 0);
    for (int i = 0; i < m; ++i) {
        unit[i] = 1;
        current.flat.insert(current.flat.end(), unit.begin(), unit.end());
        unit[i] = 0;
        current.q.insert(current.q.end(), um, 0);
        current.pairing.insert(current.pairing.end(), um, 0);
        for (auto [j, v] : row[i]) current.pairing[static_cast<std::size_t>(i) * um + j] = static_cast<std::int8_t>(v);
        current.hashes.push_back(salt[i]);
    }

    std::vector<std::uint8_t> extendable(um);
    std::vector<std::uint8_t> probe(um);
    for (int height = 1;; ++height) {
        const std::size_t level_size = current.hashes.size();
        coroots_.insert(coroots_.end(), current.flat.begin(), current.flat.end());
        heights_.insert(heights_.end(), level_size, height);

        Level next;
        std::unordered_multimap<std::uint64_t, std::uint32_t> next_known;
        for (std::size_t k = 0; k < level_size; ++k) {
            const std::uint8_t* beta = current.flat.data() + k * um;
            const std::uint8_t* qb = current.q.data() + k * um;
            const std::int8_t* pb = current.pairing.data() + k * um;
            // beta + alpha_i is a coroot iff the string continues upwards: q - <alpha_i, beta> >= 1
            for (std::size_t i = 0; i < um; ++i) extendable[i] = static_cast<std::uint8_t>(qb[i] - pb[i] >= 1);
            const std::uint8_t* cursor = extendable.data();
            const std::uint8_t* const stop = extendable.data() + um;
            while (cursor < stop) {
                cursor = static_cast<const std::uint8_t*>(std::memchr(cursor, 1, static_cast<std::size_t>(stop - cursor)));
                if (!cursor) break;
                const auto i = static_cast<std::size_t>(cursor - extendable.data());
                ++cursor;
                std::copy(beta, beta + um, probe.begin());
                ++probe[i];
                const std::uint64_t h = current.hashes[k] + salt[i];
                std::size_t slot = next.hashes.size();
                auto [lo, hi] = next_known.equal_range(h);
                for (auto it = lo; it != hi; ++it)
                    if (std::equal(probe.begin(), probe.end(), next.flat.begin() + static_cast<std::ptrdiff_t>(it->second * um))) {
                        slot = it->second;
                        break;
                    }
                if (slot == next.hashes.size()) {
                    next_known.emplace(h, static_cast<std::uint32_t>(slot));
                    next.flat.insert(next.flat.end(), probe.begin(), probe.end());
                    next.q.insert(next.q.end(), um, 0);
                    next.pairing.insert(next.pairing.end(), pb, pb + um);
                    for (auto [j, v] : row[i]) next.pairing[slot * um + static_cast<std::size_t>(j)] += static_cast<std::int8_t>(v);
                    next.hashes.push_back(h);
                }
                next.q[slot * um + i] = static_cast<std::uint8_t>(qb[i] + 1);
            }
        }
        if (next.hashes.empty()) break;

        std::vector<std::size_t> order(next.hashes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            auto px = next.flat.begin() + static_cast<std::ptrdiff_t>(x * um);
            auto py = next.flat.begin() + static_cast<std::ptrdiff_t>(y * um);
            return std::lexicographical_compare(py, py + m, px, px + m);
        });
        Level sorted;
        sorted.flat.reserve(next.flat.size());
        sorted.q.reserve(next.q.size());
        sorted.pairing.reserve(next.pairing.size());
        for (std::size_t x : order) {
            const auto off = static_cast<std::ptrdiff_t>(x * um);
            sorted.flat.insert(sorted.flat.end(), next.flat.begin() + off, next.flat.begin() + off + m);
            sorted.q.insert(sorted.q.end(), next.q.begin() + off, next.q.begin() + off + m);
            sorted.pairing.insert(sorted.pairing.end(), next.pairing.begin() + off, next.pairing.begin() + off + m);
            sorted.hashes.push_back(next.hashes[x]);
        }
        current = std::move(sorted);
    }

    if (heights_.size() != expected_positive_root_count(type))
        throw std::logic_error("coroot closure for " + type.name() + " produced " + std::to_string(heights_.size()) +
                               " positive coroots, expected " + std::to_string(expected_positive_root_count(type)));

    // Local buffers: the coroot bytes are unsigned char, which may alias
    // anything, so member vectors would defeat vectorization here.
    const std::size_t count = heights_.size();
    std::vector<std::int64_t> sums(um, 0);
    std::vector<std::uint32_t> support(um, 0);
    {
        std::int64_t* __restrict s = sums.data();
        std::uint32_t* __restrict n = support.data();
        for (std::size_t k = 0; k < count; ++k) {
            const std::uint8_t* __restrict c = coroots_.data() + k * um;
            for (std::size_t i = 0; i < um; ++i) {
                s[i] += c[i];
                n[i] += c[i] != 0;
            }
        }
    }
    two_rho_check_ = std::move(sums);

    column_offsets_.assign(um + 1, 0);
    for (std::size_t i = 0; i < um; ++i) column_offsets_[i + 1] = column_offsets_[i] + support[i];
    std::vector<std::uint32_t> index(column_offsets_[um]);
    std::vector<std::uint8_t> coeff(column_offsets_[um]);
    std::vector<std::size_t> fill(column_offsets_.begin(), column_offsets_.end() - 1);
    // Blocked transpose: a block of coroots stays in cache while each column is
    // appended to in turn.
    constexpr std::size_t kBlock = 128;
    for (std::size_t k0 = 0; k0 < count; k0 += kBlock) {
        const std::size_t k1 = std::min(count, k0 + kBlock);
        for (std::size_t i = 0; i < um; ++i) {
            std::size_t f = fill[i];
            for (std::size_t k = k0; k < k1; ++k) {
                const std::uint8_t c = coroots_[k * um + i];
                if (!c) continue;
                index[f] = static_cast<std::uint32_t>(k);
                coeff[f] = c;
                ++f;
            }
            fill[i] = f;
        }
    }
    column_index_ = std::move(index);
    column_coeff_ = std::move(coeff);
}

RootDatum::Column RootDatum::coroots_through(int i) const
{
    const std::size_t b = column_offsets_.at(static_cast<std::size_t>(i));
    const std::size_t e = column_offsets_[static_cast<std::size_t>(i) + 1];
    return {std::span<const std::uint32_t>(column_index_).subspan(b, e - b),
            std::span<const std::uint8_t>(column_coeff_).subspan(b, e - b)};
}

} // namespace orthorep
