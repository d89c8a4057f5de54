#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here calls into the code under test except for the Cartan matrix.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

#include "orthorep/lie_type.hpp"
#include "orthorep/root_datum.hpp"

namespace oracle {

using Vec = std::vector<long>;

inline mpq_class ratio(long num, long den)
{
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

/// Positive coroots in the simple-coroot basis, by Weyl-group orbit closure
/// of the simple coroots (every coroot is W-conjugate to a simple one).
inline std::set<Vec> positive_coroots(const orthorep::LieType& type)
{
    const int m = type.rank();
    const auto a = orthorep::cartan_matrix(type);
    auto A = [&](int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; };
    std::set<Vec> all;
    std::vector<Vec> frontier;
    for (int i = 0; i < m; ++i) {
        Vec v(static_cast<std::size_t>(m), 0);
        v[i] = 1;
        all.insert(v);
        frontier.push_back(v);
    }
    while (!frontier.empty()) {
        Vec v = frontier.back();
        frontier.pop_back();
        for (int i = 0; i < m; ++i) {
            // s_i(b) = b - <alpha_i, b> alpha_i^vee, <alpha_i, alpha_j^vee> = A_ji
            long pairing = 0;
            for (int j = 0; j < m; ++j) pairing += v[j] * A(j, i);
            Vec w = v;
            w[i] -= pairing;
            if (all.insert(w).second) frontier.push_back(w);
        }
    }
    std::set<Vec> positive;
    for (const auto& v : all) {
        bool nonneg = true;
        for (long c : v) nonneg = nonneg && c >= 0;
        if (nonneg) positive.insert(v);
    }
    return positive;
}

/// Dominant representative of the W-orbit of `mu` (fundamental-weight
/// coordinates), by repeatedly reflecting in a simple root with negative pairing.
inline Vec dominant_conjugate(const orthorep::LieType& type, Vec mu)
{
    const int m = type.rank();
    const auto a = orthorep::cartan_matrix(type);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < m; ++i) {
            if (mu[i] >= 0) continue;
            // alpha_i = sum_k A_ki omega_k
            const long c = mu[i];
            for (int k = 0; k < m; ++k) mu[k] -= c * a[static_cast<std::size_t>(k) * m + i];
            changed = true;
        }
    }
    return mu;
}

/// Highest weight of the dual module: the dominant conjugate of -lambda.
inline Vec dual_weight(const orthorep::LieType& type, const Vec& lambda)
{
    Vec neg(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
    return dominant_conjugate(type, neg);
}

/// Weyl dimension as a plain product over an independently generated root list.
inline mpz_class weyl_dimension(const std::set<Vec>& coroots, const Vec& lambda)
{
    mpq_class d = 1;
    for (const auto& c : coroots) {
        long h = 0, pairing = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            h += c[i];
            pairing += c[i] * lambda[i];
        }
        d *= ratio(h + pairing, h);
    }
    d.canonicalize();
    return d.get_num();
}

/// SL_{m+1} dimension by the hook-content style product over the partition.
inline mpz_class dim_type_a(const Vec& lambda)
{
    const std::size_t r = lambda.size() + 1;
    std::vector<long> part(r, 0);
    for (std::size_t i = lambda.size(); i-- > 0;) part[i] = part[i + 1] + lambda[i];
    mpq_class d = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            d *= ratio(part[i] - part[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    d.canonicalize();
    return d.get_num();
}

/// B, C, D dimensions in epsilon coordinates (all doubled to stay integral).
inline mpz_class dim_classical(orthorep::Family family, const Vec& lambda)
{
    const long m = static_cast<long>(lambda.size());
    std::vector<long> l(static_cast<std::size_t>(m), 0), rho(static_cast<std::size_t>(m), 0);
    auto add_prefix = [&](long count, long amount) {
        for (long k = 0; k < count; ++k) l[k] += amount;
    };
    for (long i = 0; i < m; ++i) {
        const long a = lambda[i];
        using orthorep::Family;
        if (family == Family::B && i == m - 1) {
            add_prefix(m, a); // omega_m = (e_1 + ... + e_m) / 2
        } else if (family == Family::D && i == m - 2) {
            add_prefix(m - 1, a); // omega_{m-1} = (e_1 + ... + e_{m-1} - e_m) / 2
            l[m - 1] -= a;
        } else if (family == Family::D && i == m - 1) {
            add_prefix(m, a);
        } else {
            add_prefix(i + 1, 2 * a);
        }
    }
    for (long k = 0; k < m; ++k) {
        switch (family) {
        case orthorep::Family::B: rho[k] = 2 * (m - k) - 1; break;
        case orthorep::Family::C: rho[k] = 2 * (m - k); break;
        default: rho[k] = 2 * (m - 1 - k); break;
        }
    }
    mpq_class d = 1;
    for (long i = 0; i < m; ++i) {
        const long li = l[i] + rho[i];
        for (long j = i + 1; j < m; ++j) {
            const long lj = l[j] + rho[j];
            d *= ratio((li - lj) * (li + lj), (rho[i] - rho[j]) * (rho[i] + rho[j]));
        }
        if (family != orthorep::Family::D) d *= ratio(li, rho[i]);
    }
    d.canonicalize();
    return d.get_num();
}

} // namespace oracle
