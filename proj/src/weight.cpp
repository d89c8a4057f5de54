#include "orthorep/weight.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orthorep {

namespace {

constexpr std::int64_t kMaxCoeff = std::int64_t{1} << 40;

void require_rank(const RootDatum& datum, const DominantWeight& w)
{
    if (w.rank() != datum.rank())
        throw std::invalid_argument("weight " + w.str() + " has length " + std::to_string(w.rank()) + " but " +
                                    datum.type().name() + " has rank " + std::to_string(datum.rank()));
}

// Sparse <lambda, alpha^vee> over the coroots that meet the support of lambda.
struct Pairings {
    std::vector<std::uint32_t> touched;
    std::vector<std::int64_t> value;
};

Pairings& scratch(std::size_t count)
{
    thread_local Pairings p;
    if (p.value.size() < count) p.value.assign(count, 0);
    return p;
}

template <class Fn>
void for_each_pairing(const RootDatum& datum, const DominantWeight& w, Fn&& fn)
{
    Pairings& p = scratch(datum.coroot_count());
    p.touched.clear();
    for (int i = 0; i < w.rank(); ++i) {
        const std::int64_t a = w[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        auto col = datum.coroots_through(i);
        for (std::size_t k = 0; k < col.index.size(); ++k) {
            auto idx = col.index[k];
            if (p.value[idx] == 0) p.touched.push_back(idx);
            p.value[idx] += a * col.coeff[k];
        }
    }
    bool keep_going = true;
    for (auto idx : p.touched) {
        if (keep_going) keep_going = fn(datum.rho_pairing(idx), p.value[idx]);
        p.value[idx] = 0;
    }
}

BigInt exact_product(const RootDatum& datum, const DominantWeight& w)
{
    BigInt num = 1, den = 1;
    for_each_pairing(datum, w, [&](int height, std::int64_t pairing) {
        mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(height + pairing));
        mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(height));
        return true;
    });
    BigInt quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (remainder != 0)
        throw std::logic_error("Weyl product for " + datum.type().name() + " " + w.str() + " is not integral");
    return quotient;
}

double log_of(const BigInt& x)
{
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace

DominantWeight::DominantWeight(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto a : coeffs_) {
        if (a < 0) throw std::invalid_argument("dominant weight has a negative coefficient: " + str());
        if (a > kMaxCoeff) throw std::invalid_argument("weight coefficient too large (limit 2^40): " + str());
    }
}

DominantWeight DominantWeight::fundamental(int rank, int i, std::int64_t a)
{
    if (i < 1 || i > rank)
        throw std::invalid_argument("fundamental weight index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(i - 1)] = a;
    return DominantWeight(std::move(c));
}

DominantWeight DominantWeight::parse(const std::string& text)
{
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in weight '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::int64_t> c;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("non-integer coefficient '" + item + "' in weight '" + text + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("non-integer coefficient '" + item + "' in weight '" + text + "'");
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty weight '" + text + "'");
    return DominantWeight(std::move(c));
}

std::int64_t DominantWeight::max_coeff() const noexcept
{
    return coeffs_.empty() ? 0 : *std::max_element(coeffs_.begin(), coeffs_.end());
}

DominantWeight DominantWeight::plus_fundamental(int index0) const
{
    auto c = coeffs_;
    ++c.at(static_cast<std::size_t>(index0));
    return DominantWeight(std::move(c));
}

std::string DominantWeight::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s + "]";
}

std::string DominantWeight::pretty() const
{
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += '+';
        if (coeffs_[i] != 1) s += std::to_string(coeffs_[i]);
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

const char* to_string(Dominance d)
{
    switch (d) {
    case Dominance::less: return "less";
    case Dominance::greater: return "greater";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

BigInt weyl_dimension(const RootDatum& datum, const DominantWeight& weight)
{
    require_rank(datum, weight);
    return exact_product(datum, weight);
}

std::optional<BigInt> weyl_dimension_at_most(const RootDatum& datum, const DominantWeight& weight, const BigInt& cap)
{
    require_rank(datum, weight);
    if (cap < 1) return std::nullopt;
    // Every factor is >= 1, so a partial product above the cap settles it. The
    // floating sum only decides clear overshoots; the margin dwarfs rounding.
    const double limit = log_of(cap) + 1e-7;

    // Pre-pass: a_i * w_i alone is dominated coefficientwise by the weight, so
    // its partial products bound the dimension from below. Columns are sorted
    // by height, so the large factors come first and the loop exits early.
    for (int i = 0; i < weight.rank(); ++i) {
        const std::int64_t a = weight[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        auto col = datum.coroots_through(i);
        double partial = 0.0;
        for (std::size_t k = 0; k < col.index.size(); ++k) {
            const int height = datum.rho_pairing(col.index[k]);
            partial += std::log1p(static_cast<double>(a * col.coeff[k]) / height);
            if (partial > limit) return std::nullopt;
        }
    }

    double acc = 0.0;
    bool over = false;
    for_each_pairing(datum, weight, [&](int height, std::int64_t pairing) {
        acc += std::log1p(static_cast<double>(pairing) / height);
        over = acc > limit;
        return !over;
    });
    if (over) return std::nullopt;
    BigInt dim = exact_product(datum, weight);
    if (dim > cap) return std::nullopt;
    return dim;
}

Dominance dominance_compare(const RootDatum& datum, const DominantWeight& lhs, const DominantWeight& rhs)
{
    require_rank(datum, lhs);
    require_rank(datum, rhs);
    if (lhs == rhs) return Dominance::equal;

    // Solve C x = rhs - lhs; column j of C is alpha_j in the fundamental basis.
    const int m = datum.rank();
    std::vector<std::vector<mpq_class>> aug(static_cast<std::size_t>(m), std::vector<mpq_class>(static_cast<std::size_t>(m) + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = datum.cartan(i, j);
        aug[i][m] = mpq_class(static_cast<long>(rhs[i] - lhs[i]));
    }
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        while (aug[pivot][col] == 0) ++pivot; // Cartan matrices are nonsingular
        std::swap(aug[pivot], aug[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            mpq_class f = aug[r][col] / aug[col][col];
            for (int c = col; c <= m; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    bool all_nonneg_int = true, all_nonpos_int = true;
    for (int i = 0; i < m; ++i) {
        mpq_class x = aug[i][m] / aug[i][i];
        x.canonicalize();
        const bool integral = x.get_den() == 1;
        all_nonneg_int = all_nonneg_int && integral && x >= 0;
        all_nonpos_int = all_nonpos_int && integral && x <= 0;
    }
    if (all_nonneg_int) return Dominance::less;
    if (all_nonpos_int) return Dominance::greater;
    return Dominance::incomparable;
}

bool is_q_restricted(const DominantWeight& weight, std::uint64_t q)
{
    if (q < 2) throw std::invalid_argument("q-restricted test needs q >= 2");
    return static_cast<std::uint64_t>(weight.max_coeff()) <= q - 1;
}

DominantWeight minus_w0(const LieType& type, const DominantWeight& weight)
{
    if (weight.rank() != type.rank())
        throw std::invalid_argument("weight " + weight.str() + " does not match rank of " + type.name());
    auto perm = diagram_automorphism(type);
    std::vector<std::int64_t> c(weight.coeffs().size());
    for (std::size_t i = 0; i < perm.size(); ++i) c[static_cast<std::size_t>(perm[i])] = weight[i];
    return DominantWeight(std::move(c));
}

bool is_self_dual(const LieType& type, const DominantWeight& weight)
{
    return minus_w0(type, weight) == weight;
}

int two_rho_parity(const RootDatum& datum, const DominantWeight& weight)
{
    require_rank(datum, weight);
    auto tr = datum.two_rho_check();
    int parity = 0;
    for (int i = 0; i < datum.rank(); ++i) parity ^= static_cast<int>((weight[i] & 1) & (tr[i] & 1));
    return parity;
}

int fs_indicator(const RootDatum& datum, const DominantWeight& weight)
{
    if (!is_self_dual(datum.type(), weight))
        throw std::invalid_argument("Frobenius-Schur indicator requested for non-self-dual weight " + weight.str() +
                                    " of " + datum.type().name());
    return two_rho_parity(datum, weight) == 0 ? 1 : -1;
}

} // namespace orthorep
