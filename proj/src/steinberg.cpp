#include "orthorep/steinberg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "orthorep/parallel.hpp"
#include "orthorep/primes.hpp"

namespace orthorep {

const char* to_string(ProductMode mode)
{
    return mode == ProductMode::orbit ? "orbit" : "all";
}

ProductMode parse_product_mode(const std::string& text)
{
    if (text == "orbit" || text == "class_s_orbit") return ProductMode::orbit;
    if (text == "all" || text == "all_products") return ProductMode::all;
    throw std::invalid_argument("unknown mode '" + text + "', expected orbit or all");
}

std::string TensorCandidate::label() const
{
    std::string s = type.name() + " ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " (x) ";
        s += factors[i].weight.pretty();
        if (i) s += "^(" + std::to_string(i) + ")";
    }
    return s;
}

TensorCandidate tensor_of(const LieType& type, std::vector<IrrepCandidate> factors, ProductMode mode)
{
    if (factors.empty()) throw std::invalid_argument("tensor product needs at least one factor");
    TensorCandidate t{type, std::move(factors), mode, 1};
    t.self_dual = true;
    t.fs = 1;
    for (const auto& f : t.factors) {
        if (f.type != type) throw std::invalid_argument("tensor factor of type " + f.type.name() + " inside " + type.name());
        t.dim *= f.dim;
        t.self_dual = t.self_dual && f.self_dual;
        t.fs *= f.fs;
        t.min_char = std::max({t.min_char, f.min_char, f.weight.max_coeff() + 1});
    }
    if (!t.self_dual) t.fs = 0;
    return t;
}

std::vector<std::vector<std::int64_t>> factorizations(std::int64_t n)
{
    if (n < 2) throw std::invalid_argument("factorizations need n >= 2, got " + std::to_string(n));
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t rest, std::int64_t smallest) -> void {
        if (rest == 1) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t d = smallest; d * d <= rest; ++d) {
            if (rest % d) continue;
            cur.push_back(d);
            self(self, rest / d, d);
            cur.pop_back();
        }
        if (rest >= smallest) {
            cur.push_back(rest);
            out.push_back(cur);
            cur.pop_back();
        }
    };
    rec(rec, n, 2);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

std::string factorization_str(const std::vector<std::int64_t>& f)
{
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(f[i]);
    }
    return s;
}

bool single_module(const std::vector<IrrepCandidate>& factors)
{
    return std::all_of(factors.begin(), factors.end(),
                       [&](const IrrepCandidate& c) { return c.weight == factors.front().weight && c.dim == factors.front().dim; });
}

std::string type_ranges(const std::vector<LieType>& types)
{
    std::string out;
    for (std::size_t i = 0; i < types.size();) {
        std::size_t j = i;
        while (j + 1 < types.size() && types[j + 1].family() == types[i].family() && types[j + 1].rank() == types[j].rank() + 1)
            ++j;
        if (!out.empty()) out += ", ";
        out += types[i].name();
        if (j > i) out += ".." + types[j].name();
        i = j + 1;
    }
    return out;
}

} // namespace

std::vector<TensorCandidate> steinberg_products(const std::vector<IrrepCandidate>& restricted, const LieType& type,
                                                std::int64_t n, ProductMode mode, std::vector<Exclusion>* dropped)
{
    if (n < 2) throw std::invalid_argument("tensor products need n >= 2");
    std::map<std::int64_t, std::vector<const IrrepCandidate*>> by_dim;
    for (const auto& c : restricted) {
        if (c.type != type || c.weight.is_zero() || !c.dim.fits_slong_p()) continue;
        const std::int64_t d = c.dim.get_si();
        if (d > 1 && n % d == 0) by_dim[d].push_back(&c);
    }

    std::vector<TensorCandidate> out;
    for (const auto& f : factorizations(n)) {
        bool realizable = std::all_of(f.begin(), f.end(), [&](std::int64_t d) { return by_dim.count(d) > 0; });
        if (!realizable) continue;
        // Positions with equal dimension take non-decreasing candidate indices
        // so each multiset of modules appears once.
        std::vector<std::size_t> pick(f.size(), 0);
        std::vector<IrrepCandidate> factors;
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == f.size()) {
                if (mode == ProductMode::orbit && factors.size() > 1 && !single_module(factors)) {
                    if (dropped) {
                        auto t = tensor_of(type, factors, mode);
                        dropped->push_back({"orbit_restriction", type.name(),
                                            t.label() + ": factors are not twists of one module"});
                    }
                    return;
                }
                out.push_back(tensor_of(type, factors, mode));
                return;
            }
            const auto& options = by_dim.at(f[pos]);
            std::size_t start = (pos > 0 && f[pos] == f[pos - 1]) ? pick[pos - 1] : 0;
            for (std::size_t k = start; k < options.size(); ++k) {
                pick[pos] = k;
                factors.push_back(*options[k]);
                self(self, pos + 1);
                factors.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

std::vector<TensorCandidate> steinberg_products(const LieType& type, std::int64_t n, ProductMode mode)
{
    RootDatum datum(type);
    return steinberg_products(enumerate_restricted(datum, BigInt(static_cast<long>(n))), type, n, mode);
}

namespace {

struct TypeScan {
    std::vector<TensorCandidate> orthogonal;
    std::vector<TensorCandidate> symplectic;
    std::size_t non_self_dual = 0;
    std::vector<Exclusion> exclusions;
    bool has_dim2_factor = false;
};

TypeScan scan_type(const LieType& type, std::int64_t n, std::int64_t min_char, ProductMode mode)
{
    TypeScan scan;
    RootDatum datum(type);
    auto restricted = enumerate_restricted(datum, BigInt(static_cast<long>(n)));

    std::vector<IrrepCandidate> usable;
    for (auto& c : restricted) {
        if (c.weight.is_zero() || n % c.dim.get_si() != 0) continue;
        if (c.dim == 2 && type != LieType(Family::A, 1)) scan.has_dim2_factor = true;
        if (c.weight.max_coeff() >= min_char) {
            scan.exclusions.push_back({"not_restricted", type.name(),
                                       c.weight.pretty() + " (dim " + c.dim.get_str() + ") has a coefficient >= min_char " +
                                           std::to_string(min_char)});
            continue;
        }
        usable.push_back(std::move(c));
    }

    for (auto& t : steinberg_products(usable, type, n, mode, &scan.exclusions)) {
        if (!t.self_dual) {
            ++scan.non_self_dual;
            scan.exclusions.push_back({"non_self_dual", type.name(), t.label() + " (dim " + t.dim.get_str() + ") is not self-dual"});
        } else if (t.fs > 0) {
            scan.orthogonal.push_back(std::move(t));
        } else {
            scan.exclusions.push_back({"indicator_sign", type.name(), t.label() + " has indicator -1 (symplectic)"});
            scan.symplectic.push_back(std::move(t));
        }
    }
    return scan;
}

} // namespace

ClassificationReport classify_orthogonal(std::int64_t n, std::int64_t min_char, ProductMode mode)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("classification needs an even dimension n >= 2, got " + std::to_string(n));
    if (min_char <= 19)
        throw std::invalid_argument("min_char must exceed 19 for generic dimensions to be trusted, got " +
                                    std::to_string(min_char));

    ClassificationReport report;
    report.n = n;
    report.min_char = min_char;
    report.mode = mode;

    const auto types = types_for_dimension(n);
    auto scans = parallel_map<TypeScan>(types.size(), [&](std::size_t i) { return scan_type(types[i], n, min_char, mode); });

    for (auto& s : scans) {
        if (s.has_dim2_factor)
            throw std::logic_error("a type other than A1 produced a 2-dimensional restricted module");
        for (auto& t : s.orthogonal) report.orthogonal.push_back(std::move(t));
        for (auto& t : s.symplectic) report.symplectic.push_back(std::move(t));
        report.excluded_non_self_dual += s.non_self_dual;
        for (auto& e : s.exclusions) report.exclusions.push_back(std::move(e));
    }

    std::string fs_list;
    for (const auto& f : factorizations(n)) {
        if (!fs_list.empty()) fs_list += ", ";
        fs_list += "(" + factorization_str(f) + ")";
        if (f.size() > 1 && std::count(f.begin(), f.end(), 2) > 0)
            report.exclusions.push_back({"no_dim2_non_A1", "*",
                                         "factorization " + factorization_str(f) +
                                             " needs a 2-dimensional factor, which only A1 provides"});
    }
    report.notes.push_back("factorizations of " + std::to_string(n) + ": " + fs_list);
    report.notes.push_back("scanned " + std::to_string(types.size()) + " types: " + type_ranges(types) +
                           " (C2 = B2 and D3 = A3 not repeated)");
    report.notes.push_back("generic (characteristic 0) dimensions assumed for every ell >= " + std::to_string(min_char));
    report.notes.push_back("verified: no type other than A1 has a 2-dimensional restricted module");
    report.notes.push_back(std::string("product mode: ") + to_string(mode) +
                           (mode == ProductMode::orbit ? " (multi-factor products only as twists of a single module)"
                                                       : " (arbitrary multisets of restricted modules)"));
    return report;
}

std::vector<std::int64_t> theorem1_primes()
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 17; p <= 73; ++p)
        if (is_prime_u64(static_cast<std::uint64_t>(p))) out.push_back(p);
    return out;
}

Theorem1Result verify_theorem1(std::int64_t pi)
{
    if (pi < 17 || pi > 73 || !is_prime_u64(static_cast<std::uint64_t>(pi)))
        throw std::invalid_argument("pi = " + std::to_string(pi) +
                                    " is outside the hypothesis: pi must be a prime with 17 <= pi <= 73");
    Theorem1Result result;
    result.pi = pi;
    const std::int64_t n = 4 * pi;
    result.report = classify_orthogonal(n, n + 1, ProductMode::orbit);

    const LieType expected(Family::D, static_cast<int>(2 * pi));
    const auto& orth = result.report.orthogonal;
    result.passed = orth.size() == 1 && orth[0].type == expected && orth[0].factors.size() == 1 &&
                    orth[0].factors[0].weight == DominantWeight::fundamental(expected.rank(), 1);
    if (result.passed) {
        result.verdict = "pass: the only orthogonal " + std::to_string(n) + "-dimensional candidate is " + orth[0].label();
    } else {
        result.verdict = "fail: expected exactly {" + expected.name() + " w1}, found {";
        for (std::size_t i = 0; i < orth.size(); ++i) result.verdict += (i ? ", " : "") + orth[i].label();
        result.verdict += "}";
    }
    return result;
}

} // namespace orthorep
