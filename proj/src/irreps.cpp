#include "orthorep/irreps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "orthorep/parallel.hpp"
#include "orthorep/primes.hpp"

namespace orthorep {

namespace {

bool candidate_order(const IrrepCandidate& a, const IrrepCandidate& b)
{
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.generic() != b.generic()) return a.generic();
    return a.only_char < b.only_char;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string unquote(std::string s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = trim(s.substr(1, s.size() - 2));
    return s;
}

// family,rank,weight,ell,dim with the weight field bracketed (commas inside).
std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            fields.push_back(unquote(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(unquote(cur));
    return fields;
}

std::int64_t parse_int(const std::string& s, const char* what)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    return v;
}

} // namespace

IrrepCandidate make_candidate(const RootDatum& datum, const DominantWeight& weight)
{
    IrrepCandidate c{datum.type(), weight, weyl_dimension(datum, weight), false, 0, 1, kDefaultMinChar, std::nullopt};
    c.self_dual = is_self_dual(datum.type(), weight);
    c.fs = c.self_dual ? fs_indicator(datum, weight) : 0;
    c.epsilon = datum.epsilon();
    return c;
}

std::vector<IrrepCandidate> enumerate_restricted(const RootDatum& datum, const BigInt& bound)
{
    if (bound < 1) throw std::invalid_argument("dimension bound must be >= 1");
    const int m = datum.rank();
    std::vector<IrrepCandidate> out;

    // Each weight is reached once: increments are applied at non-decreasing
    // node indices. Strict monotonicity of the dimension in every coefficient
    // means every ancestor of a weight within the bound is also within it.
    struct Node {
        DominantWeight weight;
        int first_free;
    };
    std::vector<Node> stack{{DominantWeight::zero(m), 0}};
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        auto dim = weyl_dimension_at_most(datum, node.weight, bound);
        if (!dim) continue;
        IrrepCandidate c{datum.type(), node.weight, *dim, false, 0, 1, kDefaultMinChar, std::nullopt};
        c.self_dual = is_self_dual(datum.type(), node.weight);
        c.fs = c.self_dual ? fs_indicator(datum, node.weight) : 0;
        c.epsilon = datum.epsilon();
        out.push_back(std::move(c));
        for (int j = m - 1; j >= node.first_free; --j) stack.push_back({node.weight.plus_fundamental(j), j});
    }
    std::sort(out.begin(), out.end(), candidate_order);
    return out;
}

std::vector<IrrepCandidate> enumerate_restricted(const LieType& type, const BigInt& bound)
{
    return enumerate_restricted(RootDatum(type), bound);
}

std::vector<LieType> types_for_dimension(std::int64_t n)
{
    std::vector<LieType> types;
    for (std::int64_t m = 1; m <= n - 1; ++m) types.emplace_back(Family::A, static_cast<int>(m));
    for (std::int64_t m = 2; 2 * m + 1 <= n + 1; ++m) types.emplace_back(Family::B, static_cast<int>(m));
    for (std::int64_t m = 3; 2 * m <= n; ++m) types.emplace_back(Family::C, static_cast<int>(m));
    for (std::int64_t m = 4; 2 * m <= n; ++m) types.emplace_back(Family::D, static_cast<int>(m));
    for (int m : {6, 7, 8}) types.emplace_back(Family::E, m);
    types.emplace_back(Family::F, 4);
    types.emplace_back(Family::G, 2);
    return types;
}

std::vector<IrrepCandidate> candidates_of_dimension(const std::vector<LieType>& types, std::int64_t n, bool self_dual_only)
{
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    const BigInt target(static_cast<long>(n));
    auto per_type = parallel_map<std::vector<IrrepCandidate>>(types.size(), [&](std::size_t i) {
        std::vector<IrrepCandidate> hits;
        for (auto& c : enumerate_restricted(types[i], target)) {
            if (c.dim != target || c.weight.is_zero()) continue;
            if (self_dual_only && !c.self_dual) continue;
            hits.push_back(std::move(c));
        }
        return hits;
    });
    std::vector<IrrepCandidate> out;
    for (auto& v : per_type)
        for (auto& c : v) out.push_back(std::move(c));
    return out;
}

std::vector<ExceptionRecord> load_exceptions(std::istream& in)
{
    std::vector<ExceptionRecord> out;
    std::set<std::tuple<LieType, DominantWeight, std::int64_t>> seen;
    std::map<LieType, RootDatum> data;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto fail = [&](const std::string& why) -> std::invalid_argument {
            return std::invalid_argument("exceptions line " + std::to_string(line_no) + ": " + why);
        };
        if (!header_seen) {
            std::string compact;
            for (char c : t)
                if (c != ' ') compact += c;
            if (compact != "family,rank,weight,ell,dim") throw fail("expected header 'family,rank,weight,ell,dim'");
            header_seen = true;
            continue;
        }
        auto f = split_row(t);
        if (f.size() != 5) throw fail("expected 5 fields, found " + std::to_string(f.size()));
        try {
            LieType type = LieType::parse(f[0], static_cast<int>(parse_int(f[1], "rank")));
            if (f[2].empty() || f[2].front() != '[') throw std::invalid_argument("weight must be bracketed, e.g. [0,1]");
            DominantWeight weight = DominantWeight::parse(f[2]);
            if (weight.rank() != type.rank())
                throw std::invalid_argument("weight " + weight.str() + " does not have rank " + std::to_string(type.rank()));
            std::int64_t ell = parse_int(f[3], "ell");
            if (ell < 2 || !is_prime_u64(static_cast<std::uint64_t>(ell)))
                throw std::invalid_argument("ell = " + f[3] + " is not prime");
            BigInt dim;
            if (dim.set_str(f[4], 10) != 0 || dim < 1) throw std::invalid_argument("bad dimension '" + f[4] + "'");
            auto it = data.find(type);
            if (it == data.end()) it = data.emplace(type, RootDatum(type)).first;
            BigInt generic = weyl_dimension(it->second, weight);
            if (dim > generic)
                throw std::invalid_argument("corrected dimension " + dim.get_str() + " exceeds generic dimension " +
                                            generic.get_str() + " of " + type.name() + " " + weight.str());
            if (!seen.emplace(type, weight, ell).second)
                throw std::invalid_argument("duplicate row for " + type.name() + " " + weight.str() + " ell=" + f[3]);
            out.push_back({type, weight, ell, dim});
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return out;
}

std::vector<IrrepCandidate> apply_exceptions(const RootDatum& datum, std::vector<IrrepCandidate> candidates,
                                             const std::vector<ExceptionRecord>& exceptions, const BigInt& bound)
{
    std::map<DominantWeight, std::int64_t> largest_ell;
    for (const auto& e : exceptions) {
        if (e.type != datum.type()) continue;
        auto& v = largest_ell[e.weight];
        v = std::max(v, e.ell);
        if (e.corrected_dim > bound) continue;
        IrrepCandidate c = make_candidate(datum, e.weight);
        c.dim = e.corrected_dim;
        c.min_char = e.ell;
        c.only_char = e.ell;
        candidates.push_back(std::move(c));
    }
    for (auto& c : candidates) {
        if (!c.generic()) continue;
        if (auto it = largest_ell.find(c.weight); it != largest_ell.end()) c.min_char = it->second + 1;
    }
    std::sort(candidates.begin(), candidates.end(), candidate_order);
    return candidates;
}

} // namespace orthorep
