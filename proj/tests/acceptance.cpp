// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact; the time limits are the only tolerances.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orthorep/arithmetic.hpp"
#include "orthorep/induced_rep.hpp"
#include "orthorep/irreps.hpp"
#include "orthorep/primes.hpp"
#include "orthorep/steinberg.hpp"

using namespace orthorep;

namespace {

constexpr double kEnumerationSeconds = 30.0;
constexpr double kInducedSeconds = 10.0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string note;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool contains_label(const std::vector<TensorCandidate>& v, const std::string& label)
{
    for (const auto& t : v)
        if (t.label() == label) return true;
    return false;
}

Outcome theorem_suite()
{
    Outcome o;
    for (auto pi : theorem1_primes()) {
        const auto r = verify_theorem1(pi);
        const std::string tag = "pi=" + std::to_string(pi) + ": ";
        o.require(r.passed, tag + r.verdict);
        const std::string d = "D" + std::to_string(2 * pi) + " w1";
        o.require(r.report.orthogonal.size() == 1 && r.report.orthogonal[0].label() == d, tag + "orthogonal set is not {" + d + "}");
        o.require(contains_label(r.report.symplectic, "C" + std::to_string(2 * pi) + " w1"), tag + "C w1 missing");
        o.require(contains_label(r.report.symplectic, "A1 " + std::to_string(4 * pi - 1) + "w1"), tag + "A1 (4pi-1)w1 missing");
    }
    return o;
}

Outcome small_dimensions()
{
    Outcome o;
    for (const auto& c : candidates_of_dimension(types_for_dimension(2), 2, false))
        o.require(c.type == LieType(Family::A, 1), "dimension 2 module of type " + c.type.name());

    std::map<std::string, const IrrepCandidate*> four;
    const auto fours = candidates_of_dimension(types_for_dimension(4), 4, false);
    for (const auto& c : fours) four[c.type.name() + " " + c.weight.str()] = &c;
    std::vector<std::string> non_a1;
    for (const auto& [key, c] : four)
        if (c->type != LieType(Family::A, 1)) non_a1.push_back(key);
    o.require(non_a1 == std::vector<std::string>{"A3 [0,0,1]", "A3 [1,0,0]", "B2 [0,1]"}, "dimension 4 types are not exactly A3 and B2");
    for (const char* key : {"A3 [1,0,0]", "A3 [0,0,1]"})
        o.require(four.count(key) && !four[key]->self_dual, std::string(key) + " not flagged non-self-dual");
    o.require(four.count("B2 [0,1]") && four["B2 [0,1]"]->fs == -1, "B2 w2 not symplectic");
    return o;
}

Outcome indicators()
{
    Outcome o;
    RootDatum a1(LieType(Family::A, 1));
    for (auto pi : theorem1_primes())
        o.require(fs_indicator(a1, DominantWeight::fundamental(1, 1, 4 * pi - 1)) == -1, "A1 (4pi-1)w1, pi=" + std::to_string(pi));
    for (int m = 2; m <= 146; m += 2) {
        RootDatum c(LieType(Family::C, m));
        o.require(fs_indicator(c, DominantWeight::fundamental(m, 1)) == -1, "C" + std::to_string(m) + " w1");
        if (m >= 4) {
            RootDatum d(LieType(Family::D, m));
            o.require(fs_indicator(d, DominantWeight::fundamental(m, 1)) == 1, "D" + std::to_string(m) + " w1");
        }
    }
    return o;
}

/// Brute-force box search over weights with all later coordinates zero as the pruning test.
void box(const std::set<oracle::Vec>& coroots, const mpz_class& bound, oracle::Vec& w, std::size_t k,
         std::map<oracle::Vec, mpz_class>& out)
{
    if (k == w.size()) {
        out.emplace(w, oracle::weyl_dimension(coroots, w));
        return;
    }
    for (long a = 0;; ++a) {
        w[k] = a;
        for (std::size_t j = k + 1; j < w.size(); ++j) w[j] = 0;
        if (oracle::weyl_dimension(coroots, w) > bound) break;
        box(coroots, bound, w, k + 1, out);
    }
    w[k] = 0;
}

Outcome enumeration()
{
    Outcome o;
    const auto start = Clock::now();
    std::vector<LieType> types;
    for (int m = 1; m <= 4; ++m) types.emplace_back(Family::A, m);
    for (int m = 2; m <= 4; ++m) types.emplace_back(Family::B, m);
    for (int m = 2; m <= 4; ++m) types.emplace_back(Family::C, m);
    types.emplace_back(Family::D, 4);
    types.emplace_back(Family::F, 4);
    types.emplace_back(Family::G, 2);
    for (const auto& t : types) {
        const auto coroots = oracle::positive_coroots(t);
        oracle::Vec w(static_cast<std::size_t>(t.rank()), 0);
        std::map<oracle::Vec, mpz_class> all;
        box(coroots, 100, w, 0, all);
        RootDatum datum(t);
        for (long bound = 1; bound <= 100; ++bound) {
            std::map<oracle::Vec, mpz_class> expected;
            for (const auto& [v, d] : all)
                if (d <= bound) expected.emplace(v, d);
            std::map<oracle::Vec, mpz_class> got;
            for (const auto& c : enumerate_restricted(datum, bound))
                got.emplace(oracle::Vec(c.weight.coeffs().begin(), c.weight.coeffs().end()), c.dim);
            o.require(got == expected, t.name() + " bound " + std::to_string(bound));
        }
    }
    const auto e8 = enumerate_restricted(LieType(Family::E, 8), 300);
    o.require(e8.size() == 2 && e8[0].weight.is_zero() && e8[1].dim == 248, "E8 at bound 300");
    const double elapsed = seconds_since(start);
    o.require(elapsed < kEnumerationSeconds, "took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome factorization_lists()
{
    Outcome o;
    for (auto pi : theorem1_primes())
        o.require(factorizations(4 * pi) == std::vector<std::vector<std::int64_t>>{{4 * pi}, {2, 2 * pi}, {4, pi}, {2, 2, pi}},
                  "4*" + std::to_string(pi));
    return o;
}

std::string first_pair(std::int64_t n, long M)
{
    const auto s = find_prime_pairs(n, mpz_class(M), 1, 1'000'000);
    if (s.pairs.empty()) return "none";
    return "(" + s.pairs[0].p.get_str() + "," + s.pairs[0].t.get_str() + ")";
}

Outcome arithmetic()
{
    Outcome o;
    o.require(compute_M({10, 1, 1}) == mpz_class("4790016000001"), "compute_M(10,1,1) = " + compute_M({10, 1, 1}).get_str());
    const auto four = first_pair(4, 2);
    o.require(four == "(5,3)", "find_prime_pairs(4, M=2) first pair " + four);
    const auto twelve = first_pair(12, 2);
    o.require(twelve == "(13,2)", "find_prime_pairs(12, M=2) first pair " + twelve + ", expected (13,2)");
    o.note = "the search enforces t > M, and t = 2 does not exceed M = 2";

    for (std::int64_t n : {2, 4, 6, 8, 10, 12, 16, 20}) {
        for (const char* M : {"2", "1000", "100000000000000000000"}) {
            const mpz_class bound(M);
            const auto s = find_prime_pairs(n, bound, 4, 1'000'000);
            for (const auto& pair : s.pairs)
                o.require(check_pair(pair.p, pair.t, n, bound).all() && pair.checks.all(),
                          "pair (" + pair.p.get_str() + "," + pair.t.get_str() + ") fails its checks");
        }
    }
    return o;
}

Outcome induced()
{
    Outcome o;
    const auto start = Clock::now();
    for (auto [p, t, n] : std::vector<std::array<std::uint64_t, 3>>{{5, 3, 4}, {13, 2, 12}, {3, 2, 2}}) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(t) + "," + std::to_string(n) + "): ";
        const auto rep = build_induced_rep(p, t, n);
        o.require(satisfies_tame_relation(rep), tag + "tame relation");
        o.require(rep.gram.is_symmetric() && verify_orthogonality(rep), tag + "symmetric invariant form");
        o.require(commutant_dimension(rep) == 1, tag + "commutant dimension");
        o.require(projective_order(rep, Generator::tau) == p, tag + "projective order of tau");
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < kInducedSeconds, "took " + std::to_string(elapsed) + " s");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "dimension 4*pi classification for pi in [17, 73]", theorem_suite},
        {2, "dimension 2 and 4 modules", small_dimensions},
        {3, "Frobenius-Schur indicators", indicators},
        {4, "enumeration against brute force", enumeration},
        {5, "factorizations of 4*pi", factorization_lists},
        {6, "bound M and prime pairs", arithmetic},
        {7, "induced monomial representations", induced},
    };

    std::map<int, bool> passed;
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        const auto outcome = c.run();
        const double elapsed = seconds_since(start);
        passed[c.id] = outcome.pass;
        all = all && outcome.pass;
        std::printf("%s %d: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, elapsed);
        for (const auto& f : outcome.failures) std::printf("    %s\n", f.c_str());
        if (!outcome.pass && !outcome.note.empty()) std::printf("    note: %s\n", outcome.note.c_str());
    }

    // The global realization statement needs number-field computations outside
    // this program; it stands or falls with its two verified ingredients.
    const bool composite = passed[1] && passed[6] && passed[7];
    all = all && composite;
    std::printf("%s 8: classification and local construction ingredients (criteria 1, 6, 7)\n", composite ? "PASS" : "FAIL");
    if (!composite) std::printf("    depends on a failing ingredient criterion\n");
    std::printf("    global realization over Q is not checked here\n");
    std::fflush(stdout);
    return all ? 0 : 1;
}
