#include "orthorep/report.hpp"

#include <iomanip>

namespace orthorep {

namespace {

Json weight_json(const DominantWeight& w)
{
    Json a = Json::array();
    for (auto c : w.coeffs()) a.push_back(c);
    return a;
}

std::string fs_str(int fs)
{
    return fs > 0 ? "+1" : fs < 0 ? "-1" : "0";
}

} // namespace

Json to_json(const IrrepCandidate& c)
{
    Json j;
    j["family"] = std::string(1, c.type.letter());
    j["rank"] = c.type.rank();
    j["weight"] = weight_json(c.weight);
    j["dim"] = c.dim.get_str();
    j["self_dual"] = c.self_dual;
    j["fs"] = c.fs;
    j["epsilon"] = c.epsilon;
    j["min_char"] = c.min_char;
    return j;
}

Json to_json(const TensorCandidate& t)
{
    Json j;
    j["family"] = std::string(1, t.type.letter());
    j["rank"] = t.type.rank();
    j["label"] = t.label();
    j["dim"] = t.dim.get_str();
    j["self_dual"] = t.self_dual;
    j["fs"] = t.fs;
    j["min_char"] = t.min_char;
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(to_json(f));
    j["factors"] = std::move(factors);
    return j;
}

Json to_json(const ClassificationReport& r)
{
    Json j;
    j["n"] = r.n;
    j["mode"] = to_string(r.mode);
    j["min_char"] = r.min_char;
    j["orthogonal"] = Json::array();
    for (const auto& t : r.orthogonal) j["orthogonal"].push_back(to_json(t));
    j["symplectic"] = Json::array();
    for (const auto& t : r.symplectic) j["symplectic"].push_back(to_json(t));
    j["excluded_non_self_dual"] = r.excluded_non_self_dual;
    j["exclusions"] = Json::array();
    for (const auto& e : r.exclusions) j["exclusions"].push_back(Json{{"rule", e.rule}, {"type", e.type}, {"detail", e.detail}});
    j["notes"] = r.notes;
    return j;
}

Json to_json(const Theorem1Result& r)
{
    Json j;
    j["pi"] = r.pi;
    j["n"] = 4 * r.pi;
    j["passed"] = r.passed;
    j["verdict"] = r.verdict;
    j["report"] = to_json(r.report);
    return j;
}

Json to_json(const PrimePair& pair)
{
    Json checks;
    checks["p_prime"] = pair.checks.p_prime;
    checks["t_prime"] = pair.checks.t_prime;
    checks["distinct"] = pair.checks.distinct;
    checks["p_one_mod_n"] = pair.checks.p_one_mod_n;
    checks["p_above_M"] = pair.checks.p_above_M;
    checks["t_above_M"] = pair.checks.t_above_M;
    checks["order_is_n"] = pair.checks.order_is_n;
    checks["half_power_is_minus_one"] = pair.checks.half_power_is_minus_one;
    checks["l0_splitting"] = PairChecks::l0_splitting;
    Json j;
    j["p"] = pair.p.get_str();
    j["t"] = pair.t.get_str();
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const ModMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_jsonl(std::ostream& out, const std::vector<IrrepCandidate>& candidates)
{
    for (const auto& c : candidates) out << to_json(c).dump() << '\n';
}

void write_table(std::ostream& out, const std::vector<IrrepCandidate>& candidates)
{
    out << std::left << std::setw(6) << "type" << std::setw(24) << "weight" << std::setw(14) << "dim" << std::setw(10)
        << "self-dual" << std::setw(5) << "fs" << std::setw(4) << "eps" << "min_char\n";
    for (const auto& c : candidates) {
        out << std::setw(6) << c.type.name() << std::setw(24) << c.weight.str() << std::setw(14) << c.dim.get_str()
            << std::setw(10) << (c.self_dual ? "yes" : "no") << std::setw(5) << fs_str(c.fs) << std::setw(4) << c.epsilon
            << c.min_char;
        if (c.only_char) out << "  (exception: ell = " << *c.only_char << " only)";
        out << '\n';
    }
}

void write_table(std::ostream& out, const ClassificationReport& r)
{
    out << "dimension " << r.n << ", mode " << to_string(r.mode) << ", ell >= " << r.min_char << "\n";
    out << "orthogonal (" << r.orthogonal.size() << "):\n";
    for (const auto& t : r.orthogonal) out << "  " << t.label() << "  dim " << t.dim.get_str() << "\n";
    out << "symplectic (" << r.symplectic.size() << "):\n";
    for (const auto& t : r.symplectic) out << "  " << t.label() << "  dim " << t.dim.get_str() << "\n";
    out << "excluded as not self-dual: " << r.excluded_non_self_dual << "\n";
    out << "exclusions (" << r.exclusions.size() << "):\n";
    for (const auto& e : r.exclusions) out << "  [" << e.rule << "] " << e.type << ": " << e.detail << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
}

void write_table(std::ostream& out, const Theorem1Result& r)
{
    out << "pi = " << r.pi << " (n = " << 4 * r.pi << "): " << r.verdict << "\n";
    out << "  orthogonal:";
    for (const auto& t : r.report.orthogonal) out << " {" << t.label() << "}";
    out << "\n  symplectic:";
    for (const auto& t : r.report.symplectic) out << " {" << t.label() << "}";
    out << "\n";
}

} // namespace orthorep
