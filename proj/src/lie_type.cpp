#include "orthorep/lie_type.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace orthorep {

namespace {

std::string rank_rule(Family f)
{
    switch (f) {
    case Family::A: return "rank >= 1";
    case Family::B: return "rank >= 2";
    case Family::C: return "rank >= 2";
    case Family::D: return "rank >= 4";
    case Family::E: return "rank in {6,7,8}";
    case Family::F: return "rank = 4";
    case Family::G: return "rank = 2";
    }
    return {};
}

bool rank_ok(Family f, int m)
{
    switch (f) {
    case Family::A: return m >= 1;
    case Family::B:
    case Family::C: return m >= 2;
    case Family::D: return m >= 4;
    case Family::E: return m >= 6 && m <= 8;
    case Family::F: return m == 4;
    case Family::G: return m == 2;
    }
    return false;
}

} // namespace

Family parse_family(std::string_view text)
{
    if (text.size() != 1)
        throw std::invalid_argument("family must be one letter A-G, got '" + std::string(text) + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c < 'A' || c > 'G')
        throw std::invalid_argument(std::string("unknown family '") + text[0] + "', expected one of A-G");
    return static_cast<Family>(c);
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank)
{
    if (!rank_ok(family, rank))
        throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                                    static_cast<char>(family) + ": requires " + rank_rule(family));
}

LieType LieType::parse(std::string_view family, int rank)
{
    return LieType(parse_family(family), rank);
}

LieType LieType::parse(std::string_view text)
{
    if (text.size() < 2)
        throw std::invalid_argument("malformed Lie type '" + std::string(text) + "', expected e.g. D34");
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw std::invalid_argument("malformed Lie type '" + std::string(text) + "', expected e.g. D34");
    return parse(text.substr(0, 1), rank);
}

std::string LieType::name() const
{
    return letter() + std::to_string(rank_);
}

} // namespace orthorep
