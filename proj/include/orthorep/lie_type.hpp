#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace orthorep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type X_m, Bourbaki numbering of simple roots.
class LieType {
public:
    /// Throws std::invalid_argument when the rank is not allowed for the family.
    LieType(Family family, int rank);

    /// Parses "D34", "e8" or ("D", 34).
    static LieType parse(std::string_view text);
    static LieType parse(std::string_view family, int rank);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    char letter() const noexcept { return static_cast<char>(family_); }

    std::string name() const;

    friend auto operator<=>(const LieType&, const LieType&) = default;

private:
    Family family_;
    int rank_;
};

Family parse_family(std::string_view text);

} // namespace orthorep
