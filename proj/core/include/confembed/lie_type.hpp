#pragma once

#include "confembed/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace confembed {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie algebra type in Bourbaki numbering. Rank constraints:
/// A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=3, with D3 silently
/// canonicalized to A3), E_6/E_7/E_8, F_4, G_2.
struct LieType {
    Family family;
    int rank;

    bool operator==(const LieType&) const = default;
    auto operator<=>(const LieType&) const = default;
};

/// Validates the rank constraint and applies the D3 = A3 convention.
/// Throws input_error with a diagnostic naming the violated constraint.
LieType make_lie_type(Family f, int rank);

/// Parses strings like "A5", "g2", "E8" (case-insensitive family letter,
/// decimal rank). Returns nullopt on malformed input; rank constraints are
/// still enforced via make_lie_type and surface as input_error.
std::optional<LieType> parse_lie_type(std::string_view s);

std::string to_string(const LieType& t);

/// dim of the algebra (closed form per family).
Integer lie_dim(const LieType& t);

}  // namespace confembed
