#include "confembed/lie_type.hpp"

#include "confembed/errors.hpp"

#include <cctype>

namespace confembed {

LieType make_lie_type(Family f, int rank) {
    auto fail = [&](const char* constraint) {
        throw input_error("invalid rank " + std::to_string(rank) + " for family " +
                          std::string(1, static_cast<char>(f)) + " (requires " + constraint + ")");
    };
    switch (f) {
        case Family::A:
            if (rank < 1) fail("rank >= 1");
            break;
        case Family::B:
        case Family::C:
            if (rank < 2) fail("rank >= 2");
            break;
        case Family::D:
            if (rank < 3) fail("rank >= 3");
            if (rank == 3) return {Family::A, 3};
            break;
        case Family::E:
            if (rank < 6 || rank > 8) fail("rank in {6,7,8}");
            break;
        case Family::F:
            if (rank != 4) fail("rank = 4");
            break;
        case Family::G:
            if (rank != 2) fail("rank = 2");
            break;
    }
    return {f, rank};
}

std::optional<LieType> parse_lie_type(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') return std::nullopt;
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) return std::nullopt;
    }
    return make_lie_type(static_cast<Family>(c), rank);
}

std::string to_string(const LieType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

Integer lie_dim(const LieType& t) {
    long n = t.rank;
    switch (t.family) {
        case Family::A: return Integer(n) * (n + 2);
        case Family::B:
        case Family::C: return Integer(n) * (2 * n + 1);
        case Family::D: return Integer(n) * (2 * n - 1);
        case Family::E:
            if (n == 6) return 78;
            if (n == 7) return 133;
            return 248;
        case Family::F: return 52;
        case Family::G: return 14;
    }
    throw internal_error("lie_dim: unreachable");
}

}  // namespace confembed
