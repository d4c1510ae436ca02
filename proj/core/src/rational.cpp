#include "confembed/rational.hpp"

#include "confembed/errors.hpp"

#include <cctype>

namespace confembed {

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& n) {
    return n.get_str();
}

std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) return std::nullopt;
        return Rational(Integer(std::string(s)));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-') return std::nullopt;
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw internal_error("divisors: n must be nonzero");
    Integer m = abs(n);
    std::vector<Integer> out;
    Integer i = 1;
    while (i * i <= m) {
        if (m % i == 0) {
            out.push_back(i);
            Integer j = m / i;
            if (j != i) out.push_back(j);
        }
        ++i;
    }
    return out;
}

}  // namespace confembed
