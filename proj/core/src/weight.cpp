#include "confembed/weight.hpp"

#include "confembed/errors.hpp"

namespace confembed {

Weight to_weight(const IntWeight& w) {
    Weight out;
    out.fw.reserve(w.size());
    for (long c : w) out.fw.emplace_back(c);
    return out;
}

IntWeight to_int_weight(const Weight& w) {
    if (!w.is_integral()) throw input_error("weight is not integral");
    IntWeight out;
    out.reserve(w.fw.size());
    for (const auto& c : w.fw) out.push_back(c.get_num().get_si());
    return out;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight out = a;
    for (size_t i = 0; i < out.fw.size(); ++i) out.fw[i] += b.fw[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight out = a;
    for (size_t i = 0; i < out.fw.size(); ++i) out.fw[i] -= b.fw[i];
    return out;
}

Weight operator*(const Rational& c, const Weight& a) {
    Weight out = a;
    for (auto& x : out.fw) x *= c;
    return out;
}

}  // namespace confembed
