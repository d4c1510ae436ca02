#pragma once

#include "confembed/rational.hpp"

#include <vector>

namespace confembed {

/// Coordinates on the fundamental-weight basis of some fixed RootDatum.
/// The datum is passed alongside; a Weight is plain data.
struct Weight {
    std::vector<Rational> fw;

    bool operator==(const Weight&) const = default;

    bool is_integral() const {
        for (const auto& c : fw)
            if (c.get_den() != 1) return false;
        return true;
    }
    bool is_dominant() const {
        for (const auto& c : fw)
            if (c < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : fw)
            if (c != 0) return false;
        return true;
    }
};

/// Integral weights in fundamental-weight coordinates; the fast path for
/// weight-multiplicity and tensor-product work.
using IntWeight = std::vector<long>;

Weight to_weight(const IntWeight& w);
IntWeight to_int_weight(const Weight& w);  // throws input_error if non-integral

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& c, const Weight& a);

}  // namespace confembed
