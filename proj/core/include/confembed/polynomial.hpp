#pragma once

#include "confembed/rational.hpp"

#include <vector>

namespace confembed {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    /// a + b*x
    static Polynomial linear(const Rational& a, const Rational& b);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational eval(const Rational& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Clears denominators and divides by the content; the result has
    /// coprime integer coefficients with positive leading coefficient.
    std::vector<Integer> primitive_integer_coeffs() const;

    /// Synthetic division by (x - r); requires r to be an exact root.
    Polynomial deflate(const Rational& r) const;

    std::string str(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct RationalRoots {
    std::vector<Rational> roots;  // with multiplicity, ascending
    Polynomial residual;          // rational-root-free cofactor
};

/// Complete rational root extraction via the rational root theorem on the
/// primitive integer form: every candidate p/q with p | trailing and
/// q | leading coefficient is tested by exact evaluation, found roots are
/// deflated until none remain.
RationalRoots rational_roots(const Polynomial& p);

}  // namespace confembed
