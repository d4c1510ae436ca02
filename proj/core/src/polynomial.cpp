#include "confembed/polynomial.hpp"

#include "confembed/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace confembed {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
    return Polynomial({a, b});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

std::vector<Integer> Polynomial::primitive_integer_coeffs() const {
    if (is_zero()) return {};
    Integer lcm_den = 1;
    for (const auto& c : coeffs_) {
        Integer d = c.get_den();
        Integer g = gcd(lcm_den, d);
        lcm_den = lcm_den / g * d;
    }
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer content = 0;
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        content = gcd(content, v);
        out.push_back(v);
    }
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

Polynomial Polynomial::deflate(const Rational& r) const {
    if (is_zero()) throw internal_error("deflate: zero polynomial");
    // Horner quotient: p(x) = (x - r) q(x) + p(r)
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    Rational carry = 0;
    for (int i = degree(); i >= 1; --i) {
        carry = coeffs_[static_cast<size_t>(i)] + carry * r;
        q[static_cast<size_t>(i - 1)] = carry;
    }
    if (coeffs_[0] + carry * r != 0) throw internal_error("deflate: not a root");
    return Polynomial(std::move(q));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || i == 0) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    out.residual = p;
    if (p.is_zero() || p.degree() == 0) return out;
    bool found = true;
    while (found && out.residual.degree() >= 1) {
        found = false;
        std::vector<Integer> ic = out.residual.primitive_integer_coeffs();
        // strip powers of x
        size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        for (size_t i = 0; i < low; ++i) {
            out.roots.emplace_back(0);
            out.residual = out.residual.deflate(Rational(0));
        }
        if (out.residual.degree() < 1) break;
        ic = out.residual.primitive_integer_coeffs();
        std::set<Rational> candidates;
        for (const Integer& pnum : divisors(ic.front()))
            for (const Integer& qden : divisors(ic.back())) {
                Rational c(pnum, qden);
                c.canonicalize();
                candidates.insert(c);
                candidates.insert(-c);
            }
        for (const Rational& c : candidates) {
            if (out.residual.eval(c) == 0) {
                out.roots.push_back(c);
                out.residual = out.residual.deflate(c);
                found = true;
                break;
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace confembed
