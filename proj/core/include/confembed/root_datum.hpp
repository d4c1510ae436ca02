#pragma once

#include "confembed/lie_type.hpp"
#include "confembed/weight.hpp"

#include <memory>
#include <vector>

namespace confembed {

/// A root in three coordinate systems at once: the ambient rational
/// realization, nonnegative-integer coefficients on the simple roots, and
/// fundamental-weight coordinates <beta, alpha_i^vee>.
struct Root {
    std::vector<Rational> ambient;
    std::vector<int> simple_coeffs;
    IntWeight fw;
    int height = 0;
};

/// Root/weight combinatorics of a simple Lie algebra with the invariant
/// form normalized so long roots have square length 2.
///
/// Realizations are the standard orthogonal ones with exact rational
/// coordinates: epsilon-coordinates for the classical families, the
/// published rational realizations for E (inside R^8), F4 and G2. The form
/// is scale * (standard dot product) with scale 1 (A,B,D,E,F), 1/2 (C) or
/// 1/3 (G). Simple roots follow Bourbaki numbering throughout.
///
/// Immutable after construction; safe for concurrent reads.
class RootDatum {
public:
    static std::shared_ptr<const RootDatum> build(LieType t);

    LieType type() const { return type_; }
    int rank() const { return static_cast<int>(simple_ambient_.size()); }
    int ambient_dim() const { return static_cast<int>(simple_ambient_[0].size()); }
    const Rational& form_scale() const { return form_scale_; }

    const std::vector<std::vector<Rational>>& simple_roots() const { return simple_ambient_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    /// cartan(i,j) = <alpha_i, alpha_j^vee>; row i gives alpha_i in
    /// fundamental-weight coordinates.
    int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    const Root& theta() const { return positive_[theta_index_]; }
    const std::vector<int>& marks() const { return theta().simple_coeffs; }
    /// <omega_i, theta^vee> for each i (the comarks).
    const std::vector<Integer>& comarks() const { return comarks_; }
    const Integer& dual_coxeter() const { return dual_coxeter_; }
    Integer dim() const { return Integer(2 * positive_.size()) + rank(); }
    Weight rho() const;

    /// Normalized invariant form on fundamental-weight coordinates.
    Rational inner(const Weight& x, const Weight& y) const;
    /// Ambient form: scale * dot.
    Rational inner_ambient(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    /// <x, beta^vee> for an ambient vector beta.
    Rational coroot_pairing(const std::vector<Rational>& x, const std::vector<Rational>& beta) const;

    const std::vector<std::vector<Rational>>& fundamental_weights() const { return fw_ambient_; }
    std::vector<Rational> to_ambient(const Weight& w) const;

    /// Integer-rescaled Gram matrix of the fundamental weights together
    /// with the common denominator: gram(i,j) = gram_denom * (w_i, w_j).
    const std::vector<std::vector<Integer>>& gram_scaled() const { return gram_scaled_; }
    const Integer& gram_denom() const { return gram_denom_; }

    struct DominantRep {
        Weight weight;
        int sign;    // det of the Weyl element used; 0 when x+rho hits a wall
        int length;  // number of simple reflections applied
    };
    /// Unique dominant representative of the Weyl dot-orbit of x.
    /// Requires x integral.
    DominantRep dominant_representative(const Weight& x) const;

    /// Fast path on integral coordinates: dot-dominant representative of x,
    /// sign 0 when x+rho lands on a wall (weight then left unspecified).
    std::pair<IntWeight, int> dominant_dot(IntWeight x) const;

private:
    RootDatum() = default;
    void construct(LieType t);
    void close_positive_roots();
    void compute_fundamental_weights();

    LieType type_{Family::A, 1};
    Rational form_scale_{1};
    std::vector<std::vector<Rational>> simple_ambient_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    size_t theta_index_ = 0;
    std::vector<std::vector<Rational>> fw_ambient_;
    std::vector<std::vector<Rational>> gram_;  // (w_i, w_j)
    std::vector<std::vector<Integer>> gram_scaled_;
    Integer gram_denom_ = 1;
    std::vector<Integer> comarks_;
    Integer dual_coxeter_ = 0;
};

}  // namespace confembed
