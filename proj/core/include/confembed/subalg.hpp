#pragma once

#include "confembed/repthy.hpp"
#include "confembed/root_datum.hpp"

#include <memory>
#include <string>
#include <vector>

namespace confembed {

/// One simple ideal of an equal-rank reductive subalgebra.
struct Ideal {
    LieType type;
    /// Embedding index 2/(theta_j, theta_j) in the ambient normalized form.
    Rational d;
    std::shared_ptr<const RootDatum> datum;
    /// Induced simple roots as indices into the ambient positive roots,
    /// ordered to match the Bourbaki numbering of `datum`.
    std::vector<size_t> simple_roots;
};

/// Irreducible component of p = orthocomplement of g0, as per-ideal highest
/// weights plus the center charge (the eigenvalue of the grading coweight).
struct PComponent {
    int eigen_index;                       // 1..m-1, or 1/2 in the center case
    std::vector<IntWeight> ideal_weights;  // one block per ideal
    long center_charge = 0;                // 0 when the center is trivial
    Integer dim;                           // = number of roots in the class
};

struct PModule {
    std::vector<PComponent> components;
};

/// Equal-rank reductive subalgebra obtained by removing one node from the
/// extended Dynkin diagram. Nodes of mark 1 yield a one-dimensional center
/// (simple roots = Pi minus the node); nodes of prime mark >= 2 yield a
/// semisimple fixed-point subalgebra. Composite marks are retained only
/// behind the non-maximal flag and are never classified.
class EqualRankSubalgebra {
public:
    static std::vector<EqualRankSubalgebra> enumerate_maximal(LieType g);
    static std::vector<EqualRankSubalgebra> enumerate_removals(LieType g, bool include_nonmaximal);
    /// The subalgebra obtained by removing `node` (1-based, Bourbaki).
    static EqualRankSubalgebra from_removed_node(LieType g, int node);

    LieType ambient_type() const { return ambient_->type(); }
    const RootDatum& ambient() const { return *ambient_; }
    std::shared_ptr<const RootDatum> ambient_ptr() const { return ambient_; }
    int removed_node() const { return removed_node_; }
    int mark() const { return mark_; }
    /// Order m of the defining automorphism (2 in the center case).
    int automorphism_order() const { return auto_order_; }
    int center_dim() const { return center_dim_; }
    bool is_maximal() const { return maximal_; }
    bool alpha_p_is_long() const { return alpha_p_long_; }
    const std::vector<Ideal>& ideals() const { return ideals_; }
    const std::string& name() const { return name_; }

    Integer dim_g0() const;
    const Integer& dim_p() const { return dim_p_; }
    /// (zeta, zeta) = 2 h^vee / dim p; only defined when center_dim = 1.
    Rational zeta_norm() const;

    const PModule& p_module() const { return p_; }

    /// Restriction of an ambient-space vector to ideal j's fundamental-weight
    /// coordinates (pairings against the induced simple coroots).
    IntWeight restrict_to_ideal(const std::vector<Rational>& ambient_vec, size_t j) const;

private:
    std::shared_ptr<const RootDatum> ambient_;
    int removed_node_ = 0;
    int mark_ = 0;
    int auto_order_ = 0;
    int center_dim_ = 0;
    bool maximal_ = false;
    bool alpha_p_long_ = false;
    std::vector<Ideal> ideals_;
    std::string name_;
    Integer dim_p_ = 0;
    PModule p_;

    void build_ideals();
    void build_p_module();
};

/// d_j (Eq-style embedding index); j indexes ideals(). The center is not an
/// ideal here; its conventional index is 1.
Rational embedding_index(const EqualRankSubalgebra& sub, size_t j);

PModule decompose_p(const EqualRankSubalgebra& sub);

/// Dynkin index of p as a module over ideal j, computed through the weight
/// data of the PComponents; equals d_j h^vee / h_j^vee - 1.
Rational index_of_p(const EqualRankSubalgebra& sub, size_t j);

/// Eigenvalue of the kappa-normalized Casimir of g0 on p. Must be 1/m and
/// independent of the component; a dependence is reported as internal_error.
Rational casimir_eigenvalue_on_p(const EqualRankSubalgebra& sub);

}  // namespace confembed
