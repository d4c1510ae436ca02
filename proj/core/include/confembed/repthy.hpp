#pragma once

#include "confembed/root_datum.hpp"

#include <map>

namespace confembed {

/// Full weight system of an irreducible module, multiplicities keyed by
/// fundamental-weight coordinates.
struct WeightMultiplicities {
    std::map<IntWeight, long> entries;

    Integer total_mass() const;
};

/// Finite multiset of dominant integral highest weights.
struct IrrepSum {
    std::map<IntWeight, long> terms;
};

/// Weyl dimension formula, exact. Rejects non-dominant or non-integral
/// highest weights.
Integer weyl_dim(const RootDatum& d, const Weight& hw);
Integer weyl_dim(const RootDatum& d, const IntWeight& hw);

/// Weight multiplicities by the Freudenthal recursion, processed in
/// decreasing height order. Total mass equals weyl_dim.
WeightMultiplicities freudenthal(const RootDatum& d, const Weight& hw);
WeightMultiplicities freudenthal(const RootDatum& d, const IntWeight& hw);

/// Klimyk tensor decomposition over the smaller factor's weight system.
/// Weights landing on a wall of the dot action contribute nothing.
IrrepSum tensor_decompose(const RootDatum& d, const Weight& a, const Weight& b);
IrrepSum tensor_decompose(const RootDatum& d, const IntWeight& a, const IntWeight& b);

/// (lambda, lambda + 2 rho) under the normalized form; defined for any
/// weight, rational coordinates included.
Rational casimir_value(const RootDatum& d, const Weight& lambda);

/// Eq-style Dynkin index: sum over terms of
/// mult * dim(V)/dim(g) * (lambda,lambda+2rho)/(theta,theta+2rho).
/// Additive over direct sums; the adjoint has index 1.
Rational dynkin_index(const RootDatum& d, const IrrepSum& rep);

}  // namespace confembed
