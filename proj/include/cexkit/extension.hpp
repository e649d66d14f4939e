#ifndef CEXKIT_EXTENSION_HPP
#define CEXKIT_EXTENSION_HPP

#include "cexkit/cohomology.hpp"

namespace cexkit {

/// A_theta = A + V with [x+x', y+y'] = xy + theta(x,y); the new basis
/// vectors e_{n+1}..e_{n+s} annihilate everything.
Algebra central_extend(const Algebra& a, const Cocycle& theta);

/// True iff the component classes are independent in H^2 and
/// Ann(theta) cap Ann(A) = 0 (the T_s membership condition).
bool check_ts(const Algebra& a, const Cocycle& theta);

/// Requires Ann(theta) cap Ann(A) = 0; extension has an annihilator
/// component iff the classes are dependent.
bool has_annihilator_component(const Algebra& a, const Cocycle& theta);

struct AnnDecomposition {
    Subspace lhs; // Ann(A_theta), computed on the extended algebra
    Subspace rhs; // (Ann(theta) cap Ann(A)) + V, built independently
    bool equal = false;
};
AnnDecomposition ann_extension_decomposition(const Algebra& a, const Cocycle& theta);

struct Reconstruction {
    Algebra quotient;   // A' = b / Ann(b) on an echelon complement
    Cocycle theta;      // components in the echelon basis of Ann(b)
    Mat witness;        // iso central_extend(quotient, theta) -> b
    std::vector<int> complement_indices; // 1-based standard-basis indices of the complement
};

/// Splits b as a central extension of b/Ann(b); requires Ann(b) != 0.
Reconstruction reconstruct(const Algebra& b);

/// Witness central_extend(a, theta) -> central_extend(a, theta'), where
/// theta'_t = theta_t - delta(f_t): columns map e_i to e_i - sum f_t(e_i) v_t.
Mat coboundary_shift_witness(const Algebra& a, const std::vector<RatVec>& fs);

/// Witness central_extend(a, theta) -> central_extend(a, M theta) for an
/// invertible s x s matrix M acting on components.
Mat component_change_witness(int n, const Mat& m);

/// Witness central_extend(a, pullback of theta by phi) -> central_extend(a, theta)
/// for phi in Aut(a): block diagonal phi + identity on V.
Mat automorphism_lift_witness(const Mat& phi, int s);

/// Componentwise pullback: (phi theta)_t(x,y) = theta_t(phi x, phi y).
Cocycle pullback_cocycle(const Cocycle& theta, const Mat& phi);

} // namespace cexkit

#endif
