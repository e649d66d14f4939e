#ifndef CEXKIT_COHOMOLOGY_HPP
#define CEXKIT_COHOMOLOGY_HPP

#include "cexkit/algebra.hpp"
#include "cexkit/matrix.hpp"

#include <vector>

namespace cexkit {

/// Bilinear form in the Delta_{i,j} basis: entry (i,j) is theta(e_i, e_j).
using BilinearForm = Mat;

/// Cocycle with values in an s-dimensional space: one scalar form per
/// component, theta(x,y) = sum_t theta_t(x,y) v_t.
struct Cocycle {
    int source_dim = 0;
    std::vector<BilinearForm> components;

    int s() const { return static_cast<int>(components.size()); }
};

struct CohomologyBasis {
    Subspace z2;                        // ambient n^2
    Subspace b2;                        // subset of z2
    std::vector<BilinearForm> h2_reps;  // |reps| = dim z2 - dim b2
};

/// Flattening convention shared by every cohomology computation:
/// theta(e_i,e_j) lives at index (i-1)*n + (j-1).
RatVec flatten_form(const BilinearForm& m);
BilinearForm unflatten_form(const RatVec& v, int n);

/// Coboundary delta f with (i,j) entry f(e_i e_j) = sum_k c_{ij}^k f_k.
BilinearForm delta(const Algebra& a, const RatVec& f);

/// Z^2: solutions of theta(e_i e_j, e_k) = theta(e_i, e_j e_k).
Subspace cocycle_space(const Algebra& a);

/// B^2: span of delta(a, e_k^*).
Subspace coboundary_space(const Algebra& a);

CohomologyBasis cohomology_basis(const Algebra& a);

/// Coordinates of [theta] in the h2_reps basis; throws if theta is not a
/// cocycle. Zero vector iff theta is a coboundary.
RatVec reduce_mod_b2(const Algebra& a, const BilinearForm& theta);
RatVec reduce_mod_b2(const CohomologyBasis& cb, const BilinearForm& theta);

/// Ann(theta) = {x : theta(x, A) = theta(A, x) = 0}, intersected over the
/// components of a vector-valued cocycle.
Subspace cocycle_annihilator(const Algebra& a, const Cocycle& theta);
Subspace form_annihilator(const BilinearForm& m);

bool is_cocycle(const Algebra& a, const BilinearForm& theta);

/// theta composed with a basis change: (phi theta)(x, y) = theta(phi x, phi y).
BilinearForm pullback_form(const BilinearForm& theta, const Mat& phi);

} // namespace cexkit

#endif
