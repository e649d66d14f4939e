#include "cexkit/extension.hpp"

namespace cexkit {

Algebra central_extend(const Algebra& a, const Cocycle& theta)
{
    const int n = a.dim();
    const int s = theta.s();
    if (theta.source_dim != n)
        throw std::invalid_argument("central_extend: cocycle dimension mismatch");
    for (const auto& comp : theta.components)
        if (!is_cocycle(a, comp))
            throw std::invalid_argument("central_extend: component is not a cocycle");
    Algebra ext(n + s);
    for (const auto& [ijk, c] : a.table())
        ext.set(ijk[0], ijk[1], ijk[2], c);
    for (int t = 0; t < s; ++t)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                ext.set(i, j, n + 1 + t, theta.components[t].at(i - 1, j - 1));
    return ext;
}

namespace {

bool classes_independent(const Algebra& a, const Cocycle& theta)
{
    const CohomologyBasis cb = cohomology_basis(a);
    std::vector<RatVec> coords;
    for (const auto& comp : theta.components)
        coords.push_back(reduce_mod_b2(cb, comp));
    return span_of(coords, static_cast<int>(cb.h2_reps.size())).dim() == theta.s();
}

} // namespace

bool check_ts(const Algebra& a, const Cocycle& theta)
{
    if (!classes_independent(a, theta))
        return false;
    const Subspace meet = cocycle_annihilator(a, theta).intersect(annihilator(a).two_sided);
    return meet.dim() == 0;
}

bool has_annihilator_component(const Algebra& a, const Cocycle& theta)
{
    const Subspace meet = cocycle_annihilator(a, theta).intersect(annihilator(a).two_sided);
    if (meet.dim() != 0)
        throw std::invalid_argument(
            "has_annihilator_component: requires Ann(theta) cap Ann(A) = 0");
    return !classes_independent(a, theta);
}

AnnDecomposition ann_extension_decomposition(const Algebra& a, const Cocycle& theta)
{
    const int n = a.dim();
    const int s = theta.s();
    AnnDecomposition d;
    d.lhs = annihilator(central_extend(a, theta)).two_sided;

    const Subspace meet = cocycle_annihilator(a, theta).intersect(annihilator(a).two_sided);
    std::vector<RatVec> rows;
    for (int i = 0; i < meet.dim(); ++i) {
        RatVec v(n + s);
        for (int j = 0; j < n; ++j)
            v[j] = meet.basis.at(i, j);
        rows.push_back(std::move(v));
    }
    for (int t = 0; t < s; ++t) {
        RatVec v(n + s);
        v[n + t] = 1;
        rows.push_back(std::move(v));
    }
    d.rhs = span_of(rows, n + s);
    d.equal = (d.lhs == d.rhs);
    return d;
}

Reconstruction reconstruct(const Algebra& b)
{
    const int n = b.dim();
    const Subspace ann = annihilator(b).two_sided;
    const int s = ann.dim();
    if (s == 0)
        throw std::invalid_argument("reconstruct: zero annihilator");

    // Echelon complement in index order: standard basis vectors independent
    // modulo Ann(b).
    Reconstruction r;
    Subspace acc = ann;
    for (int i = 1; i <= n; ++i) {
        RatVec e(n);
        e[i - 1] = 1;
        if (!acc.contains(e)) {
            r.complement_indices.push_back(i);
            acc = acc.sum(span_of({e}, n));
        }
    }
    const int m = static_cast<int>(r.complement_indices.size()); // = n - s

    // Coordinates: x = sum_j c_j comp_j + sum_t d_t ann_t, solved exactly.
    Mat basis(n, n);
    for (int j = 0; j < m; ++j)
        basis.at(r.complement_indices[j] - 1, j) = 1;
    for (int t = 0; t < s; ++t)
        for (int i = 0; i < n; ++i)
            basis.at(i, m + t) = ann.basis.at(t, i);
    const Mat to_coords = inverse(basis);

    r.quotient = Algebra(m);
    r.theta.source_dim = m;
    r.theta.components.assign(s, BilinearForm(m, m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const RatVec prod =
                b.basis_product(r.complement_indices[i - 1], r.complement_indices[j - 1]);
            const RatVec coords = to_coords.apply(prod);
            for (int k = 1; k <= m; ++k)
                r.quotient.set(i, j, k, coords[k - 1]);
            for (int t = 0; t < s; ++t)
                r.theta.components[t].at(i - 1, j - 1) = coords[m + t];
        }

    // Witness columns: complement vectors then annihilator basis, in b-coords.
    r.witness = basis;
    return r;
}

Mat coboundary_shift_witness(const Algebra& a, const std::vector<RatVec>& fs)
{
    const int n = a.dim();
    const int s = static_cast<int>(fs.size());
    Mat w = Mat::identity(n + s);
    for (int t = 0; t < s; ++t) {
        if (static_cast<int>(fs[t].size()) != n)
            throw std::invalid_argument("coboundary_shift_witness: functional length");
        for (int i = 0; i < n; ++i)
            w.at(n + t, i) = -fs[t][i];
    }
    return w;
}

Mat component_change_witness(int n, const Mat& m)
{
    const int s = m.rows();
    if (m.cols() != s)
        throw std::invalid_argument("component_change_witness: not square");
    Mat w = Mat::identity(n + s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            w.at(n + i, n + j) = m.at(i, j);
    return w;
}

Mat automorphism_lift_witness(const Mat& phi, int s)
{
    const int n = phi.rows();
    Mat w = Mat::identity(n + s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.at(i, j) = phi.at(i, j);
    return w;
}

Cocycle pullback_cocycle(const Cocycle& theta, const Mat& phi)
{
    Cocycle r;
    r.source_dim = theta.source_dim;
    for (const auto& comp : theta.components)
        r.components.push_back(pullback_form(comp, phi));
    return r;
}

} // namespace cexkit
