#include "cexkit/cohomology.hpp"

namespace cexkit {

RatVec flatten_form(const BilinearForm& m)
{
    const int n = m.rows();
    RatVec v(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            v[static_cast<size_t>(i) * n + j] = m.at(i, j);
    return v;
}

BilinearForm unflatten_form(const RatVec& v, int n)
{
    BilinearForm m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = v[static_cast<size_t>(i) * n + j];
    return m;
}

BilinearForm delta(const Algebra& a, const RatVec& f)
{
    const int n = a.dim();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("delta: functional length mismatch");
    BilinearForm m(n, n);
    for (const auto& [ijk, c] : a.table())
        m.at(ijk[0] - 1, ijk[1] - 1) += c * f[ijk[2] - 1];
    return m;
}

Subspace cocycle_space(const Algebra& a)
{
    const int n = a.dim();
    // Unknowns theta_{ij}; constraint per triple (i,j,k):
    //   sum_m c_{ij}^m theta_{mk} - sum_m c_{jk}^m theta_{im} = 0.
    Mat sys(n * n * n, n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec cij = a.basis_product(i, j);
            for (int k = 1; k <= n; ++k) {
                const RatVec cjk = a.basis_product(j, k);
                const int row = ((i - 1) * n + (j - 1)) * n + (k - 1);
                for (int m = 1; m <= n; ++m) {
                    if (sgn(cij[m - 1]) != 0)
                        sys.at(row, (m - 1) * n + (k - 1)) += cij[m - 1];
                    if (sgn(cjk[m - 1]) != 0)
                        sys.at(row, (i - 1) * n + (m - 1)) -= cjk[m - 1];
                }
            }
        }
    return nullspace(sys);
}

Subspace coboundary_space(const Algebra& a)
{
    const int n = a.dim();
    std::vector<RatVec> rows;
    for (int k = 0; k < n; ++k) {
        RatVec f(n);
        f[k] = 1;
        rows.push_back(flatten_form(delta(a, f)));
    }
    return span_of(rows, n * n);
}

CohomologyBasis cohomology_basis(const Algebra& a)
{
    CohomologyBasis cb;
    cb.z2 = cocycle_space(a);
    cb.b2 = coboundary_space(a);
    if (!cb.z2.contains(cb.b2))
        throw std::runtime_error("cohomology_basis: coboundaries escape Z^2 (non-associative input?)");
    for (const RatVec& v : quotient_reps(cb.z2, cb.b2))
        cb.h2_reps.push_back(unflatten_form(v, a.dim()));
    return cb;
}

RatVec reduce_mod_b2(const CohomologyBasis& cb, const BilinearForm& theta)
{
    const RatVec target = flatten_form(theta);
    const int nn = static_cast<int>(target.size());
    const int h = static_cast<int>(cb.h2_reps.size());
    const int b = cb.b2.dim();
    Mat sys(nn, h + b);
    for (int j = 0; j < h; ++j) {
        const RatVec rep = flatten_form(cb.h2_reps[j]);
        for (int i = 0; i < nn; ++i)
            sys.at(i, j) = rep[i];
    }
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < nn; ++i)
            sys.at(i, h + j) = cb.b2.basis.at(j, i);
    const auto x = solve(sys, target);
    if (!x)
        throw std::invalid_argument("reduce_mod_b2: form is not a cocycle");
    return RatVec(x->begin(), x->begin() + h);
}

RatVec reduce_mod_b2(const Algebra& a, const BilinearForm& theta)
{
    return reduce_mod_b2(cohomology_basis(a), theta);
}

Subspace form_annihilator(const BilinearForm& m)
{
    const int n = m.rows();
    Mat sys(2 * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sys.at(i, j) = m.at(j, i); // theta(x, e_i) = 0  (rows of m^T)
            sys.at(n + i, j) = m.at(i, j); // theta(e_i, x) = 0
        }
    return nullspace(sys);
}

Subspace cocycle_annihilator(const Algebra& a, const Cocycle& theta)
{
    Subspace ann = full_space(a.dim());
    for (const auto& comp : theta.components)
        ann = ann.intersect(form_annihilator(comp));
    return ann;
}

bool is_cocycle(const Algebra& a, const BilinearForm& theta)
{
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec cij = a.basis_product(i, j);
            for (int k = 1; k <= n; ++k) {
                const RatVec cjk = a.basis_product(j, k);
                Rat lhs(0), rhs(0);
                for (int m = 1; m <= n; ++m) {
                    if (sgn(cij[m - 1]) != 0)
                        lhs += cij[m - 1] * theta.at(m - 1, k - 1);
                    if (sgn(cjk[m - 1]) != 0)
                        rhs += cjk[m - 1] * theta.at(i - 1, m - 1);
                }
                if (lhs != rhs)
                    return false;
            }
        }
    return true;
}

BilinearForm pullback_form(const BilinearForm& theta, const Mat& phi)
{
    return phi.transpose() * theta * phi;
}

} // namespace cexkit
