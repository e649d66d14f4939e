#include "cexkit/algebra.hpp"

#include "cexkit/cohomology.hpp"

#include <sstream>

namespace cexkit {

std::string shape_name(Shape s)
{
    switch (s) {
    case Shape::NullFiliform: return "null-filiform";
    case Shape::Filiform: return "filiform";
    case Shape::QuasiFiliform: return "quasi-filiform";
    default: return "other";
    }
}

std::vector<std::array<int, 3>> check_associative(const Algebra& a)
{
    std::vector<std::array<int, 3>> bad;
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec ij = a.basis_product(i, j);
            for (int k = 1; k <= n; ++k) {
                RatVec lhs(n), rhs(n);
                for (int m = 1; m <= n; ++m) {
                    if (sgn(ij[m - 1]) != 0) {
                        const RatVec mk = a.basis_product(m, k);
                        for (int t = 0; t < n; ++t)
                            lhs[t] += ij[m - 1] * mk[t];
                    }
                }
                const RatVec jk = a.basis_product(j, k);
                for (int m = 1; m <= n; ++m) {
                    if (sgn(jk[m - 1]) != 0) {
                        const RatVec im = a.basis_product(i, m);
                        for (int t = 0; t < n; ++t)
                            rhs[t] += jk[m - 1] * im[t];
                    }
                }
                if (lhs != rhs)
                    bad.push_back({i, j, k});
            }
        }
    return bad;
}

namespace {

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& w)
{
    std::vector<RatVec> prods;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j)
            prods.push_back(a.product(u.basis.row(i), w.basis.row(j)));
    return span_of(prods, a.dim());
}

} // namespace

std::vector<Subspace> power_filtration(const Algebra& a)
{
    std::vector<Subspace> powers;
    powers.push_back(full_space(a.dim()));
    for (;;) {
        const int i = static_cast<int>(powers.size()); // computing A^{i+1}
        Subspace next = zero_space(a.dim());
        for (int k = 1; k <= i; ++k)
            next = next.sum(product_space(a, powers[k - 1], powers[i - k]));
        if (next == powers.back())
            break;
        powers.push_back(next);
        if (next.dim() == 0)
            break;
    }
    return powers;
}

std::optional<int> nilpotency_class(const Algebra& a)
{
    const auto powers = power_filtration(a);
    for (size_t i = 0; i < powers.size(); ++i)
        if (powers[i].dim() == 0)
            return static_cast<int>(i) + 1;
    return std::nullopt;
}

Annihilators annihilator(const Algebra& a)
{
    const int n = a.dim();
    // Left annihilator {x : xA = 0}: kernel of the stacked maps x -> x e_j;
    // right annihilator {x : Ax = 0} symmetrically.
    Mat sys_xA(n * n, n), sys_Ax(n * n, n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            const RatVec ij = a.basis_product(i, j); // e_i e_j: column i of x -> x e_j
            const RatVec ji = a.basis_product(j, i); // e_j e_i: column i of x -> e_j x
            for (int k = 0; k < n; ++k) {
                sys_xA.at((j - 1) * n + k, i - 1) = ij[k];
                sys_Ax.at((j - 1) * n + k, i - 1) = ji[k];
            }
        }
    Annihilators r;
    r.left = nullspace(sys_xA);
    r.right = nullspace(sys_Ax);
    r.two_sided = r.left.intersect(r.right);
    return r;
}

Shape shape_classify(const Algebra& a)
{
    if (!nilpotency_class(a))
        throw std::invalid_argument("shape_classify: algebra is not nilpotent");
    const int n = a.dim();
    const auto powers = power_filtration(a);
    auto dim_of = [&](int i) { // dim A^i, 1-based
        if (i <= static_cast<int>(powers.size()))
            return powers[i - 1].dim();
        return powers.back().dim();
    };
    bool null_filiform = true;
    for (int i = 1; i <= n + 1; ++i)
        if (dim_of(i) != n + 1 - i)
            null_filiform = false;
    if (null_filiform)
        return Shape::NullFiliform;
    bool filiform = true;
    for (int i = 2; i <= n; ++i)
        if (dim_of(i) != n - i)
            filiform = false;
    if (filiform)
        return Shape::Filiform;
    if (n >= 2 && dim_of(n - 2) != 0 && dim_of(n - 1) == 0)
        return Shape::QuasiFiliform;
    return Shape::Other;
}

namespace {

/// Adapted basis for the power filtration: for each grade i, echelon
/// representatives of A^i mod A^{i+1}, in index order. Returns the basis
/// vectors together with their grades.
void adapted_basis(const Algebra& a, std::vector<RatVec>& vectors, std::vector<int>& grades)
{
    auto powers = power_filtration(a);
    if (powers.back().dim() != 0)
        powers.push_back(zero_space(a.dim())); // stabilized nonzero tail guard
    for (size_t i = 0; i + 1 < powers.size(); ++i) {
        for (const RatVec& v : quotient_reps(powers[i], powers[i + 1])) {
            vectors.push_back(v);
            grades.push_back(static_cast<int>(i) + 1);
        }
    }
}

} // namespace

Algebra graded_algebra(const Algebra& a)
{
    if (!nilpotency_class(a))
        throw std::invalid_argument("graded_algebra: algebra is not nilpotent");
    const int n = a.dim();
    std::vector<RatVec> basis;
    std::vector<int> grades;
    adapted_basis(a, basis, grades);
    if (static_cast<int>(basis.size()) != n)
        throw std::runtime_error("graded_algebra: adapted basis does not span");

    Mat t(n, n); // columns = adapted basis vectors in the original coordinates
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            t.at(i, j) = basis[j][i];
    const Mat tinv = inverse(t);

    Algebra gr(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec prod = a.product(basis[i - 1], basis[j - 1]);
            const RatVec coords = tinv.apply(prod); // in the adapted basis
            const int target = grades[i - 1] + grades[j - 1];
            for (int k = 1; k <= n; ++k)
                if (grades[k - 1] == target) // projection onto grade i+j
                    gr.set(i, j, k, coords[k - 1]);
        }
    return gr;
}

Algebra transport(const Algebra& a, const Mat& p)
{
    const int n = a.dim();
    if (p.rows() != n || p.cols() != n)
        throw std::invalid_argument("transport: shape mismatch");
    const auto pinv = try_inverse(p);
    if (!pinv)
        throw std::invalid_argument("transport: singular basis change");
    Algebra b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec prod = a.product(p.col(i - 1), p.col(j - 1));
            const RatVec coords = pinv->apply(prod);
            for (int k = 1; k <= n; ++k)
                b.set(i, j, k, coords[k - 1]);
        }
    return b;
}

bool is_hom_witness(const Algebra& a, const Algebra& b, const Mat& p)
{
    if (a.dim() != b.dim() || p.rows() != a.dim() || p.cols() != a.dim())
        return false;
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const RatVec lhs = p.apply(a.basis_product(i, j));
            const RatVec rhs = b.product(p.col(i - 1), p.col(j - 1));
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool is_iso_witness(const Algebra& a, const Algebra& b, const Mat& p)
{
    return is_hom_witness(a, b, p) && try_inverse(p).has_value();
}

GeneratorExtension extend_generator_images(const Algebra& a,
                                           const std::vector<RatVec>& gens,
                                           const std::vector<RatVec>& images,
                                           const Algebra& b)
{
    GeneratorExtension result;
    if (gens.size() != images.size()) {
        result.failure = "generator/image count mismatch";
        return result;
    }
    const int n = a.dim();
    std::vector<RatVec> span_vecs, span_imgs;
    Subspace span = zero_space(n);

    auto image_of = [&](const RatVec& v) -> std::optional<RatVec> {
        // v = sum c_i span_vecs[i]  =>  image = sum c_i span_imgs[i]
        Mat sys(n, static_cast<int>(span_vecs.size()));
        for (size_t j = 0; j < span_vecs.size(); ++j)
            for (int i = 0; i < n; ++i)
                sys.at(i, static_cast<int>(j)) = span_vecs[j][i];
        const auto c = solve(sys, v);
        if (!c)
            return std::nullopt;
        RatVec img(b.dim());
        for (size_t j = 0; j < span_vecs.size(); ++j)
            img = vec_add(img, vec_scaled(span_imgs[j], (*c)[j]));
        return img;
    };

    auto add_pair = [&](const RatVec& v, const RatVec& img) -> bool {
        if (span.contains(v)) {
            const auto existing = image_of(v);
            if (!existing || *existing != img) {
                result.failure = "inconsistent propagation";
                return false;
            }
            return true;
        }
        span_vecs.push_back(v);
        span_imgs.push_back(img);
        span = span.sum(span_of({v}, n));
        return true;
    };

    for (size_t g = 0; g < gens.size(); ++g)
        if (!add_pair(gens[g], images[g]))
            return result;

    // Close under products until the span stabilizes.
    for (bool grew = true; grew;) {
        grew = false;
        const size_t count = span_vecs.size();
        for (size_t i = 0; i < count && result.failure.empty(); ++i)
            for (size_t j = 0; j < count && result.failure.empty(); ++j) {
                const RatVec prod = a.product(span_vecs[i], span_vecs[j]);
                if (vec_is_zero(prod))
                    continue;
                const bool fresh = !span.contains(prod);
                if (!add_pair(prod, b.product(span_imgs[i], span_imgs[j])))
                    return result;
                if (fresh)
                    grew = true;
            }
        if (!result.failure.empty())
            return result;
    }

    if (span.dim() != n) {
        result.failure = "generators do not generate (closure dim "
                         + std::to_string(span.dim()) + " < " + std::to_string(n) + ")";
        return result;
    }
    if (span_of(span_imgs, b.dim()).dim() != b.dim()) {
        result.failure = "images do not generate (image closure dim "
                         + std::to_string(span_of(span_imgs, b.dim()).dim()) + " < "
                         + std::to_string(b.dim()) + ")";
        return result;
    }

    // Matrix M with M * span_vecs[j] = span_imgs[j]: M = Imgs * Vecs^{-1}.
    Mat vecs(n, n), imgs(b.dim(), n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            vecs.at(i, j) = span_vecs[j][i];
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < b.dim(); ++i)
            imgs.at(i, j) = span_imgs[j][i];
    result.matrix = imgs * inverse(vecs);
    return result;
}

std::vector<RatVec> generator_complement(const Algebra& a)
{
    const auto powers = power_filtration(a);
    const Subspace a2 = powers.size() > 1 ? powers[1] : zero_space(a.dim());
    std::vector<RatVec> gens;
    Subspace acc = a2;
    for (int i = 0; i < a.dim(); ++i) {
        RatVec e(a.dim());
        e[i] = 1;
        if (!acc.contains(e)) {
            gens.push_back(e);
            acc = acc.sum(span_of({e}, a.dim()));
        }
    }
    return gens;
}

Fingerprint fingerprint(const Algebra& a)
{
    Fingerprint f;
    const auto powers = power_filtration(a);
    for (const auto& p : powers)
        f.power_dims.push_back(p.dim());
    const auto ann = annihilator(a);
    f.ann_dim = ann.two_sided.dim();
    f.left_ann_dim = ann.left.dim();
    f.right_ann_dim = ann.right.dim();
    f.square_dim = powers.size() > 1 ? powers[1].dim() : 0;

    const int n = a.dim();
    std::vector<RatVec> comms;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RatVec c = a.basis_product(i, j);
            const RatVec ji = a.basis_product(j, i);
            for (int k = 0; k < n; ++k)
                c[k] -= ji[k];
            comms.push_back(std::move(c));
        }
    f.comm_rank = span_of(comms, n).dim();

    const CohomologyBasis cb = cohomology_basis(a);
    f.cohom_dims = {cb.z2.dim(), cb.b2.dim(), static_cast<int>(cb.h2_reps.size())};
    return f;
}

std::string Fingerprint::str() const
{
    std::ostringstream os;
    os << "powers(";
    for (size_t i = 0; i < power_dims.size(); ++i)
        os << (i ? "," : "") << power_dims[i];
    os << ") ann=" << ann_dim << " lann=" << left_ann_dim << " rann=" << right_ann_dim
       << " sq=" << square_dim << " comm=" << comm_rank << " cohom=(" << cohom_dims[0] << ","
       << cohom_dims[1] << "," << cohom_dims[2] << ")";
    return os.str();
}

} // namespace cexkit
