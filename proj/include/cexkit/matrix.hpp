#ifndef CEXKIT_MATRIX_HPP
#define CEXKIT_MATRIX_HPP

#include "cexkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cexkit {

/// Dense row-major matrix over Q. Indices are 0-based here; the 1-based
/// convention of structure-constant tables lives in the algebra layer.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("Mat: negative shape");
    }

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<RatVec>& rows)
    {
        if (rows.empty())
            return Mat(0, 0);
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols())
                throw std::invalid_argument("Mat::from_rows: ragged rows");
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatVec row(int i) const
    {
        RatVec r(cols_);
        for (int j = 0; j < cols_; ++j)
            r[j] = at(i, j);
        return r;
    }

    RatVec col(int j) const
    {
        RatVec c(rows_);
        for (int i = 0; i < rows_; ++i)
            c[i] = at(i, j);
        return c;
    }

    void set_row(int i, const RatVec& r)
    {
        for (int j = 0; j < cols_; ++j)
            at(i, j) = r[j];
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const
    {
        for (const Rat& q : a_)
            if (sgn(q) != 0)
                return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat operator+(const Mat& o) const
    {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const
    {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Mat::operator*: shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = at(i, k);
                if (sgn(x) == 0)
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    Mat scaled(const Rat& c) const
    {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = c * a_[k];
        return r;
    }

    RatVec apply(const RatVec& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Mat::apply: length mismatch");
        RatVec r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (sgn(at(i, j)) != 0)
                    r[i] += at(i, j) * v[j];
        return r;
    }

private:
    void require_same_shape(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

inline RatVec vec_add(const RatVec& x, const RatVec& y)
{
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] + y[i];
    return r;
}

inline RatVec vec_scaled(const RatVec& x, const Rat& c)
{
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r[i] = c * x[i];
    return r;
}

inline bool vec_is_zero(const RatVec& x)
{
    for (const Rat& q : x)
        if (sgn(q) != 0)
            return false;
    return true;
}

/// Canonical linear subspace of Q^ambient: basis rows in reduced row-echelon
/// form (pivots 1, pivot columns cleared, zero rows dropped). Two subspaces
/// are equal iff their representations compare equal.
struct Subspace {
    int ambient = 0;
    Mat basis; // dim x ambient, RREF

    int dim() const { return basis.rows(); }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& x, const Subspace& y)
    {
        return x.ambient == y.ambient && x.basis == y.basis;
    }
};

/// Reduced row echelon form of the row span. Pivot rule: leftmost nonzero
/// column, first nonzero row, pivot normalized to 1.
inline Subspace row_reduce(const Mat& m)
{
    Mat w = m;
    const int rows = w.rows(), cols = w.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(w.at(i, col)) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j)
                swap(w.at(pivot, j), w.at(rank, j));
        const Rat inv = 1 / w.at(rank, col);
        for (int j = col; j < cols; ++j)
            w.at(rank, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || sgn(w.at(i, col)) == 0)
                continue;
            const Rat f = w.at(i, col);
            for (int j = col; j < cols; ++j)
                w.at(i, j) -= f * w.at(rank, j);
        }
        ++rank;
    }
    Subspace s;
    s.ambient = cols;
    s.basis = Mat(rank, cols);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < cols; ++j)
            s.basis.at(i, j) = w.at(i, j);
    return s;
}

inline int rank(const Mat& m) { return row_reduce(m).dim(); }

/// Basis of {v : m v = 0}, returned in canonical echelon form.
inline Subspace nullspace(const Mat& m)
{
    const Subspace r = row_reduce(m);
    const int cols = m.cols();
    std::vector<int> pivot_col(r.dim());
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < r.dim(); ++i) {
        int j = 0;
        while (j < cols && sgn(r.basis.at(i, j)) == 0)
            ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    std::vector<RatVec> kernel;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j])
            continue;
        RatVec v(cols);
        v[j] = 1;
        for (int i = 0; i < r.dim(); ++i)
            v[pivot_col[i]] = -r.basis.at(i, j);
        kernel.push_back(std::move(v));
    }
    Subspace s = row_reduce(Mat::from_rows(kernel));
    s.ambient = cols;
    return s;
}

inline bool Subspace::contains(const RatVec& v) const
{
    if (static_cast<int>(v.size()) != ambient)
        throw std::invalid_argument("Subspace::contains: length mismatch");
    RatVec w = v;
    for (int i = 0; i < dim(); ++i) {
        int p = 0;
        while (p < ambient && sgn(basis.at(i, p)) == 0)
            ++p;
        if (p == ambient)
            continue;
        if (sgn(w[p]) != 0) {
            const Rat f = w[p];
            for (int j = 0; j < ambient; ++j)
                w[j] -= f * basis.at(i, j);
        }
    }
    return vec_is_zero(w);
}

inline bool Subspace::contains(const Subspace& other) const
{
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis.row(i)))
            return false;
    return true;
}

inline Subspace Subspace::sum(const Subspace& other) const
{
    if (ambient != other.ambient)
        throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<RatVec> rows;
    for (int i = 0; i < dim(); ++i)
        rows.push_back(basis.row(i));
    for (int i = 0; i < other.dim(); ++i)
        rows.push_back(other.basis.row(i));
    Subspace s = row_reduce(Mat::from_rows(rows));
    s.ambient = ambient;
    return s;
}

/// Intersection via the kernel trick: x in U cap W iff x = u = w with
/// coefficient vector in the nullspace of [U^T | -W^T]-style stacking.
inline Subspace Subspace::intersect(const Subspace& other) const
{
    if (ambient != other.ambient)
        throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    const int du = dim(), dw = other.dim();
    if (du == 0 || dw == 0) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat(0, ambient);
        return s;
    }
    Mat sys(ambient, du + dw);
    for (int j = 0; j < du; ++j)
        for (int r = 0; r < ambient; ++r)
            sys.at(r, j) = basis.at(j, r);
    for (int j = 0; j < dw; ++j)
        for (int r = 0; r < ambient; ++r)
            sys.at(r, du + j) = -other.basis.at(j, r);
    const Subspace ker = nullspace(sys);
    std::vector<RatVec> pts;
    for (int i = 0; i < ker.dim(); ++i) {
        RatVec x(ambient);
        for (int j = 0; j < du; ++j) {
            const Rat& c = ker.basis.at(i, j);
            if (sgn(c) == 0)
                continue;
            for (int r = 0; r < ambient; ++r)
                x[r] += c * basis.at(j, r);
        }
        pts.push_back(std::move(x));
    }
    Subspace s = row_reduce(Mat::from_rows(pts));
    s.ambient = ambient;
    return s;
}

/// Representatives of whole/sub: the first echelon basis vectors of `whole`
/// that stay independent modulo `sub`. Throws if sub is not contained.
inline std::vector<RatVec> quotient_reps(const Subspace& whole, const Subspace& sub)
{
    if (!whole.contains(sub))
        throw std::invalid_argument("quotient_reps: sub not contained in whole");
    std::vector<RatVec> reps;
    Subspace acc = sub;
    for (int i = 0; i < whole.dim(); ++i) {
        RatVec v = whole.basis.row(i);
        if (acc.contains(v))
            continue;
        reps.push_back(v);
        Subspace line;
        line.ambient = whole.ambient;
        line.basis = Mat::from_rows({v});
        line = row_reduce(line.basis);
        acc = acc.sum(line);
    }
    return reps;
}

/// One solution x of A x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve(const Mat& a, const RatVec& b)
{
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve: shape mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Subspace r = row_reduce(aug);
    RatVec x(a.cols());
    for (int i = 0; i < r.dim(); ++i) {
        int p = 0;
        while (p <= a.cols() && sgn(r.basis.at(i, p)) == 0)
            ++p;
        if (p == a.cols())
            return std::nullopt; // row (0 ... 0 | 1)
        x[p] = r.basis.at(i, a.cols());
    }
    return x;
}

inline std::optional<Mat> try_inverse(const Mat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("try_inverse: not square");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const Subspace r = row_reduce(aug);
    if (r.dim() != n)
        return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.basis.at(i, j) != Rat(i == j ? 1 : 0))
                return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = r.basis.at(i, n + j);
    return inv;
}

inline Mat inverse(const Mat& m)
{
    auto inv = try_inverse(m);
    if (!inv)
        throw std::invalid_argument("inverse: singular matrix");
    return *inv;
}

inline Subspace full_space(int n)
{
    Subspace s;
    s.ambient = n;
    s.basis = Mat::identity(n);
    return s;
}

inline Subspace zero_space(int n)
{
    Subspace s;
    s.ambient = n;
    s.basis = Mat(0, n);
    return s;
}

/// Span of a list of vectors (canonical form).
inline Subspace span_of(const std::vector<RatVec>& vectors, int ambient)
{
    if (vectors.empty())
        return zero_space(ambient);
    Subspace s = row_reduce(Mat::from_rows(vectors));
    s.ambient = ambient;
    return s;
}

} // namespace cexkit

#endif
