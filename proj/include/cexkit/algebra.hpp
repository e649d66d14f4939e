#ifndef CEXKIT_ALGEBRA_HPP
#define CEXKIT_ALGEBRA_HPP

#include "cexkit/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cexkit {

/// Structure-constant algebra: e_i e_j = sum_k c_{ij}^k e_k with 1-based
/// indices in the table. Associativity is not enforced by the type; it is
/// checked by check_associative so that extension candidates can be probed.
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(int dim) : dim_(dim)
    {
        if (dim < 0)
            throw std::invalid_argument("Algebra: negative dimension");
    }

    int dim() const { return dim_; }

    const std::map<std::array<int, 3>, Rat>& table() const { return table_; }

    void set(int i, int j, int k, const Rat& c)
    {
        check_index(i);
        check_index(j);
        check_index(k);
        if (sgn(c) == 0)
            table_.erase({i, j, k});
        else
            table_[{i, j, k}] = c;
    }

    Rat coeff(int i, int j, int k) const
    {
        auto it = table_.find({i, j, k});
        return it == table_.end() ? Rat(0) : it->second;
    }

    /// e_i * e_j as a coordinate vector (0-based storage).
    RatVec basis_product(int i, int j) const
    {
        RatVec r(dim_);
        auto it = table_.lower_bound({i, j, 1});
        for (; it != table_.end() && it->first[0] == i && it->first[1] == j; ++it)
            r[it->first[2] - 1] = it->second;
        return r;
    }

    /// Bilinear extension of the table.
    RatVec product(const RatVec& u, const RatVec& v) const
    {
        if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("Algebra::product: length mismatch");
        RatVec r(dim_);
        for (const auto& [ijk, c] : table_) {
            const Rat& ui = u[ijk[0] - 1];
            if (sgn(ui) == 0)
                continue;
            const Rat& vj = v[ijk[1] - 1];
            if (sgn(vj) == 0)
                continue;
            r[ijk[2] - 1] += c * ui * vj;
        }
        return r;
    }

    friend bool operator==(const Algebra& a, const Algebra& b)
    {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    void check_index(int i) const
    {
        if (i < 1 || i > dim_)
            throw std::invalid_argument("Algebra: index out of range");
    }

    int dim_ = 0;
    std::map<std::array<int, 3>, Rat> table_;
};

/// Basis-invariant data separating non-isomorphic algebras cheaply.
struct Fingerprint {
    std::vector<int> power_dims;      // dim A^1, A^2, ... down to 0 or stabilization
    int ann_dim = 0;
    int left_ann_dim = 0;
    int right_ann_dim = 0;
    int square_dim = 0;               // dim A^2
    int comm_rank = 0;                // rank of the (e_i e_j - e_j e_i) stack
    std::array<int, 3> cohom_dims{};  // dim Z^2, dim B^2, dim H^2

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string str() const;
};

struct Annihilators {
    Subspace two_sided; // {x : xA + Ax = 0}
    Subspace left;      // {x : xA = 0}
    Subspace right;     // {x : Ax = 0}
};

enum class Shape { NullFiliform, Filiform, QuasiFiliform, Other };

std::string shape_name(Shape s);

/// Triples (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k); empty iff associative.
std::vector<std::array<int, 3>> check_associative(const Algebra& a);

/// A^1 >= A^2 >= ... computed by A^{i+1} = sum_{k=1..i} A^k A^{i+1-k};
/// stops after reaching zero or stabilizing.
std::vector<Subspace> power_filtration(const Algebra& a);

/// Smallest i with A^i = 0, if reached within dim+1 steps.
std::optional<int> nilpotency_class(const Algebra& a);

Annihilators annihilator(const Algebra& a);

/// Classifies by the power filtration dims; requires a nilpotent input.
Shape shape_classify(const Algebra& a);

/// Associated graded algebra on a filtration-adapted basis.
Algebra graded_algebra(const Algebra& a);

/// Basis change x -> p x: table of the pulled-back algebra p^{-1} a(pu, pv).
Algebra transport(const Algebra& a, const Mat& p);

/// True iff p(uv) = p(u)p(v) on all basis pairs (p maps a-coords to b-coords).
bool is_hom_witness(const Algebra& a, const Algebra& b, const Mat& p);
bool is_iso_witness(const Algebra& a, const Algebra& b, const Mat& p);

/// Extends gen |-> image assignments to a linear map by propagating products;
/// fails if the propagation is inconsistent or the gens do not generate.
struct GeneratorExtension {
    Mat matrix;
    std::string failure; // empty on success
    bool ok() const { return failure.empty(); }
};
GeneratorExtension extend_generator_images(const Algebra& a,
                                           const std::vector<RatVec>& gens,
                                           const std::vector<RatVec>& images,
                                           const Algebra& b);

Fingerprint fingerprint(const Algebra& a);

/// Standard basis vectors spanning a complement of A^2 (generators of a
/// nilpotent algebra).
std::vector<RatVec> generator_complement(const Algebra& a);

} // namespace cexkit

#endif
