#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cexkit/matrix.hpp"
#include "cexkit/poly.hpp"
#include "cexkit/rational.hpp"

using namespace cexkit;

namespace {

Mat mat2(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<RatVec> rs;
    for (const auto& r : rows) {
        RatVec v;
        for (long x : r)
            v.push_back(Rat(x));
        rs.push_back(v);
    }
    return Mat::from_rows(rs);
}

Mat random_matrix(std::mt19937_64& rng, int rows, int cols)
{
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = random_rat(rng, 4);
    return m;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical")
{
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat_to_string(rat(-6, -4)) == "3/2");
    CHECK(rat_from_string("3") == rat(3));
    CHECK(rat_from_string("-10/4") == rat(-5, 2));
    CHECK_THROWS(rat_from_string("1/0"));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Rat a = random_rat(rng, 20, /*nonzero=*/true);
        const Rat b = random_rat(rng, 20, /*nonzero=*/true);
        CHECK((a / b) * (b / a) == Rat(1));
    }
}

TEST_CASE("exact nth roots")
{
    CHECK(rat_nth_root(rat(8), 3) == rat(2));
    CHECK(rat_nth_root(rat(1, 32), 5) == rat(1, 2));
    CHECK(rat_nth_root(rat(-27, 8), 3) == rat(-3, 2));
    CHECK(!rat_nth_root(rat(2), 2).has_value());
    CHECK(!rat_nth_root(rat(-4), 2).has_value());
    CHECK(rat_nth_root(rat(49, 9), 2) == rat(7, 3));
}

TEST_CASE("row_reduce canonical forms")
{
    const Mat id = Mat::identity(2);
    CHECK(row_reduce(id).basis == id);

    const Subspace zero = row_reduce(Mat(3, 4));
    CHECK(zero.dim() == 0);
    CHECK(zero.ambient == 4);

    // {(2,4),(1,2)} spans the line through (1,2): hand Gaussian elimination.
    const Subspace line = row_reduce(mat2({{2, 4}, {1, 2}}));
    CHECK(line.basis == mat2({{1, 2}}));
}

TEST_CASE("row_reduce is idempotent on random input")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const Mat m = random_matrix(rng, 4, 6);
        const Subspace s = row_reduce(m);
        CHECK(row_reduce(s.basis).basis == s.basis);
    }
}

TEST_CASE("nullspace")
{
    CHECK(nullspace(Mat::identity(3)).dim() == 0);

    const Subspace full = nullspace(Mat(2, 3));
    CHECK(full.dim() == 3);
    CHECK(full.basis == Mat::identity(3));

    // (1,1,0; 0,0,1): kernel is the line through (1,-1,0).
    const Subspace k = nullspace(mat2({{1, 1, 0}, {0, 0, 1}}));
    CHECK(k.basis == mat2({{1, -1, 0}}));
}

TEST_CASE("rank-nullity on random matrices")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const Mat m = random_matrix(rng, 5, 7);
        CHECK(nullspace(m).dim() + rank(m) == m.cols());
    }
}

TEST_CASE("quotient representatives")
{
    const Subspace whole = row_reduce(Mat::identity(2));
    CHECK(quotient_reps(whole, whole).empty());

    const Subspace sub = row_reduce(mat2({{1, 0}}));
    const auto reps = quotient_reps(whole, sub);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == RatVec{Rat(0), Rat(1)});

    CHECK_THROWS(quotient_reps(sub, whole));
}

TEST_CASE("quotient reps stay independent modulo the subspace")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        const Subspace whole = row_reduce(random_matrix(rng, 5, 6));
        const Subspace sub = row_reduce(Mat::from_rows(
            {whole.dim() > 0 ? whole.basis.row(0) : RatVec(6)}));
        if (!whole.contains(sub))
            continue;
        const auto reps = quotient_reps(whole, sub);
        CHECK(static_cast<int>(reps.size()) == whole.dim() - sub.dim());
        Subspace acc = sub;
        for (const auto& r : reps) {
            CHECK(whole.contains(r));
            CHECK(!acc.contains(r));
            acc = acc.sum(span_of({r}, 6));
        }
    }
}

TEST_CASE("solve and inverse")
{
    const Mat a = mat2({{1, 2}, {3, 4}});
    const auto x = solve(a, {Rat(5), Rat(11)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == RatVec{Rat(5), Rat(11)});

    CHECK(!solve(mat2({{1, 1}, {2, 2}}), {Rat(0), Rat(1)}).has_value());

    const Mat inv = inverse(a);
    CHECK(a * inv == Mat::identity(2));
    CHECK(!try_inverse(mat2({{1, 1}, {2, 2}})).has_value());
}

TEST_CASE("subspace operations")
{
    const Subspace u = row_reduce(mat2({{1, 0, 0}, {0, 1, 0}}));
    const Subspace w = row_reduce(mat2({{0, 1, 0}, {0, 0, 1}}));
    const Subspace meet = u.intersect(w);
    CHECK(meet.dim() == 1);
    CHECK(meet.basis == mat2({{0, 1, 0}}));
    CHECK(u.sum(w).dim() == 3);
}

TEST_CASE("polynomial arithmetic and substitution")
{
    const Poly x = Poly::var("x"), y = Poly::var("y");

    CHECK((x * y).substitute({{"x", Poly(Rat(2))}, {"y", Poly(Rat(3))}}).constant_value()
          == Rat(6));
    CHECK(x.pow(5).evaluate({{"x", Rat(1)}}) == Rat(1));

    // mu1_1 one-dimensional case (b)(1) binding: al2*x*y + al1*x*z + al4*w*y
    // vanishes at al1=1, al2=al3=c, al4=0, x=1, y=1, z=-c (c = 2 here).
    const Poly p = Poly::var("al2") * x * y + Poly::var("al1") * x * Poly::var("z")
                   + Poly::var("al4") * Poly::var("w") * y;
    const Rat c = rat(2);
    CHECK(p.evaluate({{"al1", Rat(1)}, {"al2", c}, {"al4", Rat(0)},
                      {"x", Rat(1)}, {"y", Rat(1)}, {"z", -c}, {"w", Rat(0)}})
          == Rat(0));

    // substitution then normalization keeps the canonical term order
    const Poly q = (x + y).pow(2);
    const Poly r = q.substitute({{"y", x}});
    CHECK(r == x.pow(2) * Rat(4));

    CHECK((x - x).is_zero());
    CHECK(Poly(Rat(0)).is_zero());
}

TEST_CASE("polynomial ring identities (randomized)")
{
    std::mt19937_64 rng(23);
    auto random_poly = [&](int nterms) {
        Poly p;
        const char* vars[] = {"x", "y", "z"};
        for (int t = 0; t < nterms; ++t) {
            Poly term(random_rat(rng, 3));
            for (const char* v : vars) {
                std::uniform_int_distribution<int> e(0, 2);
                term = term * Poly::var(v, e(rng));
            }
            p = p + term;
        }
        return p;
    };
    for (int t = 0; t < 30; ++t) {
        const Poly a = random_poly(3), b = random_poly(3), c = random_poly(2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        std::map<std::string, Rat> pt{
            {"x", random_rat(rng, 3)}, {"y", random_rat(rng, 3)}, {"z", random_rat(rng, 3)}};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}
