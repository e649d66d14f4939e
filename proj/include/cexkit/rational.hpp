#ifndef CEXKIT_RATIONAL_HPP
#define CEXKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cexkit {

/// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
/// positive denominator, 0 = 0/1), which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "num", "num/den" or "-num/den" with arbitrary-precision parts.
inline Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("rat_from_string: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical form with explicit denominator, e.g. "3/1", "-2/5".
inline std::string rat_to_string(const Rat& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/// Exact k-th root when it exists in Q; nullopt otherwise (k >= 1).
inline std::optional<Rat> rat_nth_root(const Rat& q, unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("rat_nth_root: k must be >= 1");
    if (k == 1)
        return q;
    if (sgn(q) < 0 && k % 2 == 0)
        return std::nullopt;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    mpz_class rn, rd;
    const int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
    const int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
    if (!exact_n || !exact_d)
        return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

/// Uniform small rational for randomized tests; never returns zero when
/// nonzero is requested.
inline Rat random_rat(std::mt19937_64& rng, long bound = 6, bool nonzero = false)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    for (;;) {
        Rat q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || sgn(q) != 0)
            return q;
    }
}

using RatVec = std::vector<Rat>;

} // namespace cexkit

#endif
