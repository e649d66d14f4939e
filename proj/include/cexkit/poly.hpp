#ifndef CEXKIT_POLY_HPP
#define CEXKIT_POLY_HPP

#include "cexkit/matrix.hpp"
#include "cexkit/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cexkit {

/// Monomial: variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

inline int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (const auto& [v, e] : m)
        d += e;
    return d;
}

/// Graded lexicographic order: total degree first, then the exponent maps
/// compared lexicographically (variable names ascending).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial over Q with canonical term storage
/// (no zero coefficients, grlex-ordered map).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c)
    {
        if (sgn(c) != 0)
            terms_[Monomial{}] = c;
    }
    Poly(long c) : Poly(Rat(c)) {}

    static Poly var(const std::string& name, int exp = 1)
    {
        Poly p;
        if (exp < 0)
            throw std::invalid_argument("Poly::var: negative exponent");
        if (exp == 0)
            return Poly(Rat(1));
        p.terms_[Monomial{{name, exp}}] = 1;
        return p;
    }

    const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat constant_value() const
    {
        if (terms_.empty())
            return Rat(0);
        if (!is_constant())
            throw std::invalid_argument("Poly::constant_value: not a constant");
        return terms_.begin()->second;
    }

    std::set<std::string> variables() const
    {
        std::set<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m)
                vs.insert(v);
        return vs;
    }

    void add_term(const Monomial& m, const Rat& c)
    {
        if (sgn(c) == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const
    {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const
    {
        Poly r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    Poly operator-() const
    {
        Poly r;
        for (const auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    Poly operator*(const Poly& o) const
    {
        Poly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb)
                    m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    Poly operator*(const Rat& c) const
    {
        Poly r;
        if (sgn(c) == 0)
            return r;
        for (const auto& [m, q] : terms_)
            r.terms_[m] = c * q;
        return r;
    }

    Poly pow(int e) const
    {
        if (e < 0)
            throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r(Rat(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1)
                r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Substitutes bindings (variable -> polynomial); unbound variables stay.
    Poly substitute(const std::map<std::string, Poly>& bindings) const
    {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            for (const auto& [v, e] : m) {
                auto it = bindings.find(v);
                if (it != bindings.end())
                    t = t * it->second.pow(e);
                else
                    t = t * Poly::var(v, e);
            }
            r = r + t;
        }
        return r;
    }

    /// Full evaluation; throws if a variable is missing from the bindings.
    Rat evaluate(const std::map<std::string, Rat>& bindings) const
    {
        Rat r(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (const auto& [v, e] : m) {
                auto it = bindings.find(v);
                if (it == bindings.end())
                    throw std::invalid_argument("Poly::evaluate: unbound variable " + v);
                Rat p(1);
                for (int k = 0; k < e; ++k)
                    p *= it->second;
                t *= p;
            }
            r += t;
        }
        return r;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string term;
            if (c != Rat(1) || m.empty())
                term = (c == Rat(-1) && !m.empty()) ? "-" : rat_to_string(c);
            for (const auto& [v, e] : m) {
                if (!term.empty() && term != "-")
                    term += "*";
                term += v;
                if (e > 1)
                    term += "^" + std::to_string(e);
            }
            if (!first && term[0] != '-')
                s += "+";
            s += term;
            first = false;
        }
        return s;
    }

private:
    std::map<Monomial, Rat, GrlexLess> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Matrix of polynomials plus the side conditions under which a rational
/// instantiation is a valid (invertible) specialization.
struct ParamMatrix {
    struct Constraint {
        std::string var;
        bool nonzero = true; // nonzero => "var != 0", else "var == value"
        Rat value;
    };

    int rows = 0;
    int cols = 0;
    std::vector<Poly> entries; // row-major
    std::vector<Constraint> constraints;
    std::vector<std::string> free_vars; // parameters, in a fixed order

    Poly& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Poly& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    bool satisfies(const std::map<std::string, Rat>& point) const
    {
        for (const auto& c : constraints) {
            auto it = point.find(c.var);
            if (it == point.end()) {
                // Equality constraints record normalizations already baked
                // into the entries; an absent binding is consistent.
                if (c.nonzero)
                    return false;
                continue;
            }
            if (c.nonzero ? is_zero(it->second) : (it->second != c.value))
                return false;
        }
        return true;
    }

    Mat instantiate(const std::map<std::string, Rat>& point) const
    {
        if (!satisfies(point))
            throw std::invalid_argument("ParamMatrix::instantiate: constraints violated");
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = at(i, j).evaluate(point);
        return m;
    }

    /// Random constraint-satisfying point on all free variables.
    std::map<std::string, Rat> random_point(std::mt19937_64& rng, long bound = 5) const
    {
        std::map<std::string, Rat> pt;
        for (const auto& v : free_vars)
            pt[v] = random_rat(rng, bound);
        for (const auto& c : constraints) {
            if (c.nonzero) {
                if (is_zero(pt[c.var]))
                    pt[c.var] = random_rat(rng, bound, /*nonzero=*/true);
            } else {
                pt[c.var] = c.value;
            }
        }
        return pt;
    }
};

} // namespace cexkit

#endif
