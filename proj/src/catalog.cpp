#include "cexkit/catalog.hpp"

#include <algorithm>

namespace cexkit {

namespace {

const int kFamilyCounts[5] = {1, 4, 10, 7, 4};

void check_family(FamilyId f)
{
    if (f.series < 0 || f.series > 4)
        throw std::invalid_argument("unknown family series");
    if (f.series == 0) {
        if (f.index != 0)
            throw std::invalid_argument("mu0 takes no index");
    } else if (f.index < 1 || f.index > kFamilyCounts[f.series]) {
        throw std::invalid_argument("unknown family index");
    }
}

} // namespace

std::string family_name(FamilyId f)
{
    check_family(f);
    if (f.series == 0)
        return "mu0";
    return "mu" + std::to_string(f.series) + "_" + std::to_string(f.index);
}

FamilyId family_from_name(const std::string& name)
{
    if (name == "mu0")
        return MU0;
    if (name.size() >= 5 && name.compare(0, 2, "mu") == 0) {
        const auto us = name.find('_');
        if (us != std::string::npos) {
            try {
                FamilyId f{std::stoi(name.substr(2, us - 2)), std::stoi(name.substr(us + 1))};
                check_family(f);
                return f;
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
    }
    throw std::invalid_argument("unknown family name '" + name + "'");
}

FamilySpec parse_family_spec(const std::string& text)
{
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t colon = text.find(':', pos);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("bad catalog spec '" + text + "' (want family:n[:alpha=q])");
    FamilySpec spec;
    spec.family = family_from_name(parts[0]);
    try {
        spec.n = std::stoi(parts[1]);
    } catch (...) {
        throw std::invalid_argument("bad dimension in catalog spec '" + text + "'");
    }
    if (parts.size() == 3) {
        if (parts[2].compare(0, 6, "alpha=") != 0)
            throw std::invalid_argument("bad option in catalog spec '" + text + "'");
        spec.alpha = rat_from_string(parts[2].substr(6));
    }
    return spec;
}

std::string family_spec_name(const FamilySpec& spec)
{
    std::string s = family_name(spec.family) + ":" + std::to_string(spec.n);
    if (spec.alpha)
        s += ":alpha=" + rat_to_string(*spec.alpha);
    return s;
}

bool family_takes_alpha(FamilyId f)
{
    return (f.series == 2 && (f.index == 2 || f.index == 9)) || (f.series == 3 && f.index == 3);
}

int family_min_dim(FamilyId f)
{
    check_family(f);
    switch (f.series) {
    case 0: return 1;
    case 1: return 4;
    case 2: return 6;
    case 3: return 7;
    default: return 8;
    }
}

Algebra make_algebra(const FamilySpec& spec, bool enforce_min)
{
    const FamilyId f = spec.family;
    check_family(f);
    const int n = spec.n;
    if (enforce_min && n < family_min_dim(f))
        throw std::invalid_argument(family_name(f) + " requires n >= "
                                    + std::to_string(family_min_dim(f)));
    if (n < 1)
        throw std::invalid_argument("dimension must be positive");
    if (family_takes_alpha(f) != spec.alpha.has_value())
        throw std::invalid_argument(family_name(f)
                                    + (spec.alpha ? " takes no alpha" : " requires alpha"));

    Algebra a(n);
    // Chain part e_i e_j = e_{i+j} with 2 <= i+j <= n - series.
    const int cap = n - f.series;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j >= 2 && i + j <= cap)
                a.set(i, j, i + j, Rat(1));

    const Rat alpha = spec.alpha.value_or(Rat(0));
    auto add = [&](int i, int j, int k, Rat c = Rat(1)) { a.set(i, j, k, a.coeff(i, j, k) + c); };

    if (f.series == 1) {
        switch (f.index) {
        case 1: break;
        case 2: add(n, n, n - 1); break;
        case 3: add(1, n, n - 1); break;
        case 4: add(1, n, n - 1); add(n, n, n - 1); break;
        }
    } else if (f.series == 2) {
        const int p = n - 1;
        switch (f.index) {
        case 1: add(p, 1, n); break;
        case 2: add(1, p, n); add(p, 1, n, alpha); break;
        case 3: add(p, p, n); break;
        case 4: add(1, p, n); add(p, p, n); break;
        case 5: add(1, p, n - 2); add(1, p, n); add(p, 1, n); break;
        case 6: add(1, p, n - 2); add(p, 1, n); add(p, p, n); break;
        case 7: add(1, p, n - 2); add(p, p, n); break;
        case 8: add(1, p, n - 2); add(1, p, n); add(p, 1, n); add(p, p, n - 2); break;
        case 9: add(1, p, n); add(p, 1, n, alpha); add(p, p, n - 2); break;
        case 10: add(p, 1, n); add(p, p, n - 2); break;
        }
    } else if (f.series == 3) {
        const int p = n - 2;
        switch (f.index) {
        case 1: add(1, p, n - 1); add(p, 1, n); break;
        case 2: add(1, p, n - 1); add(p, 1, n - 1); add(p, 1, n); add(p, p, n); break;
        case 3: add(1, p, n - 1); add(p, 1, n - 1, alpha); add(p, p, n); break;
        case 4: add(p, 1, n - 1); add(p, p, n); break;
        case 5: add(1, p, n - 3); add(1, p, n - 1); add(p, 1, n - 1); add(p, p, n); break;
        case 6:
            add(1, p, n - 3); add(1, p, n - 1); add(p, 1, n - 1); add(p, 1, n); add(p, p, n);
            break;
        case 7: add(1, p, n - 1); add(p, 1, n); add(p, p, n - 3); break;
        }
    } else if (f.series == 4) {
        const int p = n - 3;
        switch (f.index) {
        case 1: add(1, p, n - 2); add(p, 1, n - 1); add(p, p, n); break;
        case 2: add(1, p, n - 2); add(p, 1, n - 1); add(p, p, n - 4); add(p, p, n); break;
        case 3: add(1, p, n - 4); add(1, p, n - 2); add(p, 1, n - 1); add(p, p, n); break;
        case 4:
            add(1, p, n - 4); add(1, p, n - 2); add(p, 1, n - 1); add(p, p, n - 4); add(p, p, n);
            break;
        }
    }
    return a;
}

std::vector<BilinearForm> nabla_basis(FamilyId f, int n)
{
    check_family(f);
    if (f.series == 0) {
        if (n < 1)
            throw std::invalid_argument("nabla_basis: n too small");
        BilinearForm top(n, n);
        for (int j = 1; j <= n; ++j)
            top.at(j - 1, n - j) = 1; // Delta_{j, n+1-j}
        return {top};
    }
    if (f.series != 1)
        throw std::invalid_argument("nabla_basis: only mu0 and mu1_k carry a nabla basis");
    if (n < family_min_dim(f))
        throw std::invalid_argument("nabla_basis: n below family minimum");
    std::vector<BilinearForm> reps;
    if (f.index == 1) {
        BilinearForm chain(n, n);
        for (int j = 1; j <= n - 1; ++j)
            chain.at(j - 1, n - 1 - j) = 1; // Delta_{j, n-j}
        reps.push_back(chain);
    }
    BilinearForm d1n(n, n), dn1(n, n), dnn(n, n);
    d1n.at(0, n - 1) = 1;
    dn1.at(n - 1, 0) = 1;
    dnn.at(n - 1, n - 1) = 1;
    reps.push_back(d1n);
    reps.push_back(dn1);
    reps.push_back(dnn);
    return reps;
}

namespace {

std::vector<Poly> poly_product(const Algebra& a, const std::vector<Poly>& u,
                               const std::vector<Poly>& v)
{
    std::vector<Poly> r(a.dim());
    for (const auto& [ijk, c] : a.table()) {
        const Poly& ui = u[ijk[0] - 1];
        const Poly& vj = v[ijk[1] - 1];
        if (ui.is_zero() || vj.is_zero())
            continue;
        r[ijk[2] - 1] = r[ijk[2] - 1] + (ui * vj) * c;
    }
    return r;
}

} // namespace

ParamMatrix automorphism_template(FamilyId f, int n)
{
    check_family(f);
    if (f.series > 1)
        throw std::invalid_argument("automorphism_template: unsupported family "
                                    + family_name(f));
    if (n < family_min_dim(f))
        throw std::invalid_argument("automorphism_template: n below family minimum");
    if (f == MU1_2 && n % 2 == 0)
        throw std::invalid_argument(
            "automorphism_template: mu1_2 requires odd n (half-integer powers of a_{1,1})");

    const Algebra alg = make_algebra({f, n, std::nullopt});
    ParamMatrix t;
    t.rows = t.cols = n;
    t.entries.assign(static_cast<size_t>(n) * n, Poly());

    // phi(e_1): the first column. Chain entries are free parameters.
    std::vector<Poly> v(n);
    const bool unital_x = (f == MU1_4); // paper normalizes a_{1,1} = 1 here
    v[0] = unital_x ? Poly(Rat(1)) : Poly::var("x");
    const int chain_top = (f.series == 0) ? n : n - 1;
    for (int k = 2; k <= chain_top; ++k)
        v[k - 1] = Poly::var("a" + std::to_string(k));
    if (f.series == 1)
        v[n - 1] = Poly::var(f == MU1_1 ? "w" : "z"); // a_{n,1} in the paper's naming

    if (!unital_x)
        t.free_vars.push_back("x");
    for (int k = 2; k <= chain_top; ++k)
        t.free_vars.push_back("a" + std::to_string(k));

    // Columns for the chain: phi(e_k) = phi(e_1)^k.
    std::vector<Poly> power = v;
    for (int k = 1; k <= chain_top; ++k) {
        for (int i = 0; i < n; ++i)
            t.at(i, k - 1) = power[i];
        if (k < chain_top)
            power = poly_product(alg, power, v);
    }

    if (f.series == 0) {
        t.constraints.push_back({"x", true, Rat(0)});
        return t;
    }

    // Last column phi(e_n) per family.
    std::vector<Poly> u(n);
    const Poly x = Poly::var("x");
    const Poly y = Poly::var("y");
    const Poly z = Poly::var("z");
    if (f == MU1_1) {
        u[n - 2] = z;
        u[n - 1] = y;
        t.free_vars.push_back("w");
        t.free_vars.push_back("z");
        t.free_vars.push_back("y");
        t.constraints.push_back({"x", true, Rat(0)});
        t.constraints.push_back({"y", true, Rat(0)});
    } else if (f == MU1_2) {
        u[n - 3] = -(z * x.pow((n - 3) / 2));
        u[n - 2] = y;
        u[n - 1] = x.pow((n - 1) / 2);
        t.free_vars.push_back("z");
        t.free_vars.push_back("y");
        t.constraints.push_back({"x", true, Rat(0)});
    } else if (f == MU1_3) {
        u[n - 2] = y;
        u[n - 1] = x.pow(n - 2);
        t.free_vars.push_back("z");
        t.free_vars.push_back("y");
        t.constraints.push_back({"x", true, Rat(0)});
    } else { // MU1_4
        u[n - 3] = -z;
        u[n - 2] = y;
        u[n - 1] = Poly(Rat(1));
        t.free_vars.push_back("z");
        t.free_vars.push_back("y");
        t.constraints.push_back({"x", false, Rat(1)});
    }
    for (int i = 0; i < n; ++i)
        t.at(i, n - 1) = u[i];
    return t;
}

std::vector<FamilyId> all_families()
{
    std::vector<FamilyId> fams{MU0};
    for (int s = 1; s <= 4; ++s)
        for (int k = 1; k <= kFamilyCounts[s]; ++k)
            fams.push_back({s, k});
    return fams;
}

} // namespace cexkit
