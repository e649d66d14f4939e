#ifndef CEXKIT_CATALOG_HPP
#define CEXKIT_CATALOG_HPP

#include "cexkit/algebra.hpp"
#include "cexkit/cohomology.hpp"
#include "cexkit/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cexkit {

/// Names a catalog family: series 0 is the one-generated chain mu0^n,
/// series 1..4 are the mu_{series,index}^n tables.
struct FamilyId {
    int series = 0;
    int index = 0;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
    friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

inline constexpr FamilyId MU0{0, 0};
inline constexpr FamilyId MU1_1{1, 1};
inline constexpr FamilyId MU1_2{1, 2};
inline constexpr FamilyId MU1_3{1, 3};
inline constexpr FamilyId MU1_4{1, 4};

struct FamilySpec {
    FamilyId family;
    int n = 0;
    std::optional<Rat> alpha;
};

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);

/// "mu2_2:6:alpha=3/1" etc.
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_name(const FamilySpec& spec);

bool family_takes_alpha(FamilyId f);
int family_min_dim(FamilyId f);

/// Exact structure-constant table of the named family. Checks the dimension
/// guard and alpha presence; enforce_min=false is used only for the
/// low-dimensional truncation tables that serve as finite-field evidence.
Algebra make_algebra(const FamilySpec& spec, bool enforce_min = true);

/// The fixed H^2 representatives (nabla basis) of mu0 and mu1_k.
std::vector<BilinearForm> nabla_basis(FamilyId f, int n);

/// Parametric automorphism matrix of mu0 / mu1_k, entries derived by
/// propagating phi(e_1) through the chain. Variable names follow the
/// action formulas: "x" = a_{1,1}, plus per-family "y", "z", "w" and inner
/// chain parameters "a2".."a<n-1>".
ParamMatrix automorphism_template(FamilyId f, int n);

/// All family ids in catalog order.
std::vector<FamilyId> all_families();

} // namespace cexkit

#endif
