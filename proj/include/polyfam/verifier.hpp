#ifndef POLYFAM_VERIFIER_HPP
#define POLYFAM_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfam/family.hpp"

namespace polyfam {

/// Degree of the monic gcd of two monic nonzero polynomials.
int gcd_degree(const Poly& a, const Poly& b);

/// True iff every pair of distinct members shares a divisor of degree >= ell,
/// i.e. gcd_degree >= ell for every unordered pair. Singletons pass.
bool is_ell_intersecting(const Family& fam, int ell);

inline constexpr std::uint64_t kDefaultSubsetGuard = 10'000'000;

/// True iff every k-subset of members has a common divisor of degree >= ell.
/// k >= 2; the number of k-subsets must stay within `guard`.
bool is_k_wise_intersecting(const Family& fam, int k, int ell,
                            std::uint64_t guard = kDefaultSubsetGuard);

/// Monic gcd of all members; 1 exactly when no non-unit polynomial divides
/// every member.
Poly family_common_divisor(const Family& fam);

/// Smallest pairwise gcd degree over all member pairs; for a singleton,
/// the member's degree (every admissible level holds vacuously).
int realized_level(const Family& fam);

/// Witness check for families of uniform degree n: for each monic irreducible
/// f of degree n − ell, some member must be divisible by f. Lists the
/// irreducibles with no witness.
struct WitnessReport {
    bool all_present;
    std::vector<Poly> missing;
};
WitnessReport check_irreducible_witnesses(const Family& fam, int ell);

enum class FamilyKind { Trivial, PrimaryConstruction, Exceptional, Other };

std::string to_string(FamilyKind kind);

/// Result of classifying an extremal family.
struct Classification {
    FamilyKind kind;
    Poly common_divisor;     // monic gcd of all members
    std::optional<int> d;    // parameter when kind == PrimaryConstruction
    int realized_level;      // minimum pairwise gcd degree
};

/// Classify a uniform-degree family of extremal size q^{n−ell} that is
/// ell-intersecting (both preconditions verified; violations are rejected).
/// Precedence: Trivial (common divisor degree >= ell), else Exceptional
/// (quotient by the common divisor equals the fixed exceptional family), else
/// PrimaryConstruction (quotient equals primary_family(f, n − ell)), else
/// Other.
Classification classify_extremal(const Family& fam, int ell);

}  // namespace polyfam

#endif
