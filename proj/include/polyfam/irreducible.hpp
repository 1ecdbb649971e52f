#ifndef POLYFAM_IRREDUCIBLE_HPP
#define POLYFAM_IRREDUCIBLE_HPP

#include <cstdint>
#include <vector>

#include "polyfam/poly.hpp"

namespace polyfam {

/// One irreducible factor together with its multiplicity.
struct FactorPower {
    Poly factor;  // monic irreducible
    std::uint32_t multiplicity;
};

/// Canonical factorization: unit · Π factor^multiplicity reconstructs the
/// input exactly. Factors are monic irreducible, pairwise distinct, sorted by
/// (degree, poly_index).
struct Factorization {
    FieldElement unit;  // leading coefficient of the input
    std::vector<FactorPower> factors;
};

/// True iff p has no monic divisor of degree in [1, deg(p)/2], decided by
/// trial division against the cached irreducibles of those degrees. Rejects
/// constants and zero.
bool is_irreducible(const Poly& p);

/// The monic irreducibles of degree d in increasing poly_index order; length
/// equals the Möbius count. Backed by a per-field cache that is safe for
/// concurrent use.
std::vector<Poly> enumerate_irreducible_monic(
    const Field& f, std::uint32_t d, std::uint64_t limit = kDefaultEnumerationLimit);

/// Canonical factorization of a nonzero polynomial by trial division.
Factorization factor(const Poly& p);

/// H_d: the monic least common multiple of all monic degree-d polynomials.
/// Computed two ways — folding lcm over the enumeration, and the closed form
/// Π g^⌊d/deg g⌋ over monic irreducibles g of degree ≤ d — and cross-checked;
/// a mismatch is reported as an internal error. d ≥ 1.
Poly lcm_all_monic_degree(const Field& f, std::uint32_t d,
                          std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace polyfam

#endif
