#ifndef POLYFAM_CONSTRUCTIONS_HPP
#define POLYFAM_CONSTRUCTIONS_HPP

#include "polyfam/family.hpp"

namespace polyfam {

/// All products g·p with p monic of degree n − deg(g): the family of all monic
/// degree-n multiples of g. Size q^{n−deg g}, declared level deg(g).
/// g must be monic with deg(g) ≤ n.
Family trivial_family(const Poly& g, int n);

/// The family { H_d / p : p monic of degree d } where H_d is the monic lcm of
/// all monic degree-d polynomials. Size q^d, member degree deg(H_d) − d,
/// declared level deg(H_d) − 2d, and no non-unit common divisor. Division by
/// every p is asserted exact. d ≥ 1.
Family primary_family(const Field& f, int d,
                      std::uint64_t limit = kDefaultEnumerationLimit);

/// The fixed four-member family of monic cubics over F_2
///   { x²(x+1), x(x+1)², x(x²+x+1), (x+1)(x²+x+1) },
/// declared level 1. Hard-coded literal data, not re-derived.
Family exceptional_family();

enum class ScaleDirection { multiply, divide };

/// Members multiplied (or exactly divided) by monic g; the declared level
/// moves by ±deg(g) (clamped at 0 on divide). For divide, g must divide every
/// member.
Family scale_family(const Family& fam, const Poly& g, ScaleDirection direction);

}  // namespace polyfam

#endif
