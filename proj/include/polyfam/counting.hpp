#ifndef POLYFAM_COUNTING_HPP
#define POLYFAM_COUNTING_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyfam {

using BigInt = boost::multiprecision::cpp_int;

/// Number of monic irreducible polynomials of degree n over F_q by the Möbius
/// formula N_q(n) = (1/n) Σ_{d|n} μ(n/d) q^d, evaluated exactly. q ≥ 2, n ≥ 1.
BigInt count_irreducibles(std::uint64_t q, std::uint32_t n);

/// Exact check of the real-valued lower bound
///     N_q(n) ≥ q^n/n − q^{n/2}/n − q^{n/3}.
/// The irrational right side is bracketed with integer fixed-point arithmetic
/// at increasing precision until the comparison is decided.
bool count_lower_bound_holds(std::uint64_t q, std::uint32_t n);

/// Integer square root: largest r with r² ≤ n.
BigInt isqrt(const BigInt& n);
/// Integer cube root: largest r with r³ ≤ n.
BigInt icbrt(const BigInt& n);

}  // namespace polyfam

#endif
