#include "polyfam/counting.hpp"

#include <stdexcept>
#include <string>

#include "polyfam/errors.hpp"

namespace polyfam {
namespace {

// Möbius function by trial-division factorization.
int mobius(std::uint32_t m) {
    int sign = 1;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;  // squared prime
            sign = -sign;
        }
    }
    if (m > 1) sign = -sign;
    return sign;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt of a negative number");
    BigInt r = boost::multiprecision::sqrt(n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

BigInt icbrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("icbrt of a negative number");
    if (n == 0) return 0;
    // Newton iteration from above, then exact adjustment.
    unsigned bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << (bits / 3 + 1);
    for (;;) {
        BigInt y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

BigInt count_irreducibles(std::uint64_t q, std::uint32_t n) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    BigInt total = 0;
    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        total += mobius(n / d) * boost::multiprecision::pow(BigInt(q), d);
    }
    if (total % n != 0)
        throw internal_check_error("Möbius sum for N_" + std::to_string(q) + "(" +
                                   std::to_string(n) + ") is not divisible by n");
    return total / n;
}

bool count_lower_bound_holds(std::uint64_t q, std::uint32_t n) {
    // The bound N >= q^n/n - q^(n/2)/n - q^(n/3), multiplied by n, reads
    //     R := q^n - n*N  <=  S := q^(n/2) + n*q^(n/3),
    // with S real. Bracket 2^K * S between integer floors of the two roots:
    // with A = floor(2^K sqrt(q^n)) and B = floor(2^K cbrt(q^n)),
    //     A + n*B <= 2^K * S < A + n*B + n + 1,
    // so the exact integer 2^K * R decides the comparison unless it lands in
    // the width-(n+1) gap, in which case the precision K is raised. S is an
    // integer (gap closed) or irrational (gap shrinks below any fixed R - S),
    // so this terminates.
    const BigInt N = count_irreducibles(q, n);
    const BigInt qn = boost::multiprecision::pow(BigInt(q), n);
    const BigInt R = qn - n * N;
    if (R <= 0) return true;
    for (unsigned K : {64u, 128u, 256u, 512u}) {
        const BigInt A = isqrt(qn << (2 * K));
        const BigInt B = icbrt(qn << (3 * K));
        const BigInt low = A + n * B;
        const BigInt lhs = R << K;
        if (lhs <= low) return true;
        if (lhs >= low + n + 1) return false;
    }
    throw internal_check_error("lower-bound comparison undecided at 512-bit precision");
}

}  // namespace polyfam
