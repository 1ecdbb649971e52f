#ifndef POLYFAM_POLY_HPP
#define POLYFAM_POLY_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyfam/field.hpp"

namespace polyfam {

/// Polynomial degree with a dedicated minus-infinity sentinel for the zero
/// polynomial. The sentinel compares below every integer and serializes as -1;
/// keeping it out of the integer range prevents threshold checks from silently
/// treating the zero polynomial as a degree-(-1) polynomial.
class Degree {
public:
    constexpr Degree(int v) : raw_(v) {}  // NOLINT: implicit by design
    static constexpr Degree neg_inf() { return Degree(sentinel, 0); }

    constexpr bool is_neg_inf() const { return raw_ == sentinel; }
    /// The finite value; must not be called on the sentinel.
    constexpr int value() const {
        if (is_neg_inf()) throw std::logic_error("degree of the zero polynomial");
        return raw_;
    }
    /// JSON form: the finite value, or -1 for the sentinel.
    constexpr int serialized() const { return is_neg_inf() ? -1 : raw_; }

    friend constexpr auto operator<=>(Degree a, Degree b) = default;

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(a.raw_ + b.raw_);
    }

private:
    static constexpr int sentinel = std::numeric_limits<int>::min();
    constexpr Degree(int raw, int) : raw_(raw) {}
    int raw_;
};

/// A polynomial over a finite field, stored as the vector of its coefficient
/// indices with the constant term first. Canonical form: empty vector for the
/// zero polynomial, otherwise no trailing zero (so the last entry is the
/// leading coefficient). Immutable value type.
class Poly {
public:
    /// The zero polynomial over f.
    explicit Poly(const Field& f) : field_(f) {}
    /// From coefficient indices, constant term first; trailing zeros are
    /// stripped. Indices must be < q.
    Poly(const Field& f, std::vector<std::uint32_t> coeff_indices);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FieldElement& c);

    const Field& field() const { return field_; }
    Degree degree() const {
        return coeffs_.empty() ? Degree::neg_inf()
                               : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of x^i; zero beyond the degree.
    FieldElement coefficient(std::size_t i) const {
        return field_.element(coefficient_index(i));
    }
    std::uint32_t coefficient_index(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    /// Constant term first, no trailing zeros; empty for the zero polynomial.
    const std::vector<std::uint32_t>& coefficient_indices() const { return coeffs_; }
    FieldElement leading_coefficient() const;  // input must be nonzero

    /// This polynomial divided by its leading coefficient; input must be nonzero.
    Poly monic() const;

    FieldElement evaluate(const FieldElement& at) const;

    /// Debug form like "x^3 + 2*x + 1"; coefficients are printed as their
    /// element indices (natural integers for prime fields).
    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElement& c, const Poly& a);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Canonical total order: by degree, then coefficient indices compared
    /// from the highest power down. For monic polynomials of equal degree
    /// this is exactly ascending poly_index order.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    Field field_;
    std::vector<std::uint32_t> coeffs_;
};

/// (quotient, remainder) with a = quotient*b + remainder, deg r < deg b; b != 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient of divmod
Poly operator%(const Poly& a, const Poly& b);  // remainder of divmod
/// True iff d divides a exactly; d != 0.
bool divides(const Poly& d, const Poly& a);

/// Monic greatest common divisor; rejects gcd(0, 0).
Poly gcd(const Poly& a, const Poly& b);
/// Monic least common multiple; rejects zero inputs.
Poly lcm(const Poly& a, const Poly& b);

/// Canonical index of a monic polynomial within its degree class: the base-q
/// value of the d low coefficient indices, Σ index(c_j)·q^j for j < d. A
/// bijection between monic degree-d polynomials and [0, q^d).
std::uint64_t poly_index(const Poly& p);
/// Inverse of poly_index: the monic degree-d polynomial with the given index.
Poly poly_from_index(const Field& f, std::uint32_t d, std::uint64_t index);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// All q^d monic polynomials of degree d in increasing poly_index order.
/// Rejects enumerations larger than `limit`.
std::vector<Poly> enumerate_monic(const Field& f, std::uint32_t d,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace polyfam

#endif
