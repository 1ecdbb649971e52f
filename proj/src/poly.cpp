#include "polyfam/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyfam/errors.hpp"

namespace polyfam {
namespace {

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeff_indices)
    : field_(f), coeffs_(std::move(coeff_indices)) {
    for (std::uint32_t c : coeffs_)
        if (c >= field_.order())
            throw std::invalid_argument("coefficient index " + std::to_string(c) +
                                        " out of range for field of order " +
                                        std::to_string(field_.order()));
    trim(coeffs_);
}

Poly Poly::constant(const FieldElement& c) {
    return Poly(c.field(), {c.index()});
}

FieldElement Poly::leading_coefficient() const {
    if (coeffs_.empty())
        throw std::invalid_argument("zero polynomial has no leading coefficient");
    return field_.element(coeffs_.back());
}

Poly Poly::monic() const {
    if (coeffs_.empty())
        throw std::invalid_argument("cannot normalize the zero polynomial");
    if (coeffs_.back() == 1) return *this;
    std::uint32_t inv = field_.inv_index(coeffs_.back());
    std::vector<std::uint32_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = field_.mul_index(coeffs_[i], inv);
    return Poly(field_, std::move(out));
}

FieldElement Poly::evaluate(const FieldElement& at) const {
    if (at.field() != field_)
        throw std::invalid_argument("evaluation point from a different field");
    std::uint32_t acc = 0, x = at.index();
    for (std::size_t i = coeffs_.size(); i > 0; --i)
        acc = field_.add_index(field_.mul_index(acc, x), coeffs_[i - 1]);
    return field_.element(acc);
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i > 0;) {
        --i;
        std::uint32_t c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field_;
    std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add_index(a.coefficient_index(i), b.coefficient_index(i));
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field_;
    std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.sub_index(a.coefficient_index(i), b.coefficient_index(i));
    return Poly(f, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<std::uint32_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = f.add_index(out[i + j], f.mul_index(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(f, std::move(out));
}

Poly operator*(const FieldElement& c, const Poly& a) {
    if (c.field() != a.field_)
        throw std::invalid_argument("scalar from a different field");
    std::vector<std::uint32_t> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.field_.mul_index(c.index(), a.coeffs_[i]);
    return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a) {
    std::vector<std::uint32_t> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.field_.neg_index(a.coeffs_[i]);
    return Poly(a.field_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs_.size(); i > 0; --i) {
        if (a.coeffs_[i - 1] != b.coeffs_[i - 1])
            return a.coeffs_[i - 1] < b.coeffs_[i - 1];
    }
    return false;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field& f = a.field();
    const auto& bc = b.coefficient_indices();
    std::vector<std::uint32_t> rem(a.coefficient_indices());
    if (rem.size() < bc.size()) return {Poly(f), a};

    std::uint32_t lead_inv = f.inv_index(bc.back());
    std::vector<std::uint32_t> quot(rem.size() - bc.size() + 1, 0);
    for (std::size_t i = rem.size(); i >= bc.size(); --i) {
        std::uint32_t top = rem[i - 1];
        if (top == 0) continue;
        std::uint32_t qc = f.mul_index(top, lead_inv);
        std::size_t shift = i - bc.size();
        quot[shift] = qc;
        for (std::size_t j = 0; j < bc.size(); ++j)
            rem[shift + j] = f.sub_index(rem[shift + j], f.mul_index(qc, bc[j]));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("lcm of the zero polynomial is undefined");
    return ((a * b) / gcd(a, b)).monic();
}

std::uint64_t poly_index(const Poly& p) {
    if (!p.is_monic()) throw std::invalid_argument("poly_index requires a monic polynomial");
    const std::uint64_t q = p.field().order();
    const auto& c = p.coefficient_indices();
    std::uint64_t idx = 0;
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        std::uint64_t digit = c[i - 1];
        if (idx > (std::numeric_limits<std::uint64_t>::max() - digit) / q)
            throw guard_error("polynomial index overflows 64 bits");
        idx = idx * q + digit;
    }
    return idx;
}

Poly poly_from_index(const Field& f, std::uint32_t d, std::uint64_t index) {
    const std::uint64_t q = f.order();
    std::vector<std::uint32_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::uint64_t t = index;
    for (std::uint32_t i = 0; i < d; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(t % q);
        t /= q;
    }
    if (t != 0)
        throw std::invalid_argument("polynomial index " + std::to_string(index) +
                                    " out of range for degree " + std::to_string(d));
    return Poly(f, std::move(coeffs));
}

std::vector<Poly> enumerate_monic(const Field& f, std::uint32_t d, std::uint64_t limit) {
    const std::uint64_t q = f.order();
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        if (count > limit / q)
            throw guard_error("enumeration of q^" + std::to_string(d) +
                              " monic polynomials exceeds the limit " +
                              std::to_string(limit));
        count *= q;
    }
    if (count > limit)
        throw guard_error("enumeration of q^" + std::to_string(d) +
                          " monic polynomials exceeds the limit " + std::to_string(limit));
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(poly_from_index(f, d, i));
    return out;
}

}  // namespace polyfam
