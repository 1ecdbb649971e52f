#include "polyfam/field.hpp"

#include <stdexcept>
#include <string>

#include "polyfam/errors.hpp"

namespace polyfam {
namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Digit-vector polynomials over F_p, constant term first, no trailing zeros.
// Self-contained so that modulus selection does not depend on the general
// polynomial layer (which itself builds on Field).
using Digits = std::vector<std::uint32_t>;

void dv_trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits dv_mul(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    dv_trim(r);
    return r;
}

// Remainder of a mod b; b must be monic.
Digits dv_mod(Digits a, const Digits& b, std::uint32_t p) {
    dv_trim(a);
    while (a.size() >= b.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = std::uint64_t{lead} * b[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        dv_trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool dv_irreducible(const Digits& f, std::uint32_t p) {
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (dv_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically least monic irreducible of degree k over F_p, coefficient
// indices compared from the constant term upward.
Digits least_irreducible(std::uint32_t p, std::uint32_t k) {
    Digits c(k, 0);  // low coefficients; c[0] is the most significant in lex order
    for (;;) {
        Digits f(c);
        f.push_back(1);
        if (dv_irreducible(f, p)) return f;
        std::size_t i = k;  // odometer, last coordinate fastest
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0)
                throw internal_check_error("no irreducible of degree " +
                                           std::to_string(k) + " over F_" +
                                           std::to_string(p));
        }
    }
}

}  // namespace

class FieldImpl {
public:
    std::uint32_t p;
    std::uint32_t k;
    std::uint64_t q;
    Digits modulus;  // empty when k == 1

    bool has_tables = false;
    std::vector<std::uint32_t> log_;  // index -> discrete log; log_[0] unused
    std::vector<std::uint32_t> exp_;  // length 2(q-1); exp_[i] = g^i

    Digits to_digits(std::uint32_t idx) const {
        Digits d(k, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            d[i] = idx % p;
            idx /= p;
        }
        return d;
    }

    std::uint32_t from_digits(const Digits& d) const {
        std::uint64_t idx = 0;
        for (std::size_t i = d.size(); i > 0; --i) idx = idx * p + d[i - 1];
        return static_cast<std::uint32_t>(idx);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
        if (p == 2) return a ^ b;
        std::uint32_t r = 0, scale = 1;
        while (a != 0 || b != 0) {
            r += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        std::uint32_t r = 0, scale = 1;
        while (a != 0) {
            std::uint32_t d = a % p;
            r += (d == 0 ? 0 : p - d) * scale;
            a /= p;
            scale *= p;
        }
        return r;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
        Digits da = to_digits(a), db = to_digits(b);
        dv_trim(da);
        dv_trim(db);
        return from_digits(dv_mod(dv_mul(da, db, p), modulus, p));
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1, base = a;
        while (e != 0) {
            if (e & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
        if (!has_tables) return mul_slow(a, b);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("inversion of zero field element");
        if (k == 1) {
            std::uint64_t r = 1, base = a, e = p - 2;  // Fermat: a^(p-2)
            while (e != 0) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return static_cast<std::uint32_t>(r);
        }
        if (has_tables) return exp_[q - 1 - log_[a]];
        return pow_slow(a, q - 2);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (k == 1) {
            std::uint64_t r = 1, base = a;
            while (e != 0) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return static_cast<std::uint32_t>(r);
        }
        if (has_tables)
            return exp_[std::uint64_t{log_[a]} * (e % (q - 1)) % (q - 1)];
        return pow_slow(a, e);
    }

    void build_tables() {
        // Multiplicative generator: g with g^((q-1)/r) != 1 for every prime
        // factor r of q-1.
        std::vector<std::uint64_t> prime_factors;
        std::uint64_t m = q - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_factors.push_back(m);

        std::uint32_t gen = 0;
        for (std::uint32_t cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (std::uint64_t r : prime_factors) {
                if (pow_slow(cand, (q - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
        if (gen == 0) throw internal_check_error("no multiplicative generator found");

        exp_.resize(2 * (q - 1));
        log_.assign(q, 0);
        std::uint32_t v = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp_[i] = v;
            exp_[i + q - 1] = v;
            log_[v] = static_cast<std::uint32_t>(i);
            v = mul_slow(v, gen);
        }
        if (v != 1) throw internal_check_error("generator order mismatch");
        has_tables = true;
    }
};

namespace {

const std::shared_ptr<const FieldImpl>& require_owner(
    const std::shared_ptr<const FieldImpl>& o) {
    if (!o)
        throw std::invalid_argument(
            "default-constructed field element used in arithmetic");
    return o;
}

const std::shared_ptr<const FieldImpl>& require_same(
    const std::shared_ptr<const FieldImpl>& a,
    const std::shared_ptr<const FieldImpl>& b) {
    require_owner(a);
    require_owner(b);
    if (a != b && (a->p != b->p || a->k != b->k))
        throw std::invalid_argument("field elements belong to different fields");
    return a;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k, const FieldOptions& opts) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > opts.order_limit / p)
            throw guard_error("field order " + std::to_string(p) + "^" +
                              std::to_string(k) + " exceeds the configured limit " +
                              std::to_string(opts.order_limit));
        q *= p;
    }

    auto impl = std::make_shared<FieldImpl>();
    impl->p = p;
    impl->k = k;
    impl->q = q;
    if (k > 1) {
        impl->modulus = least_irreducible(p, k);
        if (q <= opts.table_limit) impl->build_tables();
    }
    impl_ = std::move(impl);
}

Field Field::from_order(std::uint64_t q, const FieldOptions& opts) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    if (q > opts.order_limit)
        throw guard_error("field order " + std::to_string(q) +
                          " exceeds the configured limit " +
                          std::to_string(opts.order_limit));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return Field(static_cast<std::uint32_t>(p), k, opts);
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::extension_degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

FieldElement Field::element(std::uint64_t index) const {
    if (index >= impl_->q)
        throw std::invalid_argument("element index " + std::to_string(index) +
                                    " out of range for field of order " +
                                    std::to_string(impl_->q));
    return FieldElement(impl_, static_cast<std::uint32_t>(index));
}

FieldElement Field::from_digits(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() != impl_->k)
        throw std::invalid_argument("digit vector length must equal the extension degree");
    for (std::uint32_t d : digits)
        if (d >= impl_->p) throw std::invalid_argument("digit out of range");
    return FieldElement(impl_, impl_->from_digits(digits));
}

std::vector<std::uint32_t> Field::digits(const FieldElement& a) const {
    require_same(impl_, a.owner_);
    return impl_->to_digits(a.index());
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(impl_->q);
    for (std::uint64_t i = 0; i < impl_->q; ++i)
        out.push_back(FieldElement(impl_, static_cast<std::uint32_t>(i)));
    return out;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    require_same(impl_, a.owner_);
    require_same(impl_, b.owner_);
    return FieldElement(impl_, impl_->add(a.index_, b.index_));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    require_same(impl_, a.owner_);
    require_same(impl_, b.owner_);
    return FieldElement(impl_, impl_->sub(a.index_, b.index_));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    require_same(impl_, a.owner_);
    require_same(impl_, b.owner_);
    return FieldElement(impl_, impl_->mul(a.index_, b.index_));
}

FieldElement Field::neg(const FieldElement& a) const {
    require_same(impl_, a.owner_);
    return FieldElement(impl_, impl_->neg(a.index_));
}

FieldElement Field::inv(const FieldElement& a) const {
    require_same(impl_, a.owner_);
    return FieldElement(impl_, impl_->inv(a.index_));
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    require_same(impl_, a.owner_);
    return FieldElement(impl_, impl_->pow(a.index_, e));
}

std::uint32_t Field::add_index(std::uint32_t a, std::uint32_t b) const {
    return impl_->add(a, b);
}
std::uint32_t Field::sub_index(std::uint32_t a, std::uint32_t b) const {
    return impl_->sub(a, b);
}
std::uint32_t Field::mul_index(std::uint32_t a, std::uint32_t b) const {
    return impl_->mul(a, b);
}
std::uint32_t Field::neg_index(std::uint32_t a) const { return impl_->neg(a); }
std::uint32_t Field::inv_index(std::uint32_t a) const { return impl_->inv(a); }

bool operator==(const Field& a, const Field& b) {
    return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k;
}
bool operator!=(const Field& a, const Field& b) { return !(a == b); }

Field FieldElement::field() const { return Field(require_owner(owner_)); }

FieldElement FieldElement::inverse() const {
    require_owner(owner_);
    return FieldElement(owner_, owner_->inv(index_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    require_owner(owner_);
    return FieldElement(owner_, owner_->pow(index_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& o = require_same(a.owner_, b.owner_);
    return FieldElement(o, o->add(a.index_, b.index_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& o = require_same(a.owner_, b.owner_);
    return FieldElement(o, o->sub(a.index_, b.index_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& o = require_same(a.owner_, b.owner_);
    return FieldElement(o, o->mul(a.index_, b.index_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& o = require_same(a.owner_, b.owner_);
    return FieldElement(o, o->mul(a.index_, o->inv(b.index_)));
}

FieldElement operator-(const FieldElement& a) {
    const auto& o = require_owner(a.owner_);
    return FieldElement(o, o->neg(a.index_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.owner_ || !b.owner_) return !a.owner_ && !b.owner_;
    return a.owner_->p == b.owner_->p && a.owner_->k == b.owner_->k &&
           a.index_ == b.index_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

}  // namespace polyfam
