#ifndef POLYFAM_FIELD_HPP
#define POLYFAM_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace polyfam {

class Field;

/// An element of a finite field, identified by its canonical index in [0, q).
/// The index is the base-p value of the element's coefficient vector over the
/// prime field, constant term as least significant digit; index 0 is the
/// additive and index 1 the multiplicative identity.
class FieldElement {
public:
    FieldElement() = default;

    /// Handle to the owning field; cheap (shared state).
    Field field() const;
    std::uint32_t index() const { return index_; }
    bool is_zero() const { return index_ == 0; }
    bool is_one() const { return index_ == 1; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    friend class Field;
    FieldElement(std::shared_ptr<const class FieldImpl> owner, std::uint32_t index)
        : owner_(std::move(owner)), index_(index) {}

    std::shared_ptr<const class FieldImpl> owner_;
    std::uint32_t index_ = 0;
};

struct FieldOptions {
    /// Rejects fields with more than this many elements.
    std::uint64_t order_limit = std::uint64_t{1} << 16;
    /// Extension fields with at most this many elements get exp/log tables;
    /// larger ones compute products digit-by-digit. 0 disables tables.
    std::uint64_t table_limit = std::uint64_t{1} << 12;
};

/// The finite field F_q, q = p^k. Construction is deterministic: for k > 1
/// the modulus is the lexicographically least monic irreducible of degree k
/// over F_p, coefficient indices compared from the constant term upward.
/// Immutable after construction; copies share state and are cheap.
class Field {
public:
    /// p must be prime, k >= 1, p^k within opts.order_limit.
    Field(std::uint32_t p, std::uint32_t k, const FieldOptions& opts = {});

    /// Factors q as p^k; rejects non-prime-powers.
    static Field from_order(std::uint64_t q, const FieldOptions& opts = {});

    std::uint32_t characteristic() const;
    std::uint32_t extension_degree() const;
    std::uint64_t order() const;
    /// Modulus coefficients over F_p, constant term first, monic, length k+1.
    /// Empty for prime fields (k = 1).
    const std::vector<std::uint32_t>& modulus() const;

    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }
    FieldElement element(std::uint64_t index) const;
    /// Element from its coefficient vector over F_p, constant term first.
    FieldElement from_digits(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> digits(const FieldElement& a) const;

    /// All q elements in increasing index order.
    std::vector<FieldElement> elements() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;  // a != 0
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    // Index-level arithmetic, used by polynomial inner loops.
    std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_index(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_index(std::uint32_t a) const;
    std::uint32_t inv_index(std::uint32_t a) const;

    /// Fields compare equal iff they have the same p and k (construction is
    /// deterministic, so such fields are identical).
    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b);

private:
    friend class FieldElement;
    explicit Field(std::shared_ptr<const class FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const class FieldImpl> impl_;
};

}  // namespace polyfam

#endif
