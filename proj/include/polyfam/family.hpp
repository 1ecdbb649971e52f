#ifndef POLYFAM_FAMILY_HPP
#define POLYFAM_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "polyfam/poly.hpp"

namespace polyfam {

/// A nonempty set of monic polynomials over one field together with a declared
/// intersection level ell. Members are kept canonically sorted by
/// (degree, poly_index) and pairwise distinct; ell never exceeds the smallest
/// member degree. The declared level is nominal — the realized level of a
/// family may be higher; see the verifier.
class Family {
public:
    /// Canonicalizes (sorts) the members. Rejects empty member lists,
    /// duplicates, non-monic members, mixed fields, negative ell, and
    /// ell > min degree.
    Family(const Field& f, int ell, std::vector<Poly> members);

    const Field& field() const { return field_; }
    int ell() const { return ell_; }
    const std::vector<Poly>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// Sorted distinct member degrees.
    const std::vector<int>& degree_set() const { return degree_set_; }
    int min_degree() const { return degree_set_.front(); }
    /// True iff all members have the same degree.
    bool uniform_degree() const { return degree_set_.size() == 1; }

    friend bool operator==(const Family& a, const Family& b);
    friend bool operator!=(const Family& a, const Family& b) { return !(a == b); }

private:
    Field field_;
    int ell_;
    std::vector<Poly> members_;
    std::vector<int> degree_set_;
};

}  // namespace polyfam

#endif
