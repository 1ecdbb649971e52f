#include "polyfam/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "polyfam/constructions.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/irreducible.hpp"

namespace polyfam {
namespace {

std::uint64_t checked_pow(std::uint64_t q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q)
            throw guard_error("q^" + std::to_string(e) + " overflows 64 bits");
        r *= q;
    }
    return r;
}

}  // namespace

int gcd_degree(const Poly& a, const Poly& b) {
    if (!a.is_monic() || !b.is_monic())
        throw std::invalid_argument("gcd_degree requires monic nonzero inputs");
    return gcd(a, b).degree().value();
}

bool is_ell_intersecting(const Family& fam, int ell) {
    if (ell < 0) throw std::invalid_argument("level must be >= 0");
    const auto& ms = fam.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (gcd_degree(ms[i], ms[j]) < ell) return false;
    return true;
}

int realized_level(const Family& fam) {
    const auto& ms = fam.members();
    if (ms.size() == 1) return fam.min_degree();
    int level = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            level = std::min(level, gcd_degree(ms[i], ms[j]));
    return level;
}

bool is_k_wise_intersecting(const Family& fam, int k, int ell, std::uint64_t guard) {
    if (k < 2) throw std::invalid_argument("k-wise intersection requires k >= 2");
    if (ell < 0) throw std::invalid_argument("level must be >= 0");
    const auto& ms = fam.members();
    const std::size_t n = ms.size();
    if (static_cast<std::size_t>(k) > n) return true;  // no k-subsets

    // binomial(n, k), bailing out once past the guard
    std::uint64_t subsets = 1;
    for (int i = 1; i <= k; ++i) {
        if (subsets > guard)
            throw guard_error("number of k-subsets exceeds the guard " +
                              std::to_string(guard));
        subsets = subsets * (n - k + i) / i;
    }
    if (subsets > guard)
        throw guard_error("number of k-subsets exceeds the guard " + std::to_string(guard));

    // Iterate k-subsets by index vector in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Poly g = ms[idx[0]];
        for (int i = 1; i < k; ++i) {
            g = gcd(g, ms[idx[i]]);
            if (g.degree() < ell) break;
        }
        if (g.degree() < ell) return false;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
}

Poly family_common_divisor(const Family& fam) {
    Poly g = fam.members().front();
    for (std::size_t i = 1; i < fam.size(); ++i) {
        g = gcd(g, fam.members()[i]);
        if (g.is_one()) break;
    }
    return g;
}

WitnessReport check_irreducible_witnesses(const Family& fam, int ell) {
    if (!fam.uniform_degree())
        throw std::invalid_argument("witness check requires a uniform-degree family");
    const int n = fam.min_degree();
    if (ell < 0 || ell > n)
        throw std::invalid_argument("level must lie in [0, n]");
    WitnessReport report{true, {}};
    if (n == ell) return report;  // degree n - ell = 0: nothing to witness
    for (const Poly& f :
         enumerate_irreducible_monic(fam.field(), static_cast<std::uint32_t>(n - ell))) {
        bool witnessed = false;
        for (const Poly& m : fam.members())
            if (divides(f, m)) {
                witnessed = true;
                break;
            }
        if (!witnessed) report.missing.push_back(f);
    }
    report.all_present = report.missing.empty();
    return report;
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Trivial: return "Trivial";
        case FamilyKind::PrimaryConstruction: return "PrimaryConstruction";
        case FamilyKind::Exceptional: return "Exceptional";
        case FamilyKind::Other: return "Other";
    }
    throw std::logic_error("unknown family kind");
}

Classification classify_extremal(const Family& fam, int ell) {
    if (!fam.uniform_degree())
        throw std::invalid_argument("classification requires a uniform-degree family");
    const int n = fam.min_degree();
    if (ell < 0 || ell > n) throw std::invalid_argument("level must lie in [0, n]");
    const std::uint64_t bound = checked_pow(fam.field().order(), n - ell);
    if (fam.size() != bound)
        throw std::invalid_argument("family size " + std::to_string(fam.size()) +
                                    " is not the extremal size " + std::to_string(bound));
    if (!is_ell_intersecting(fam, ell))
        throw std::invalid_argument("family is not ell-intersecting at level " +
                                    std::to_string(ell));

    Classification out{FamilyKind::Other, family_common_divisor(fam), std::nullopt,
                       realized_level(fam)};
    const int t = out.common_divisor.degree().value();
    if (t >= ell) {
        out.kind = FamilyKind::Trivial;
        return out;
    }

    // Quotient by the common divisor: an extremal primary family of degree
    // n - t at level ell - t; match it against the fixed constructions.
    std::vector<Poly> quotient;
    quotient.reserve(fam.size());
    for (const Poly& m : fam.members()) quotient.push_back(m / out.common_divisor);
    std::sort(quotient.begin(), quotient.end());

    if (fam.field().order() == 2 && n - t == 3 &&
        quotient == exceptional_family().members()) {
        out.kind = FamilyKind::Exceptional;
        return out;
    }

    const int d = n - ell;  // equals (n - t) - (ell - t), the reduced parameter
    if (d >= 1 && quotient == primary_family(fam.field(), d).members()) {
        out.kind = FamilyKind::PrimaryConstruction;
        out.d = d;
        return out;
    }
    return out;
}

}  // namespace polyfam
