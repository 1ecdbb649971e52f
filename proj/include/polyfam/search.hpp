#ifndef POLYFAM_SEARCH_HPP
#define POLYFAM_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfam/clique.hpp"
#include "polyfam/family.hpp"
#include "polyfam/verifier.hpp"

namespace polyfam {

struct SearchOptions {
    std::uint64_t clique_cap = kDefaultCliqueCap;
    unsigned threads = 0;  // 0 = hardware concurrency
    double timeout_seconds = 0.0;  // 0 = no deadline
    std::uint64_t vertex_limit = kDefaultVertexLimit;
    /// Include the maximum families themselves in the report.
    bool include_families = false;
};

/// Certificate of one search run. `classifications` is a histogram over the
/// stored maximum families, keyed by kind name. For uniform-degree runs the
/// kinds come from classify_extremal; for mixed-degree runs a family counts
/// as Trivial iff its common divisor has degree >= ell and, for each degree,
/// it contains every monic multiple of that divisor, and as Other otherwise.
struct SearchReport {
    Field field;
    std::vector<int> degrees;
    int ell = 0;
    std::uint64_t predicted_bound = 0;  // q^{n-ell}, or Σ q^{d-ell} over degrees
    std::uint64_t max_size_found = 0;
    std::uint64_t maximum_family_count = 0;
    bool truncated = false;
    bool completed = true;
    std::map<std::string, std::uint64_t> classifications;
    std::optional<std::vector<Family>> families;
};

/// Maximum-clique search over all monic polynomials of degree n with
/// pairwise gcd threshold ell, with the bound and classification statements
/// asserted (violations raise internal_check_error):
///   - max_size_found == q^{n-ell};
///   - no stored maximum family classifies as Other;
///   - when n > 2*ell, every stored maximum family is Trivial, except at
///     (q, n, ell) = (2, 3, 1) where the histogram is exactly
///     {Trivial: 2, Exceptional: 1}.
/// If the deadline expires the report has completed = false and no
/// assertions are made.
SearchReport verify_theorem1(const Field& f, int n, int ell,
                             const SearchOptions& opts = {});

/// Mixed-degree search: at least two distinct degrees, all > ell. Asserts
/// max_size_found == Σ q^{d-ell} and that every stored maximum family is
/// Trivial in the mixed sense described above.
SearchReport verify_theorem4(const Field& f, std::vector<int> degrees, int ell,
                             const SearchOptions& opts = {});

}  // namespace polyfam

#endif
