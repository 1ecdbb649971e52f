#include "polyfam/search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "polyfam/constructions.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/graph.hpp"

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

// Mixed-degree triviality: the members share a divisor of degree >= ell and,
// for each degree in the family, every monic multiple of it is present.
bool mixed_trivial(const Family& fam, int ell) {
    const Poly c = family_common_divisor(fam);
    if (c.degree() < ell) return false;
    for (int d : fam.degree_set()) {
        if (c.degree() > d) return false;
        std::vector<Poly> of_degree;
        for (const Poly& m : fam.members())
            if (m.degree() == d) of_degree.push_back(m);
        if (of_degree != trivial_family(c, d).members()) return false;
    }
    return true;
}

enum class Mode { theorem1, theorem4 };

SearchReport run(const Field& f, std::vector<int> degrees, int ell,
                 const SearchOptions& opts, Mode mode) {
    CompatibilityGraph g(f, std::move(degrees), ell, opts.vertex_limit);

    std::uint64_t bound = 0;
    for (int d : g.degrees()) bound += checked_pow(f.order(), d - ell);

    CliqueSearchOptions copts;
    copts.cap = opts.clique_cap;
    copts.threads = opts.threads;
    copts.timeout_seconds = opts.timeout_seconds;
    const CliqueSearchResult res = maximum_cliques(g, copts);

    SearchReport rep{f,
                     g.degrees(),
                     ell,
                     bound,
                     res.max_size,
                     res.clique_count,
                     res.truncated,
                     res.completed,
                     {},
                     std::nullopt};

    std::vector<Family> families;
    families.reserve(res.cliques.size());
    for (const auto& clique : res.cliques) {
        std::vector<Poly> members;
        members.reserve(clique.size());
        for (std::uint32_t v : clique) members.push_back(g.vertex(v));
        families.emplace_back(f, ell, std::move(members));
    }

    if (rep.completed) {
        if (rep.max_size_found != bound)
            throw internal_check_error(
                "maximum family size " + std::to_string(rep.max_size_found) +
                " differs from the predicted bound " + std::to_string(bound));

        for (const Family& fam : families) {
            std::string kind;
            if (mode == Mode::theorem1) {
                const Classification c = classify_extremal(fam, ell);
                if (c.kind == FamilyKind::Other)
                    throw internal_check_error(
                        "a maximum family failed to classify as Trivial, "
                        "PrimaryConstruction, or Exceptional");
                kind = to_string(c.kind);
            } else {
                if (!mixed_trivial(fam, ell))
                    throw internal_check_error(
                        "a non-trivial maximum family appeared in the mixed-degree "
                        "search");
                kind = to_string(FamilyKind::Trivial);
            }
            ++rep.classifications[kind];
        }

        if (mode == Mode::theorem1) {
            const int n = g.degrees().front();
            if (n > 2 * ell) {
                if (f.order() == 2 && n == 3 && ell == 1) {
                    const std::map<std::string, std::uint64_t> expected{
                        {"Exceptional", 1}, {"Trivial", 2}};
                    if (!rep.truncated && (rep.classifications != expected ||
                                           rep.maximum_family_count != 3))
                        throw internal_check_error(
                            "(q, n, level) = (2, 3, 1) must yield exactly 2 trivial "
                            "and 1 exceptional maximum families");
                } else if (rep.classifications.size() > 1 ||
                           (rep.classifications.size() == 1 &&
                            !rep.classifications.count("Trivial"))) {
                    throw internal_check_error(
                        "a non-trivial maximum family appeared although the degree "
                        "exceeds twice the level");
                }
            }
        }
    }

    if (opts.include_families) rep.families = std::move(families);
    return rep;
}

}  // namespace

SearchReport verify_theorem1(const Field& f, int n, int ell, const SearchOptions& opts) {
    if (n < 0 || ell < 0 || ell > n)
        throw std::invalid_argument("require 0 <= level <= degree");
    return run(f, {n}, ell, opts, Mode::theorem1);
}

SearchReport verify_theorem4(const Field& f, std::vector<int> degrees, int ell,
                             const SearchOptions& opts) {
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    if (degrees.size() < 2)
        throw std::invalid_argument(
            "mixed-degree verification needs at least two distinct degrees");
    if (ell < 0) throw std::invalid_argument("level must be >= 0");
    if (degrees.front() <= ell)
        throw std::invalid_argument("every degree must exceed the level");
    return run(f, std::move(degrees), ell, opts, Mode::theorem4);
}

}  // namespace polyfam
