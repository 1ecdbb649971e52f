#ifndef POLYFAM_CLIQUE_HPP
#define POLYFAM_CLIQUE_HPP

#include <cstdint>
#include <vector>

#include "polyfam/graph.hpp"

namespace polyfam {

inline constexpr std::uint64_t kDefaultCliqueCap = 100'000;

struct CliqueSearchOptions {
    /// Maximum number of maximum cliques stored in the result. The total
    /// count stays exact beyond the cap; only storage is truncated. Must be
    /// positive.
    std::uint64_t cap = kDefaultCliqueCap;
    /// Worker threads; 0 means hardware concurrency. The result is identical
    /// for every thread count.
    unsigned threads = 0;
    /// Wall-clock budget in seconds; 0 disables the deadline. On expiry the
    /// result is returned with completed = false and must not be trusted.
    double timeout_seconds = 0.0;
};

struct CliqueSearchResult {
    /// Exact maximum clique size (0 only for the empty graph).
    std::size_t max_size = 0;
    /// Maximum cliques as sorted vertex-index lists, in lexicographic order;
    /// at most `cap` are stored.
    std::vector<std::vector<std::uint32_t>> cliques;
    /// Exact number of maximum cliques, counted past the storage cap.
    std::uint64_t clique_count = 0;
    /// True iff clique_count exceeds the number of stored cliques.
    bool truncated = false;
    /// False iff the deadline expired before the search finished.
    bool completed = true;
};

/// Exact maximum clique size by branch-and-bound with a greedy-coloring
/// bound, followed by exhaustive enumeration of all maximum cliques.
/// Deterministic: output is independent of thread count and schedule.
CliqueSearchResult maximum_cliques(const CompatibilityGraph& g,
                                   const CliqueSearchOptions& opts = {});

}  // namespace polyfam

#endif
