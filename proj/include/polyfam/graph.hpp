#ifndef POLYFAM_GRAPH_HPP
#define POLYFAM_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "polyfam/poly.hpp"

namespace polyfam {

inline constexpr std::uint64_t kDefaultVertexLimit = 4096;

/// The gcd-compatibility graph: vertices are all monic polynomials whose
/// degree lies in a given set, ordered by (degree, poly_index); vertices i, j
/// are adjacent iff gcd_degree(v_i, v_j) >= ell. Cliques are exactly the
/// ell-intersecting families on those degrees. Immutable after construction.
class CompatibilityGraph {
public:
    /// degrees must be nonempty with min(degrees) >= ell >= 0; the total
    /// vertex count Σ q^d must stay within vertex_limit.
    CompatibilityGraph(const Field& f, std::vector<int> degrees, int ell,
                       std::uint64_t vertex_limit = kDefaultVertexLimit);

    const Field& field() const { return field_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int ell() const { return ell_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    const Poly& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Poly>& vertices() const { return vertices_; }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
    /// Bitset adjacency row of vertex i (words_per_row() 64-bit words).
    const std::uint64_t* row(std::size_t i) const {
        return adjacency_.data() + i * words_;
    }
    std::size_t words_per_row() const { return words_; }

    std::uint64_t edge_count() const { return edges_; }

private:
    Field field_;
    std::vector<int> degrees_;
    int ell_;
    std::vector<Poly> vertices_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adjacency_;
    std::uint64_t edges_ = 0;
};

}  // namespace polyfam

#endif
