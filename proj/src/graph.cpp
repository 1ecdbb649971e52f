#include "polyfam/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyfam/errors.hpp"
#include "polyfam/verifier.hpp"

namespace polyfam {

CompatibilityGraph::CompatibilityGraph(const Field& f, std::vector<int> degrees,
                                       int ell, std::uint64_t vertex_limit)
    : field_(f), degrees_(std::move(degrees)), ell_(ell) {
    if (degrees_.empty()) throw std::invalid_argument("degree set must be nonempty");
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
    if (degrees_.front() < 0) throw std::invalid_argument("degrees must be >= 0");
    if (ell_ < 0) throw std::invalid_argument("level must be >= 0");
    if (ell_ > degrees_.front())
        throw std::invalid_argument("level " + std::to_string(ell_) +
                                    " exceeds the smallest degree " +
                                    std::to_string(degrees_.front()));

    const std::uint64_t q = field_.order();
    std::uint64_t total = 0;
    for (int d : degrees_) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) {
            if (count > vertex_limit / q)
                throw guard_error("vertex count exceeds the limit " +
                                  std::to_string(vertex_limit));
            count *= q;
        }
        total += count;
        if (total > vertex_limit)
            throw guard_error("vertex count " + std::to_string(total) +
                              " exceeds the limit " + std::to_string(vertex_limit));
    }

    vertices_.reserve(total);
    for (int d : degrees_)
        for (Poly& p : enumerate_monic(field_, static_cast<std::uint32_t>(d), vertex_limit))
            vertices_.push_back(std::move(p));

    const std::size_t n = vertices_.size();
    words_ = (n + 63) / 64;
    adjacency_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (gcd_degree(vertices_[i], vertices_[j]) >= ell_) {
                adjacency_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                adjacency_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
                ++edges_;
            }
        }
    }
}

}  // namespace polyfam
