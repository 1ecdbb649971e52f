#include "polyfam/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <utility>

#include "polyfam/errors.hpp"

namespace polyfam {
namespace {

using Clock = std::chrono::steady_clock;
using Words = std::vector<std::uint64_t>;

std::size_t popcount(const Words& a) {
    std::size_t c = 0;
    for (std::uint64_t w : a) c += std::popcount(w);
    return c;
}

bool any(const Words& a) {
    for (std::uint64_t w : a)
        if (w != 0) return true;
    return false;
}

// Lowest set bit position; a must be nonempty.
std::uint32_t lowest(const Words& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            return static_cast<std::uint32_t>(i * 64 + std::countr_zero(a[i]));
    throw std::logic_error("lowest() on an empty set");
}

void clear_bit(Words& a, std::uint32_t v) { a[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

void intersect_row(const Words& a, const std::uint64_t* row, Words& out) {
    out.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & row[i];
}

struct Shared {
    const CompatibilityGraph& g;
    bool use_deadline = false;
    Clock::time_point deadline{};
    std::atomic<bool> expired{false};

    bool deadline_hit() {
        if (!use_deadline) return false;
        if (expired.load(std::memory_order_relaxed)) return true;
        if (Clock::now() >= deadline) {
            expired.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }
};

// Greedy coloring of P over ascending vertex index; emits (vertex, color)
// sorted by color ascending, vertex ascending within a color. The color of a
// vertex bounds the size of any clique inside it and its predecessors.
void color_sort(const Shared& s, const Words& P,
                std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    out.clear();
    Words rest = P;
    std::uint32_t color = 0;
    Words cls;
    while (any(rest)) {
        ++color;
        cls = rest;
        while (any(cls)) {
            std::uint32_t v = lowest(cls);
            out.emplace_back(v, color);
            clear_bit(rest, v);
            clear_bit(cls, v);
            const std::uint64_t* row = s.g.row(v);
            for (std::size_t i = 0; i < cls.size(); ++i) cls[i] &= ~row[i];
        }
    }
}

// Phase 1: exact maximum clique size, branch-and-bound with the coloring
// bound (serial; the size is a single scalar, so determinism is automatic).
void expand(Shared& s, std::uint32_t cur, Words& P, std::uint32_t& best) {
    if (s.deadline_hit()) return;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
    color_sort(s, P, order);
    Words next;
    for (std::size_t idx = order.size(); idx-- > 0;) {
        auto [v, c] = order[idx];
        if (cur + c <= best) return;
        intersect_row(P, s.g.row(v), next);
        if (!any(next)) {
            best = std::max(best, cur + 1);
        } else {
            expand(s, cur + 1, next, best);  // next is rebuilt each iteration
        }
        clear_bit(P, v);
    }
}

struct TaskResult {
    std::uint64_t count = 0;
    std::vector<std::vector<std::uint32_t>> stored;
};

// Phase 2: enumerate every clique of size exactly omega. P holds forward
// candidates (indices above everything in R, adjacent to all of R), so each
// clique appears exactly once, and lowest-first iteration yields the cliques
// in lexicographic order of their sorted vertex lists.
void enumerate_max(Shared& s, std::vector<std::uint32_t>& R, Words& P,
                   std::uint32_t omega, std::uint64_t cap, TaskResult& out) {
    if (s.deadline_hit()) return;
    if (R.size() == omega) {
        ++out.count;
        if (out.stored.size() < cap) out.stored.push_back(R);
        return;
    }
    Words next;
    while (R.size() + popcount(P) >= omega) {
        std::uint32_t v = lowest(P);
        clear_bit(P, v);
        intersect_row(P, s.g.row(v), next);
        R.push_back(v);
        enumerate_max(s, R, next, omega, cap, out);  // next is rebuilt each iteration
        R.pop_back();
        if (s.deadline_hit()) return;
    }
}

}  // namespace

CliqueSearchResult maximum_cliques(const CompatibilityGraph& g,
                                   const CliqueSearchOptions& opts) {
    if (opts.cap == 0) throw std::invalid_argument("clique cap must be positive");
    if (opts.timeout_seconds < 0)
        throw std::invalid_argument("timeout must be >= 0");

    const std::size_t n = g.vertex_count();
    CliqueSearchResult result;
    if (n == 0) return result;

    Shared shared{g};
    if (opts.timeout_seconds > 0) {
        shared.use_deadline = true;
        shared.deadline =
            Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(opts.timeout_seconds));
    }

    const std::size_t words = g.words_per_row();
    Words all(words, 0);
    for (std::size_t v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);

    std::uint32_t best = 0;
    {
        Words p = all;
        expand(shared, 0, p, best);
    }
    if (shared.expired.load()) {
        result.max_size = best;  // lower bound only; the report is marked incomplete
        result.completed = false;
        return result;
    }
    result.max_size = best;

    // Phase 2: one task per first (lowest) clique vertex; results are merged
    // in vertex order, so the outcome is independent of thread count.
    std::vector<TaskResult> tasks(n);
    std::atomic<std::size_t> next_task{0};
    auto worker = [&]() {
        std::vector<std::uint32_t> R;
        Words p(words);
        for (;;) {
            std::size_t v = next_task.fetch_add(1, std::memory_order_relaxed);
            if (v >= n || shared.deadline_hit()) return;
            intersect_row(all, g.row(v), p);
            for (std::size_t w = 0; w < (v >> 6); ++w) p[w] = 0;
            p[v >> 6] &= ~((std::uint64_t{2} << (v & 63)) - 1);  // keep u > v only
            R.assign(1, static_cast<std::uint32_t>(v));
            enumerate_max(shared, R, p, best, opts.cap, tasks[v]);
        }
    };

    unsigned threads = opts.threads != 0 ? opts.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (shared.expired.load()) {
        result.completed = false;
        return result;
    }

    for (std::size_t v = 0; v < n; ++v) {
        result.clique_count += tasks[v].count;
        for (auto& c : tasks[v].stored) {
            if (result.cliques.size() >= opts.cap) break;
            result.cliques.push_back(std::move(c));
        }
    }
    result.truncated = result.clique_count > result.cliques.size();
    return result;
}

}  // namespace polyfam
