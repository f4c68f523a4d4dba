#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/graph.hpp"
#include "cgc/limits.hpp"

namespace cgc {

namespace detail {

// Exact tree-depth by recursive vertex elimination:
//   td(connected G) = 1 + min over v of td(G - v),
//   td(G) = max over components otherwise.
// Memoized on induced-subgraph bitmasks of the input graph, which keeps the
// search well inside budget for the desk-scale graphs this oracle serves.
class TreeDepthSearch {
  public:
    explicit TreeDepthSearch(const Graph& g) : g_(g) {
        adj_.resize(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (Vertex w : g.neighbours(v)) adj_[v] |= std::uint64_t{1} << w;
    }

    int depth_of(std::uint64_t mask) {
        if (!mask) return 0;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;

        int result = 0;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t comp = component_of(lowest(rest), mask);
            rest &= ~comp;
            int d = connected_depth(comp);
            result = std::max(result, d);
        }
        memo_[mask] = result;
        return result;
    }

  private:
    const Graph& g_;
    std::vector<std::uint64_t> adj_;
    std::unordered_map<std::uint64_t, int> memo_;

    static std::uint64_t lowest(std::uint64_t m) { return m & (~m + 1); }

    std::uint64_t component_of(std::uint64_t seed, std::uint64_t mask) const {
        std::uint64_t comp = seed, frontier = seed;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj_[v] & mask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int connected_depth(std::uint64_t comp) {
        if (__builtin_popcountll(comp) == 1) return 1;
        auto it = memo_.find(comp);
        if (it != memo_.end()) return it->second;
        int best = __builtin_popcountll(comp);  // eliminating along any order
        std::uint64_t m = comp;
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int d = 1 + depth_of(comp & ~(std::uint64_t{1} << v));
            best = std::min(best, d);
            if (best == 1 + 1) break;  // a dominating vertex; cannot improve
        }
        memo_[comp] = best;
        return best;
    }
};

inline void check_depth_budget(const Graph& g, const Limits& lim, const char* who) {
    if (g.num_vertices() > lim.tree_depth_max_vertices)
        throw BudgetError(std::string(who) + ": " + std::to_string(g.num_vertices()) +
                          " vertices exceed budget of " +
                          std::to_string(lim.tree_depth_max_vertices));
    if (g.num_vertices() > 64) throw BudgetError(std::string(who) + ": more than 64 vertices");
}

} // namespace detail

inline int tree_depth(const Graph& g, const Limits& lim = Limits::defaults()) {
    detail::check_depth_budget(g, lim, "tree_depth");
    if (g.num_vertices() == 0) return 0;
    detail::TreeDepthSearch search(g);
    std::uint64_t all = g.num_vertices() == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << g.num_vertices()) - 1;
    return search.depth_of(all);
}

// Minimum depth of a single rooted tree whose closure contains G. Equals
// tree-depth unless two components attain it, in which case one extra level
// is needed to hang both under a shared root.
inline int connected_tree_depth(const Graph& g, const Limits& lim = Limits::defaults()) {
    detail::check_depth_budget(g, lim, "connected_tree_depth");
    if (g.num_vertices() == 0) return 0;
    auto comps = connected_components(g);
    int td = 0, attained = 0;
    for (const auto& c : comps) {
        int d = tree_depth(induced_subgraph(g, c), lim);
        if (d > td) {
            td = d;
            attained = 1;
        } else if (d == td) {
            ++attained;
        }
    }
    return attained >= 2 ? td + 1 : td;
}

} // namespace cgc
