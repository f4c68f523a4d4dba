#pragma once

#include <cstdint>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/graph.hpp"
#include "cgc/limits.hpp"

namespace cgc {

// Exact treewidth via dynamic programming over elimination orders
// (Bodlaender et al. style): TW(S) is the best width over orders eliminating
// exactly the vertices of S first, and the cost of eliminating v after S is
// the number of vertices outside S+v reachable from v through S.
//
// Conventions: the empty graph has treewidth -1, an edgeless nonempty graph 0.
inline int treewidth_exact(const Graph& g, const Limits& lim = Limits::defaults()) {
    int n = g.num_vertices();
    if (n > lim.treewidth_max_vertices)
        throw BudgetError("treewidth_exact: " + std::to_string(n) + " vertices exceed budget of " +
                          std::to_string(lim.treewidth_max_vertices));
    if (n == 0) return -1;

    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbours(v)) adj[v] |= std::uint32_t{1} << w;

    auto elimination_degree = [&](std::uint32_t eliminated, int v) {
        // vertices outside eliminated+v connected to v through eliminated
        std::uint32_t vbit = std::uint32_t{1} << v;
        std::uint32_t seen = vbit, frontier = vbit, reached = 0;
        while (frontier) {
            std::uint32_t nb = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = __builtin_ctz(f);
                f &= f - 1;
                nb |= adj[u];
            }
            nb &= ~seen;
            reached |= nb & ~eliminated;
            frontier = nb & eliminated;
            seen |= nb;
        }
        return __builtin_popcount(reached);
    };

    std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<int> tw(full + 1, 0);
    // iterate subsets in increasing numeric order; S\{v} < S so it is ready
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n;  // width never exceeds n-1; n is the over-estimate sentinel
        std::uint32_t m = s;
        while (m) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            std::uint32_t without = s & ~(std::uint32_t{1} << v);
            int cost = std::max(tw[without], elimination_degree(without, v));
            best = std::min(best, cost);
        }
        tw[s] = best;
        if (s == full) break;  // avoid overflow when full == UINT32_MAX
    }
    return tw[full];
}

} // namespace cgc
