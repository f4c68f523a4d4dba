#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgc/graph.hpp"
#include "cgc/limits.hpp"
#include "cgc/minor.hpp"

namespace cgc {

struct SubgraphResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<std::vector<Vertex>> injection;  // pattern vertex -> host vertex
    std::uint64_t nodes_used = 0;

    bool yes() const { return status == SearchStatus::Yes; }
    bool no() const { return status == SearchStatus::No; }
};

// Exhaustive subgraph containment (not induced): an injective map preserving
// adjacency. Backtracking over a most-constrained pattern order with degree
// pruning.
inline SubgraphResult has_subgraph(const Graph& host, const Graph& pattern,
                                   const Limits& lim = Limits::defaults()) {
    SubgraphResult r;
    int hn = host.num_vertices(), pn = pattern.num_vertices();
    if (pn > hn || pattern.num_edges() > host.num_edges()) {
        r.status = SearchStatus::No;
        return r;
    }
    if (pn == 0) {
        r.status = SearchStatus::Yes;
        r.injection = std::vector<Vertex>{};
        return r;
    }

    // place high-degree pattern vertices first, preferring anchored ones
    std::vector<int> order;
    {
        std::vector<char> placed(pn, 0);
        for (int step = 0; step < pn; ++step) {
            int best = -1, bestAnchored = -1, bestDeg = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[v]) continue;
                int anchored = 0;
                for (int u : pattern.neighbours(v))
                    if (placed[u]) ++anchored;
                if (anchored > bestAnchored ||
                    (anchored == bestAnchored && pattern.degree(v) > bestDeg)) {
                    best = v;
                    bestAnchored = anchored;
                    bestDeg = pattern.degree(v);
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    std::vector<Vertex> map(pn, -1);
    std::vector<char> used(hn, 0);
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto rec = [&](auto&& self, int i) -> bool {
        if (++nodes > lim.search_nodes) {
            out_of_budget = true;
            return false;
        }
        if (i == pn) return true;
        int x = order[i];
        for (Vertex v = 0; v < hn; ++v) {
            if (used[v] || host.degree(v) < pattern.degree(x)) continue;
            bool ok = true;
            for (Vertex y : pattern.neighbours(x)) {
                if (map[y] >= 0 && !host.adjacent(v, map[y])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[x] = v;
            used[v] = 1;
            if (self(self, i + 1)) return true;
            if (out_of_budget) return false;
            used[v] = 0;
            map[x] = -1;
        }
        return false;
    };

    bool found = rec(rec, 0);
    r.nodes_used = nodes;
    if (found) {
        r.status = SearchStatus::Yes;
        r.injection = map;
    } else {
        r.status = out_of_budget ? SearchStatus::Indeterminate : SearchStatus::No;
    }
    return r;
}

// Longest-path helper: a simple path on exactly `len` vertices, if one exists.
// Used to locate the k-vertex path hypothesis of the fat-minor extraction.
inline std::optional<std::vector<Vertex>> find_path_of_length(const Graph& g, int len,
                                                              const Limits& lim = Limits::defaults()) {
    if (len <= 0) return std::vector<Vertex>{};
    auto res = has_subgraph(g, path_graph(len), lim);
    if (!res.yes()) return std::nullopt;
    return res.injection;  // path_graph vertices are already in path order
}

} // namespace cgc
