#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cgc/graph.hpp"

namespace cgc {

// Exhaustive graph isomorphism for small graphs: degree and neighbour-degree
// invariants first, then backtracking over degree-compatible candidates.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
    if (n == 0) return std::vector<Vertex>{};

    auto profile = [](const Graph& g, Vertex v) {
        std::vector<int> p{g.degree(v)};
        for (Vertex w : g.neighbours(v)) p.push_back(g.degree(w));
        std::sort(p.begin() + 1, p.end());
        return p;
    };
    std::vector<std::vector<int>> pa(n), pb(n);
    for (Vertex v = 0; v < n; ++v) {
        pa[v] = profile(a, v);
        pb[v] = profile(b, v);
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return true;
        for (Vertex c = 0; c < n; ++c) {
            if (used[c] || pa[v] != pb[c]) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (a.adjacent(u, v) != b.adjacent(map[u], c)) ok = false;
            if (!ok) continue;
            map[v] = c;
            used[c] = 1;
            if (self(self, v + 1)) return true;
            used[c] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

} // namespace cgc
