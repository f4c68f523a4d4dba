#pragma once

#include <vector>

#include "cgc/graph.hpp"

namespace cgc {

// All k-vertex cliques, each sorted ascending, enumerated in lexicographic
// order. k = 1 yields every vertex. Generators rely on this exact order for
// deterministic vertex numbering.
inline std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int k) {
    std::vector<std::vector<Vertex>> out;
    if (k <= 0) return out;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < g.num_vertices(); ++v) {
            bool ok = true;
            for (Vertex u : cur)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Maximal cliques via Bron-Kerbosch with pivoting. Sorted sets.
inline std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> R;
    auto bk = [&](auto&& self, std::vector<Vertex> P, std::vector<Vertex> X) -> void {
        if (P.empty() && X.empty()) {
            out.push_back(R);
            return;
        }
        // pivot: vertex of P∪X with most neighbours in P
        Vertex pivot = -1;
        int best = -1;
        for (const auto& side : {P, X})
            for (Vertex u : side) {
                int cnt = 0;
                for (Vertex v : P)
                    if (g.adjacent(u, v)) ++cnt;
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        std::vector<Vertex> cand;
        for (Vertex v : P)
            if (pivot < 0 || !g.adjacent(pivot, v)) cand.push_back(v);
        for (Vertex v : cand) {
            std::vector<Vertex> P2, X2;
            for (Vertex u : P)
                if (g.adjacent(u, v)) P2.push_back(u);
            for (Vertex u : X)
                if (g.adjacent(u, v)) X2.push_back(u);
            R.push_back(v);
            self(self, std::move(P2), std::move(X2));
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.insert(std::lower_bound(X.begin(), X.end(), v), v);
        }
    };
    std::vector<Vertex> P(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) P[v] = v;
    bk(bk, std::move(P), {});
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j])) return false;
    return true;
}

} // namespace cgc
