#pragma once

// Independent brute-force oracles used only by the test suite. These must not
// share logic with the library implementations they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "cgc/graph.hpp"

namespace testor {

// All-pairs shortest paths by Floyd-Warshall (vs BFS layering).
inline std::vector<std::vector<int>> floyd_warshall(const cgc::Graph& g) {
    int n = g.num_vertices();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Treewidth by trying every elimination order (n <= 8).
inline int treewidth_by_permutations(const cgc::Graph& g) {
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(n, 0);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && w != v && adj[v][w]) nb.push_back(w);
            width = std::max(width, static_cast<int>(nb.size()));
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    adj[nb[i]][nb[j]] = adj[nb[j]][nb[i]] = 1;
            gone[v] = 1;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Minimum depth of a single rooted tree whose closure contains g, by direct
// recursion over root choices (an extra non-graph root is the +1 branch).
inline int ctd_by_root_recursion(const cgc::Graph& g,
                                 std::map<std::vector<cgc::Vertex>, int>* memo = nullptr) {
    std::map<std::vector<cgc::Vertex>, int> local;
    if (!memo) memo = &local;
    std::vector<cgc::Vertex> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);

    auto rec = [&](auto&& self, std::vector<cgc::Vertex> verts) -> int {
        if (verts.empty()) return 0;
        auto it = memo->find(verts);
        if (it != memo->end()) return it->second;
        cgc::Graph sub = cgc::induced_subgraph(g, verts);
        int best = static_cast<int>(verts.size()) + 1;
        // root hosted by a vertex: components of sub - r become branches
        for (std::size_t ri = 0; ri < verts.size(); ++ri) {
            std::vector<cgc::Vertex> rest;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (j != ri) rest.push_back(verts[j]);
            std::vector<cgc::Vertex> restLocal;
            cgc::Graph subRest = cgc::induced_subgraph(g, rest, &restLocal);
            int worst = 0;
            for (const auto& comp : cgc::connected_components(subRest)) {
                std::vector<cgc::Vertex> compOrig;
                for (cgc::Vertex v : comp) compOrig.push_back(restLocal[v]);
                std::sort(compOrig.begin(), compOrig.end());
                worst = std::max(worst, self(self, compOrig));
            }
            best = std::min(best, 1 + worst);
        }
        (*memo)[verts] = best;
        return best;
    };

    int vertex_rooted = rec(rec, all);
    // extra root above everything: one level plus the forest depth
    int worst = 0;
    for (const auto& comp : cgc::connected_components(g))
        worst = std::max(worst, rec(rec, comp));
    int extra_rooted = g.num_vertices() == 0 ? 0 : 1 + worst;
    return std::min(vertex_rooted, extra_rooted);
}

// Exhaustive minor test for tiny hosts: every map V(G) -> {branch 0..h-1, unused}.
inline bool minor_by_assignment(const cgc::Graph& g, const cgc::Graph& h) {
    int n = g.num_vertices(), hn = h.num_vertices();
    if (hn == 0) return true;
    if (hn > n) return false;
    std::vector<int> assign(n, -1);
    auto valid = [&]() {
        std::vector<std::vector<cgc::Vertex>> sets(hn);
        for (int v = 0; v < n; ++v)
            if (assign[v] >= 0) sets[assign[v]].push_back(v);
        for (const auto& s : sets)
            if (s.empty()) return false;
        for (int x = 0; x < hn; ++x)
            if (!cgc::is_connected_set(g, sets[x])) return false;
        for (auto [x, y] : h.edges()) {
            bool hit = false;
            for (cgc::Vertex u : sets[x]) {
                for (cgc::Vertex v : sets[y])
                    if (g.adjacent(u, v)) {
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
            if (!hit) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return valid();
        for (int c = -1; c < hn; ++c) {
            assign[v] = c;
            if (self(self, v + 1)) return true;
        }
        assign[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

// Minimum colours for clustering <= c by complete enumeration (tiny graphs).
inline int cluster_chromatic_by_enumeration(const cgc::Graph& g, int c) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, 0);
        auto feasible = [&]() {
            for (int start = 0; start < n; ++start) {
                // component of start within its colour class
                std::vector<cgc::Vertex> comp{start};
                std::vector<char> seen(n, 0);
                seen[start] = 1;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (cgc::Vertex w : g.neighbours(comp[i]))
                        if (!seen[w] && col[w] == col[start]) {
                            seen[w] = 1;
                            comp.push_back(w);
                        }
                if (static_cast<int>(comp.size()) > c) return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int v) -> bool {
            if (v == n) return feasible();
            for (int q = 0; q < k; ++q) {
                col[v] = q;
                if (self(self, v + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) return k;
    }
    return n;
}

} // namespace testor
