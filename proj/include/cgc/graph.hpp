#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgc/errors.hpp"

namespace cgc {

using Vertex = int;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Simple undirected graph on dense vertices 0..n-1. Immutable after
// construction; adjacency lists are kept sorted ascending, with no self-loops
// and no parallel edges. This is the universal carrier for every module.
class Graph {
  public:
    Graph() = default;

    explicit Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
        m_ = 0;
        for (const auto& nb : adj_) m_ += static_cast<int>(nb.size());
        m_ /= 2;
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool in_range(Vertex v) const { return v >= 0 && v < num_vertices(); }

    // Edges as (u,v) with u < v, lexicographically sorted.
    EdgeList edges() const {
        EdgeList out;
        out.reserve(m_);
        for (Vertex u = 0; u < num_vertices(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

// Validating constructor: rejects out-of-range endpoints and self-loops,
// collapses duplicate edge pairs.
inline Graph build_graph(int n, const EdgeList& edges) {
    if (n < 0) throw InputError("build_graph: negative vertex count");
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("build_graph: endpoint out of range: (" + std::to_string(u) +
                             "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InputError("build_graph: self-loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return Graph(std::move(adj));
}

inline Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle_graph: need n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

inline Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

// K_{a,b}: side A = 0..a-1, side B = a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return build_graph(a + b, e);
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

inline Graph empty_graph(int n) { return build_graph(n, {}); }

// Induced subgraph on `verts` (need not be sorted; duplicates rejected).
// New vertex i corresponds to verts_sorted[i]; the sorted map is returned
// through `to_old` when requested so callers can translate results back.
inline Graph induced_subgraph(const Graph& g, std::vector<Vertex> verts,
                              std::vector<Vertex>* to_old = nullptr) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw InputError("induced_subgraph: duplicate vertex");
    std::vector<int> idx(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        if (!g.in_range(verts[i])) throw InputError("induced_subgraph: vertex out of range");
        idx[verts[i]] = i;
    }
    EdgeList e;
    for (Vertex u : verts)
        for (Vertex v : g.neighbours(u))
            if (u < v && idx[v] >= 0) e.emplace_back(idx[u], idx[v]);
    if (to_old) *to_old = verts;
    return build_graph(static_cast<int>(verts.size()), e);
}

// Disjoint union; b's vertices are shifted by a.num_vertices().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    EdgeList e = a.edges();
    int off = a.num_vertices();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    return build_graph(off + b.num_vertices(), e);
}

inline Graph disjoint_copies(const Graph& g, int copies) {
    EdgeList e;
    for (int c = 0; c < copies; ++c) {
        int off = c * g.num_vertices();
        for (const auto& [u, v] : g.edges()) e.emplace_back(u + off, v + off);
    }
    return build_graph(copies * g.num_vertices(), e);
}

// Connected components, each sorted ascending, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex w : g.neighbours(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

// Connectivity of an arbitrary vertex set inside g (used by model validators).
inline bool is_connected_set(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    std::vector<Vertex> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(u))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == set.size();
}

} // namespace cgc
