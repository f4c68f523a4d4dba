#pragma once

#include <queue>
#include <string>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/graph.hpp"

namespace cgc {

// BFS layering V_0, V_1, ... of a connected graph from a root: V_i is the set
// of vertices at distance exactly i. Every edge joins vertices in the same or
// adjacent layers.
struct BFSLayering {
    Vertex root = 0;
    std::vector<int> layer;                 // per-vertex distance from root
    std::vector<std::vector<Vertex>> layers;
};

inline BFSLayering bfs_layering(const Graph& g, Vertex r) {
    if (!g.in_range(r)) throw InputError("bfs_layering: root out of range");
    int n = g.num_vertices();
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbours(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    for (Vertex v = 0; v < n; ++v)
        if (dist[v] < 0)
            throw InputError("bfs_layering: graph disconnected, vertex " + std::to_string(v) +
                             " unreachable from root " + std::to_string(r));
    BFSLayering out;
    out.root = r;
    out.layer = dist;
    int depth = 0;
    for (int d : dist) depth = std::max(depth, d);
    out.layers.assign(depth + 1, {});
    for (Vertex v = 0; v < n; ++v) out.layers[dist[v]].push_back(v);
    return out;
}

// BFS parent tree with minimum-index tie-breaking: the parent of v is the
// least-index neighbour of v in the previous layer. parent[r] == r.
inline std::vector<Vertex> bfs_parents(const Graph& g, const BFSLayering& l) {
    std::vector<Vertex> parent(g.num_vertices(), -1);
    parent[l.root] = l.root;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (v == l.root) continue;
        for (Vertex w : g.neighbours(v))
            if (l.layer[w] == l.layer[v] - 1) {
                parent[v] = w;  // neighbours sorted, first hit is least
                break;
            }
    }
    return parent;
}

// Shortest u..v path (inclusive) with minimum-index tie-breaking, inside the
// subgraph induced by `allowed` (empty = whole graph). Returns {} if none.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                         const std::vector<char>& allowed = {}) {
    auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
    if (!ok(from) || !ok(to)) return {};
    std::vector<Vertex> prev(g.num_vertices(), -1);
    std::queue<Vertex> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty() && prev[to] < 0) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbours(u))
            if (ok(w) && prev[w] < 0) {
                prev[w] = u;
                q.push(w);
            }
    }
    if (prev[to] < 0) return {};
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace cgc
