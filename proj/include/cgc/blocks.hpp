#pragma once

#include <algorithm>
#include <vector>

#include "cgc/bfs.hpp"
#include "cgc/errors.hpp"
#include "cgc/graph.hpp"

namespace cgc {

// Block/cut-vertex decomposition of a connected graph, rooted at r. Each block
// is a maximal 2-connected subgraph, a bridge, or (for a single-vertex graph)
// an isolated vertex. Blocks are ordered by non-decreasing distance from r to
// their root; the block containing r is rooted at r, and every other block is
// rooted at the unique vertex separating it from r.
struct BlockForest {
    std::vector<std::vector<Vertex>> blocks;  // sorted vertex sets
    std::vector<Vertex> cut_vertices;         // sorted
    std::vector<Vertex> block_root;           // per block
    std::vector<int> parent_block;            // per block, -1 for blocks containing r
};

namespace detail {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<Vertex, Vertex>> estack;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockDfs(const Graph& gg)
        : g(gg), disc(gg.num_vertices(), -1), low(gg.num_vertices(), 0),
          is_cut(gg.num_vertices(), 0) {}

    void pop_block(const std::pair<Vertex, Vertex>& until) {
        std::vector<Vertex> verts;
        while (true) {
            auto e = estack.back();
            estack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run(Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex w : g.neighbours(u)) {
            if (disc[w] < 0) {
                ++children;
                estack.emplace_back(u, w);
                run(w, u);
                low[u] = std::min(low[u], low[w]);
                if ((parent >= 0 && low[w] >= disc[u]) || (parent < 0 && children > 1))
                    is_cut[u] = 1;
                if (low[w] >= disc[u]) pop_block({u, w});
            } else if (w != parent && disc[w] < disc[u]) {
                estack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

} // namespace detail

inline BlockForest block_decomposition(const Graph& g, Vertex r) {
    if (!g.in_range(r)) throw InputError("block_decomposition: root out of range");
    if (!is_connected(g)) throw InputError("block_decomposition: graph disconnected");

    BlockForest out;
    if (g.num_vertices() == 1) {
        out.blocks = {{0}};
        out.block_root = {r};
        out.parent_block = {-1};
        return out;
    }

    detail::BlockDfs dfs(g);
    dfs.run(r, -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (dfs.is_cut[v]) out.cut_vertices.push_back(v);

    auto layer = bfs_layering(g, r);

    // Root of a block: r if present, else its unique vertex nearest to r
    // (that vertex is the cut vertex separating the block from r).
    int b = static_cast<int>(dfs.blocks.size());
    std::vector<Vertex> root(b);
    std::vector<int> rootdist(b);
    for (int i = 0; i < b; ++i) {
        Vertex best = dfs.blocks[i][0];
        for (Vertex v : dfs.blocks[i])
            if (layer.layer[v] < layer.layer[best]) best = v;
        root[i] = best;
        rootdist[i] = layer.layer[best];
    }

    std::vector<int> order(b);
    for (int i = 0; i < b; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int c) { return rootdist[a] < rootdist[c]; });

    std::vector<int> owner(g.num_vertices(), -1);  // first block (in order) owning v
    for (int pos = 0; pos < b; ++pos) {
        int i = order[pos];
        out.blocks.push_back(dfs.blocks[i]);
        out.block_root.push_back(root[i]);
        out.parent_block.push_back(root[i] == r ? -1 : owner[root[i]]);
        for (Vertex v : dfs.blocks[i])
            if (owner[v] < 0) owner[v] = pos;
    }
    return out;
}

// A block graph: connected with no cut vertex. Covers K_1, K_2 and all
// 2-connected graphs.
inline bool is_block(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.num_vertices() <= 2) return true;
    return block_decomposition(g, 0).blocks.size() == 1;
}

inline bool is_two_connected(const Graph& g) {
    return g.num_vertices() >= 3 && is_block(g);
}

} // namespace cgc
