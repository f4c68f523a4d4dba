#pragma once

#include <vector>

#include "cgc/errors.hpp"
#include "cgc/graph.hpp"

namespace cgc {

// Parent-array rooted tree. The root's parent is itself. Node depth counts
// vertices on the root path, so the root has depth 1.
struct RootedTree {
    int n = 0;
    std::vector<int> parent;  // parent[root] == root
    int root = 0;

    bool is_root(int v) const { return parent[v] == v; }
};

inline void validate_tree(const RootedTree& t) {
    if (t.n <= 0 || static_cast<int>(t.parent.size()) != t.n)
        throw InputError("RootedTree: bad node count");
    if (t.root < 0 || t.root >= t.n || t.parent[t.root] != t.root)
        throw InputError("RootedTree: bad root");
    for (int v = 0; v < t.n; ++v) {
        if (t.parent[v] < 0 || t.parent[v] >= t.n) throw InputError("RootedTree: parent out of range");
        // every node must reach the root without cycling
        int u = v, steps = 0;
        while (u != t.root) {
            u = t.parent[u];
            if (++steps > t.n) throw InputError("RootedTree: parent pointers cyclic");
        }
    }
    int roots = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.parent[v] == v) ++roots;
    if (roots != 1) throw InputError("RootedTree: exactly one root required");
}

inline std::vector<int> tree_depths(const RootedTree& t) {
    std::vector<int> d(t.n, 0);
    for (int v = 0; v < t.n; ++v) {
        if (d[v]) continue;
        // walk to the first node with a known depth
        std::vector<int> path;
        int u = v;
        while (!d[u] && u != t.root) {
            path.push_back(u);
            u = t.parent[u];
        }
        int base = d[u] ? d[u] : (d[u] = 1, 1);
        for (auto it = path.rbegin(); it != path.rend(); ++it) d[*it] = ++base;
    }
    return d;
}

inline int tree_height(const RootedTree& t) {
    int h = 0;
    for (int d : tree_depths(t)) h = std::max(h, d);
    return h;
}

inline std::vector<std::vector<int>> tree_children(const RootedTree& t) {
    std::vector<std::vector<int>> ch(t.n);
    for (int v = 0; v < t.n; ++v)
        if (v != t.root) ch[t.parent[v]].push_back(v);
    return ch;
}

inline std::vector<bool> tree_leaves(const RootedTree& t) {
    std::vector<bool> leaf(t.n, true);
    for (int v = 0; v < t.n; ++v)
        if (v != t.root) leaf[t.parent[v]] = false;
    if (t.n == 1) leaf[t.root] = true;
    return leaf;
}

// Strict ancestors of v, nearest first.
inline std::vector<int> tree_ancestors(const RootedTree& t, int v) {
    std::vector<int> anc;
    int u = v;
    while (u != t.root) {
        u = t.parent[u];
        anc.push_back(u);
    }
    return anc;
}

} // namespace cgc
