#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgc/cliques.hpp"
#include "cgc/errors.hpp"
#include "cgc/graph.hpp"
#include "cgc/isomorphism.hpp"
#include "cgc/limits.hpp"
#include "cgc/prng.hpp"
#include "cgc/rooted_tree.hpp"

namespace cgc {

// Deterministic constructors for the named graph families. Every generator
// documents its vertex numbering so that models and tests are reproducible.

// n-fan: the n-vertex path 0..n-1 plus the dominant vertex n.
inline Graph fan(int n) {
    if (n < 1) throw InputError("fan: need n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) e.emplace_back(i, n);
    return build_graph(n + 1, e);
}

// n-fat star: centre 0, star leaves 1..n, and for each star edge (0,i) the n
// degree-2 vertices n + (i-1)*n + 1 .. n + i*n adjacent to both 0 and i.
inline Graph fat_star(int n) {
    if (n < 1) throw InputError("fat_star: need n >= 1");
    EdgeList e;
    for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
    int next = n + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j, ++next) {
            e.emplace_back(0, next);
            e.emplace_back(i, next);
        }
    return build_graph(1 + n + n * n, e);
}

// n-fat path: spine 0..n-1, and for each spine edge (i,i+1) the n degree-2
// vertices n + i*n .. n + i*n + n-1 adjacent to both ends.
inline Graph fat_path(int n) {
    if (n < 1) throw InputError("fat_path: need n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    int next = n;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j, ++next) {
            e.emplace_back(i, next);
            e.emplace_back(i + 1, next);
        }
    return build_graph(n * n, e);
}

// Rooted complete k-ary tree of depth h (h vertices on every root-to-leaf
// path). Heap numbering: root 0, children of i are k*i+1 .. k*i+k.
inline RootedTree complete_kary_tree(int h, int k) {
    if (h < 1 || k < 1) throw InputError("complete_kary_tree: need h,k >= 1");
    std::int64_t n = 0, level = 1;
    for (int d = 0; d < h; ++d) {
        n += level;
        level *= k;
        if (n > 1'000'000) throw BudgetError("complete_kary_tree: tree too large");
    }
    RootedTree t;
    t.n = static_cast<int>(n);
    t.root = 0;
    t.parent.resize(t.n);
    t.parent[0] = 0;
    for (int v = 1; v < t.n; ++v) t.parent[v] = (v - 1) / k;
    return t;
}

// Closure: edge between every strict ancestor-descendant pair.
inline Graph closure(const RootedTree& t) {
    validate_tree(t);
    EdgeList e;
    for (int v = 0; v < t.n; ++v)
        for (int a : tree_ancestors(t, v)) e.emplace_back(a, v);
    return build_graph(t.n, e);
}

// Weak closure: edges only between each leaf and its strict ancestors.
inline Graph weak_closure(const RootedTree& t) {
    validate_tree(t);
    auto leaf = tree_leaves(t);
    EdgeList e;
    for (int v = 0; v < t.n; ++v)
        if (leaf[v])
            for (int a : tree_ancestors(t, v)) e.emplace_back(a, v);
    return build_graph(t.n, e);
}

// C(h,k) and W(h,k): closure / weak closure of the complete k-ary tree.
inline Graph tree_closure(int h, int k) { return closure(complete_kary_tree(h, k)); }
inline Graph tree_weak_closure(int h, int k) { return weak_closure(complete_kary_tree(h, k)); }

// G': c disjoint copies of G (copy j occupies j*|V(G)| ..) plus one dominant
// vertex with index c*|V(G)|.
inline Graph x_prime(const Graph& g, int c) {
    if (c < 1) throw InputError("x_prime: need c >= 1");
    if (g.num_vertices() == 0) throw InputError("x_prime: empty graph");
    Graph base = disjoint_copies(g, c);
    EdgeList e = base.edges();
    int dom = base.num_vertices();
    for (Vertex v = 0; v < dom; ++v) e.emplace_back(v, dom);
    return build_graph(dom + 1, e);
}

struct XOpResult {
    Graph graph;
    bool added = false;  // false: no suitable clique, input returned unchanged
};

// G+: for each k-clique D of G (all k-subsets inducing cliques, lexicographic
// order) add a stable set of k(c-1)+1 fresh vertices complete to D.
inline XOpResult x_plus(const Graph& g, int k, int c) {
    if (k < 2 || c < 1) throw InputError("x_plus: need k >= 2, c >= 1");
    auto cliques = cliques_of_size(g, k);
    if (cliques.empty()) return {g, false};
    EdgeList e = g.edges();
    int next = g.num_vertices();
    int per = k * (c - 1) + 1;
    for (const auto& d : cliques)
        for (int j = 0; j < per; ++j, ++next)
            for (Vertex u : d) e.emplace_back(u, next);
    return {build_graph(next, e), true};
}

// G++: for each (k-1)-clique D of G add a path of (c^2-1)(k-1)+(c+1) fresh
// vertices complete to D.
inline XOpResult x_plusplus(const Graph& g, int k, int c) {
    if (k < 3 || c < 1) throw InputError("x_plusplus: need k >= 3, c >= 1");
    auto cliques = cliques_of_size(g, k - 1);
    if (cliques.empty()) return {g, false};
    EdgeList e = g.edges();
    int next = g.num_vertices();
    int len = (c * c - 1) * (k - 1) + (c + 1);
    for (const auto& d : cliques) {
        for (int j = 0; j < len; ++j) {
            if (j + 1 < len) e.emplace_back(next + j, next + j + 1);
            for (Vertex u : d) e.emplace_back(u, next + j);
        }
        next += len;
    }
    return {build_graph(next, e), true};
}

// X_{k,c}: X_{1,c} = {P_{c+1}, K_{1,c}}; for k >= 2 apply G' and G+ to the
// previous level and (for k >= 3) G++ to the level below that. Breadth-first
// through the recursion, at most `budget` members kept per level, de-duplicated
// by isomorphism when both graphs are small enough (plain equality otherwise).
inline std::vector<Graph> x_family(int k, int c, int budget,
                                   const Limits& lim = Limits::defaults()) {
    if (k < 1 || c < 1) throw InputError("x_family: need k,c >= 1");
    if (budget <= 0) return {};

    auto push_unique = [&](std::vector<Graph>& level, Graph g) {
        if (static_cast<int>(level.size()) >= budget) return;
        for (const Graph& h : level) {
            if (g.num_vertices() <= lim.iso_dedup_max_vertices &&
                h.num_vertices() <= lim.iso_dedup_max_vertices) {
                if (is_isomorphic(g, h)) return;
            } else if (g == h) {
                return;
            }
        }
        level.push_back(std::move(g));
    };

    std::vector<std::vector<Graph>> levels(k + 1);
    push_unique(levels[1], path_graph(c + 1));
    if (k >= 1) push_unique(levels[1], star_graph(c));
    for (int lev = 2; lev <= k; ++lev) {
        for (const Graph& g : levels[lev - 1]) push_unique(levels[lev], x_prime(g, c));
        for (const Graph& g : levels[lev - 1]) {
            auto r = x_plus(g, lev, c);
            if (r.added) push_unique(levels[lev], std::move(r.graph));
        }
        if (lev >= 3)
            for (const Graph& g : levels[lev - 2]) {
                auto r = x_plusplus(g, lev, c);
                if (r.added) push_unique(levels[lev], std::move(r.graph));
            }
    }
    return levels[k];
}

// Lower-bound family G_k: G_2 = P_{c+1}; G_k is a spine path v_0..v_c with,
// per spine edge, 2c-1 disjoint copies of G_{k-1} joined completely to both
// spine ends. Spine occupies 0..c, then copies in spine-edge order.
inline Graph ternary_lower_bound(int k, int c, const Limits& lim = Limits::defaults()) {
    if (k < 2 || c < 1) throw InputError("ternary_lower_bound: need k >= 2, c >= 1");
    std::int64_t size = c + 1;
    for (int i = 3; i <= k; ++i) {
        size = (c + 1) + static_cast<std::int64_t>(c) * (2 * c - 1) * size;
        if (size > lim.ternary_max_vertices)
            throw BudgetError("ternary_lower_bound: " + std::to_string(size) +
                              " vertices exceed budget of " +
                              std::to_string(lim.ternary_max_vertices));
    }
    Graph g = path_graph(c + 1);
    for (int lev = 3; lev <= k; ++lev) {
        const Graph inner = g;
        EdgeList e;
        for (int i = 0; i < c; ++i) e.emplace_back(i, i + 1);
        int next = c + 1;
        for (int i = 0; i < c; ++i)
            for (int copy = 0; copy < 2 * c - 1; ++copy) {
                for (const auto& [u, v] : inner.edges()) e.emplace_back(next + u, next + v);
                for (int u = 0; u < inner.num_vertices(); ++u) {
                    e.emplace_back(i, next + u);
                    e.emplace_back(i + 1, next + u);
                }
                next += inner.num_vertices();
            }
        g = build_graph(next, e);
    }
    return g;
}

// Join of H onto G along the clique S: disjoint union (H shifted by |V(G)|)
// plus all edges between S and V(H).
inline Graph decorate(const Graph& g, const Graph& h, const std::vector<Vertex>& s) {
    for (Vertex v : s)
        if (!g.in_range(v)) throw InputError("decorate: S vertex out of range");
    if (!is_clique(g, s)) throw InputError("decorate: S does not induce a clique");
    Graph base = disjoint_union(g, h);
    EdgeList e = base.edges();
    for (Vertex u : s)
        for (int w = 0; w < h.num_vertices(); ++w) e.emplace_back(u, g.num_vertices() + w);
    return build_graph(base.num_vertices(), e);
}

// Seeded G(n,p): pairs (i,j), i<j, in lexicographic order; one splitmix64
// draw per pair, edge present iff next_double() < p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InputError("random_graph: p outside [0,1]");
    SplitMix64 rng(seed);
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) e.emplace_back(i, j);
    return build_graph(n, e);
}

// Seeded random tree with a degree cap: vertex v >= 1 attaches to a uniformly
// drawn earlier vertex, redrawing while the candidate is saturated.
inline Graph random_tree(int n, int max_degree, std::uint64_t seed) {
    if (n < 1) throw InputError("random_tree: need n >= 1");
    if (max_degree < 2 && n > 2) throw InputError("random_tree: max_degree too small");
    SplitMix64 rng(seed);
    EdgeList e;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        int u;
        do {
            u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
        } while (deg[u] >= max_degree);
        e.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    return build_graph(n, e);
}

} // namespace cgc
