#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/generators.hpp"
#include "cgc/graph.hpp"
#include "cgc/minor.hpp"
#include "cgc/rooted_tree.hpp"

namespace cgc {

// Output of the weak-closure splitting operation: two models of W(h,k) whose
// vertex supports share at most one host vertex.
struct SplitResult {
    MinorModel first, second;
};

namespace detail {

struct SplitContext {
    int h, bigK, k;                    // pattern is W(h, 6k); outputs are W(h, k)
    RootedTree bigTree;                // T(h, 6k)
    std::vector<std::vector<int>> children;
    std::vector<int> leaves;           // leaf node ids, ascending
    std::vector<int> leafIndex;        // node id -> position in `leaves`, else -1

    // Q: the max-degree-3 expansion of a spanning tree of J_r
    struct QNode {
        int owner;            // J_r host vertex this copy carries
        int pendant_leaf;     // big-tree leaf id when this is an L node, else -1
    };
    std::vector<QNode> q;
    std::vector<std::pair<int, int>> qEdges;     // construction order
    std::vector<int> qEdgeOwnerVertex;           // J_r vertex for intra-gadget edges, else -1

    bool alive_root(const std::vector<char>& leafAlive) const {
        // propagate: internal node alive iff >= 2k children alive
        std::vector<char> alive(bigTree.n, 0);
        for (int idx = static_cast<int>(leaves.size()) - 1; idx >= 0; --idx)
            alive[leaves[idx]] = leafAlive[idx];
        // nodes are heap-numbered, so a reverse sweep sees children first
        for (int v = bigTree.n - 1; v >= 0; --v) {
            if (children[v].empty()) continue;
            int cnt = 0;
            for (int c : children[v])
                if (alive[c]) ++cnt;
            alive[v] = cnt >= 2 * k;
        }
        return alive[0];
    }

    std::vector<char> alive_all(const std::vector<char>& leafAlive) const {
        std::vector<char> alive(bigTree.n, 0);
        for (std::size_t idx = 0; idx < leaves.size(); ++idx) alive[leaves[idx]] = leafAlive[idx];
        for (int v = bigTree.n - 1; v >= 0; --v) {
            if (children[v].empty()) continue;
            int cnt = 0;
            for (int c : children[v])
                if (alive[c]) ++cnt;
            alive[v] = cnt >= 2 * k;
        }
        return alive;
    }
};

} // namespace detail

// Split a model of W(h,6k) into two W(h,k) models meeting in at most one host
// vertex. Follows the splitting lemma's proof: expand a spanning tree of the
// root branch set into a tree Q of maximum degree 3 whose leaves carry the
// designated leaf attachments, evaluate the alive/good propagation on the two
// sides of every Q-edge, and carve the two models from a Q-edge good on both
// sides. A valid input model always admits such an edge (the sink-free
// orientation argument); hitting the contrary is reported as an internal
// consistency error.
inline SplitResult split_weak_model(const Graph& g, const MinorModel& m, int h, int k) {
    if (h < 2 || k < 1) throw InputError("split_weak_model: need h >= 2, k >= 1");
    detail::SplitContext ctx;
    ctx.h = h;
    ctx.k = k;
    ctx.bigK = 6 * k;
    ctx.bigTree = complete_kary_tree(h, ctx.bigK);
    Graph pattern = weak_closure(ctx.bigTree);
    if (auto bad = model_violation(g, pattern, m))
        throw InputError("split_weak_model: invalid model: " + *bad);

    ctx.children = tree_children(ctx.bigTree);
    auto leafFlags = tree_leaves(ctx.bigTree);
    ctx.leafIndex.assign(ctx.bigTree.n, -1);
    for (int v = 0; v < ctx.bigTree.n; ++v)
        if (leafFlags[v]) {
            ctx.leafIndex[v] = static_cast<int>(ctx.leaves.size());
            ctx.leaves.push_back(v);
        }

    const auto& jr = m.branch_sets[0];
    std::vector<char> inJr(g.num_vertices(), 0);
    for (Vertex v : jr) inJr[v] = 1;

    // designated attachment: least host edge between each leaf branch set and J_r
    std::vector<Vertex> attach(ctx.leaves.size(), -1);
    for (std::size_t li = 0; li < ctx.leaves.size(); ++li) {
        for (Vertex u : m.branch_sets[ctx.leaves[li]]) {
            for (Vertex w : g.neighbours(u))
                if (inJr[w] && (attach[li] < 0 || w < attach[li])) attach[li] = w;
        }
        if (attach[li] < 0)
            throw InternalError("split_weak_model: validated model lost a root attachment");
    }

    // spanning tree of G[J_r], BFS from the least vertex
    std::vector<Vertex> jrSorted = jr;
    std::sort(jrSorted.begin(), jrSorted.end());
    std::vector<int> jrLocal(g.num_vertices(), -1);
    for (std::size_t i = 0; i < jrSorted.size(); ++i) jrLocal[jrSorted[i]] = static_cast<int>(i);
    int jn = static_cast<int>(jrSorted.size());
    std::vector<int> tparent(jn, -1);
    {
        std::vector<int> queue{0};
        tparent[0] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            int lu = queue[head++];
            for (Vertex w : g.neighbours(jrSorted[lu]))
                if (jrLocal[w] >= 0 && tparent[jrLocal[w]] < 0) {
                    tparent[jrLocal[w]] = lu;
                    queue.push_back(jrLocal[w]);
                }
        }
    }
    std::vector<std::vector<int>> tkids(jn);
    for (int v = 1; v < jn; ++v) tkids[tparent[v]].push_back(v);

    // gadgets: one spine copy per port (parent edge, then attachments by leaf
    // id, then child edges by child id), pendant Q-leaves for attachments
    std::vector<std::vector<int>> attachAt(jn);
    for (std::size_t li = 0; li < ctx.leaves.size(); ++li)
        attachAt[jrLocal[attach[li]]].push_back(static_cast<int>(li));

    std::vector<int> gadgetStart(jn, -1);          // first spine copy
    std::vector<int> parentPortCopy(jn, -1);       // spine copy carrying the parent edge
    std::vector<std::vector<int>> childPortCopy(jn);
    auto addQNode = [&](int owner, int pendant) {
        ctx.q.push_back({owner, pendant});
        return static_cast<int>(ctx.q.size()) - 1;
    };
    for (int v = 0; v < jn; ++v) {
        int ports = (v == 0 ? 0 : 1) + static_cast<int>(attachAt[v].size()) +
                    static_cast<int>(tkids[v].size());
        int copies = std::max(1, ports);
        gadgetStart[v] = static_cast<int>(ctx.q.size());
        for (int i = 0; i < copies; ++i) {
            int id = addQNode(v, -1);
            if (i > 0) {
                ctx.qEdges.emplace_back(id - 1, id);
                ctx.qEdgeOwnerVertex.push_back(v);
            }
        }
        int port = gadgetStart[v];
        if (v != 0) parentPortCopy[v] = port++;
        for (int li : attachAt[v]) {
            int pendant = addQNode(v, li);
            ctx.qEdges.emplace_back(port, pendant);
            ctx.qEdgeOwnerVertex.push_back(v);
            ++port;
        }
        childPortCopy[v].assign(tkids[v].size(), -1);
        for (std::size_t ci = 0; ci < tkids[v].size(); ++ci) childPortCopy[v][ci] = port++;
    }
    for (int v = 0; v < jn; ++v)
        for (std::size_t ci = 0; ci < tkids[v].size(); ++ci) {
            ctx.qEdges.emplace_back(childPortCopy[v][ci], parentPortCopy[tkids[v][ci]]);
            ctx.qEdgeOwnerVertex.push_back(-1);  // corresponds to the T_r edge v - child
        }

    int qn = static_cast<int>(ctx.q.size());
    std::vector<std::vector<std::pair<int, int>>> qAdj(qn);  // (neighbour, edge id)
    for (std::size_t e = 0; e < ctx.qEdges.size(); ++e) {
        auto [a, b] = ctx.qEdges[e];
        qAdj[a].emplace_back(b, static_cast<int>(e));
        qAdj[b].emplace_back(a, static_cast<int>(e));
    }

    // side of every Q node w.r.t. a removed edge
    auto flood = [&](int from, int blockedEdge) {
        std::vector<char> side(qn, 0);
        std::vector<int> stack{from};
        side[from] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : qAdj[u])
                if (e != blockedEdge && !side[w]) {
                    side[w] = 1;
                    stack.push_back(w);
                }
        }
        return side;
    };

    int chosenEdge = -1;
    std::vector<char> sideA;
    for (std::size_t e = 0; e < ctx.qEdges.size(); ++e) {
        auto side = flood(ctx.qEdges[e].first, static_cast<int>(e));
        std::vector<char> leafA(ctx.leaves.size(), 0), leafB(ctx.leaves.size(), 0);
        for (int qv = 0; qv < qn; ++qv)
            if (ctx.q[qv].pendant_leaf >= 0) {
                if (side[qv])
                    leafA[ctx.q[qv].pendant_leaf] = 1;
                else
                    leafB[ctx.q[qv].pendant_leaf] = 1;
            }
        if (ctx.alive_root(leafA) && ctx.alive_root(leafB)) {
            chosenEdge = static_cast<int>(e);
            sideA = side;
            break;
        }
    }
    if (chosenEdge < 0)
        throw InternalError("split_weak_model: no Q-edge good on both sides "
                            "(the orientation argument forbids this on valid input)");

    std::vector<char> leafA(ctx.leaves.size(), 0), leafB(ctx.leaves.size(), 0);
    for (int qv = 0; qv < qn; ++qv)
        if (ctx.q[qv].pendant_leaf >= 0) {
            if (sideA[qv])
                leafA[ctx.q[qv].pendant_leaf] = 1;
            else
                leafB[ctx.q[qv].pendant_leaf] = 1;
        }
    auto aliveA = ctx.alive_all(leafA);
    auto aliveB = ctx.alive_all(leafB);

    // root branch sets for the two models: the J_r vertices whose gadget has a
    // copy on the respective side (the owner of an intra-gadget edge lands on
    // both sides, and is the single allowed shared vertex)
    std::vector<Vertex> rootA, rootB;
    {
        std::vector<char> onA(jn, 0), onB(jn, 0);
        for (int qv = 0; qv < qn; ++qv) {
            if (sideA[qv])
                onA[ctx.q[qv].owner] = 1;
            else
                onB[ctx.q[qv].owner] = 1;
        }
        for (int v = 0; v < jn; ++v) {
            if (onA[v]) rootA.push_back(jrSorted[v]);
            if (onB[v]) rootB.push_back(jrSorted[v]);
        }
    }

    // A and B: disjoint k-subsets of root children, alive on their own sides
    std::vector<int> rootKidsA, rootKidsB;
    for (int c : ctx.children[0])
        if (aliveA[c] && static_cast<int>(rootKidsA.size()) < k) rootKidsA.push_back(c);
    for (int c : ctx.children[0]) {
        if (!aliveB[c] || static_cast<int>(rootKidsB.size()) >= k) continue;
        if (std::find(rootKidsA.begin(), rootKidsA.end(), c) != rootKidsA.end()) continue;
        rootKidsB.push_back(c);
    }
    if (static_cast<int>(rootKidsA.size()) < k || static_cast<int>(rootKidsB.size()) < k)
        throw InternalError("split_weak_model: good sides below 2k alive root children");

    // carve a W(h,k) model: pattern node p maps to an alive big-tree node, its
    // pattern children k*p+1..k*p+k to the first k alive children
    RootedTree smallTree = complete_kary_tree(h, k);
    auto carve = [&](const std::vector<char>& alive, const std::vector<int>& rootKids,
                     std::vector<Vertex> rootSet) {
        MinorModel out;
        out.branch_sets.resize(smallTree.n);
        std::sort(rootSet.begin(), rootSet.end());
        out.branch_sets[0] = std::move(rootSet);
        auto rec = [&](auto&& self, int pnode, int tnode) -> void {
            out.branch_sets[pnode] = m.branch_sets[tnode];
            int taken = 0;
            for (int c : ctx.children[tnode]) {
                if (!alive[c]) continue;
                self(self, k * pnode + 1 + taken, c);
                if (++taken == k) break;
            }
            if (!ctx.children[tnode].empty() && taken < k)
                throw InternalError("split_weak_model: alive node lost its alive children");
        };
        for (std::size_t i = 0; i < rootKids.size(); ++i)
            rec(rec, 1 + static_cast<int>(i), rootKids[i]);
        return out;
    };

    SplitResult res;
    res.first = carve(aliveA, rootKidsA, rootA);
    res.second = carve(aliveB, rootKidsB, rootB);
    return res;
}

} // namespace cgc
