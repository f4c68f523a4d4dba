#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgc/bfs.hpp"
#include "cgc/bigint.hpp"
#include "cgc/blocks.hpp"
#include "cgc/errors.hpp"
#include "cgc/generators.hpp"
#include "cgc/graph.hpp"
#include "cgc/strong_model.hpp"

namespace cgc {

// A forbidden-pattern witness: a validated model of fan(k), fat_star(k) or
// fat_path(k) in the graph under test.
struct PatternWitness {
    enum class Kind { Fan, FatStar, FatPath };
    Kind kind;
    int k = 0;
    MinorModel model;
};

inline Graph witness_pattern(const PatternWitness& w) {
    switch (w.kind) {
        case PatternWitness::Kind::Fan: return fan(w.k);
        case PatternWitness::Kind::FatStar: return fat_star(w.k);
        default: return fat_path(w.k);
    }
}

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
    return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

// fan(k) model from a path that meets >= k vertices adjacent to a connected
// apex set disjoint from the path. Spine branch sets are the path segments
// between consecutive met vertices; the apex set is the dominant vertex.
inline MinorModel fan_model_from_path(const std::vector<Vertex>& path,
                                      const std::vector<char>& apex_adjacent,
                                      const std::vector<Vertex>& apex_set, int k) {
    std::vector<int> met;
    for (std::size_t p = 0; p < path.size(); ++p)
        if (apex_adjacent[p]) met.push_back(static_cast<int>(p));
    if (static_cast<int>(met.size()) < k)
        throw InternalError("fan_model_from_path: fewer than k met vertices");
    MinorModel m;
    m.branch_sets.resize(k + 1);
    for (int j = 0; j < k; ++j) {
        int from = met[j];
        int to = (j + 1 < k) ? met[j + 1] - 1 : met[j];  // last spine set is a single vertex
        for (int p = from; p <= to; ++p) m.branch_sets[j].push_back(path[p]);
        std::sort(m.branch_sets[j].begin(), m.branch_sets[j].end());
    }
    m.branch_sets[k] = apex_set;
    std::sort(m.branch_sets[k].begin(), m.branch_sets[k].end());
    return m;
}

} // namespace detail

// Outcome of the single-high-degree-vertex dichotomy: either a k-fan minor,
// or a connected set X plus l neighbours of v outside X all adjacent to X
// (contracting X gives a K_{2,l} minor with {v} as the other hub).
struct OneHighResult {
    std::optional<MinorModel> fan_model;                // model of fan(k)
    std::vector<Vertex> x_set;                          // connected, avoids v and s_set
    std::vector<Vertex> s_set;                          // l neighbours of v adjacent to x_set
    bool is_fan() const { return fan_model.has_value(); }
};

inline OneHighResult one_high(const Graph& g, Vertex v, int k, int l) {
    if (!g.in_range(v)) throw InputError("one_high: v out of range");
    if (k < 1 || l < 1) throw InputError("one_high: need k,l >= 1");
    if (!is_connected(g)) throw InputError("one_high: graph disconnected");
    if (static_cast<std::uint64_t>(g.degree(v)) <
        detail::sat_mul(2, detail::sat_mul(static_cast<std::uint64_t>(l), k)))
        throw InputError("one_high: deg(v) below 2*l*k");

    // v must not be a cut vertex
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (u != v) rest.push_back(u);
    std::vector<Vertex> restMap;
    Graph gMinusV = induced_subgraph(g, rest, &restMap);
    if (!is_connected(gMinusV)) throw InputError("one_high: v is a cut vertex");

    // root r: least-index vertex of G-v outside N(v) when one exists
    Vertex r = -1;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (u != v && !g.adjacent(u, v)) {
            r = u;
            break;
        }
    if (r < 0) r = (v == 0) ? 1 : 0;  // v dominates; r joins N(v) but never S

    // shortest paths to r inside G-v, minimum-index tie-breaking
    int rLocal = static_cast<int>(std::lower_bound(restMap.begin(), restMap.end(), r) -
                                  restMap.begin());
    auto layering = bfs_layering(gMinusV, rLocal);
    auto parents = bfs_parents(gMinusV, layering);

    const auto& nv = g.neighbours(v);
    std::vector<char> isNv(g.num_vertices(), 0);
    for (Vertex w : nv) isNv[w] = 1;

    auto pathOf = [&](Vertex w) {  // w .. r in global indices
        int cur = static_cast<int>(std::lower_bound(restMap.begin(), restMap.end(), w) -
                                   restMap.begin());
        std::vector<Vertex> path;
        while (true) {
            path.push_back(restMap[cur]);
            if (parents[cur] == cur) break;
            cur = parents[cur];
        }
        return path;
    };

    // fan check: some path meets >= k neighbours of v
    for (Vertex w : nv) {
        auto path = pathOf(w);
        int count = 0;
        for (Vertex u : path)
            if (isNv[u]) ++count;
        if (count >= k) {
            std::vector<char> met(path.size(), 0);
            for (std::size_t p = 0; p < path.size(); ++p) met[p] = isNv[path[p]];
            OneHighResult res;
            res.fan_model = detail::fan_model_from_path(path, met, {v}, k);
            return res;
        }
    }

    // auxiliary digraph on N(v): w -> (P_w ∩ N(v)); out-degree <= k-1.
    // Caro-Wei greedy (repeatedly take a minimum-degree vertex of the
    // underlying undirected graph) finds a stable set of size >= l.
    std::vector<Vertex> cand;
    for (Vertex w : nv)
        if (w != r) cand.push_back(w);
    std::vector<std::vector<Vertex>> und(g.num_vertices());
    {
        std::set<std::pair<Vertex, Vertex>> seen;
        for (Vertex w : cand)
            for (Vertex u : pathOf(w))
                if (isNv[u] && u != w && u != r &&
                    seen.insert({std::min(u, w), std::max(u, w)}).second) {
                    und[w].push_back(u);
                    und[u].push_back(w);
                }
    }
    std::vector<char> alive(g.num_vertices(), 0), stable(g.num_vertices(), 0);
    for (Vertex w : cand) alive[w] = 1;
    std::vector<Vertex> s_set;
    while (static_cast<int>(s_set.size()) < l) {
        Vertex best = -1;
        int bestDeg = -1;
        for (Vertex w : cand) {
            if (!alive[w]) continue;
            int d = 0;
            for (Vertex u : und[w])
                if (alive[u]) ++d;
            if (best < 0 || d < bestDeg) {
                best = w;
                bestDeg = d;
            }
        }
        if (best < 0) break;
        s_set.push_back(best);
        stable[best] = 1;
        alive[best] = 0;
        for (Vertex u : und[best]) alive[u] = 0;
    }
    if (static_cast<int>(s_set.size()) < l)
        throw InternalError("one_high: stable-set bound failed, greedy found only " +
                            std::to_string(s_set.size()) + " of " + std::to_string(l));
    std::sort(s_set.begin(), s_set.end());

    std::vector<char> inX(g.num_vertices(), 0);
    for (Vertex w : s_set)
        for (Vertex u : pathOf(w))
            if (u != w) inX[u] = 1;
    OneHighResult res;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (inX[u]) res.x_set.push_back(u);
    res.s_set = std::move(s_set);
    return res;
}

// The leaf-growing algorithm behind the many-high-degree-vertices lemma:
// grow a tree X in C = G - {v_1..v_k} downward through the BFS layering,
// attaching one path per step to a deepest available neighbour of some v_i,
// until every v_i owns k+1 leaf neighbours — or some attachment path meets k
// neighbours of one v_j, which yields a k-fan instead.
inline PatternWitness many_high(const Graph& g, const std::vector<Vertex>& vs, int k) {
    if (k < 1 || static_cast<int>(vs.size()) != k) throw InputError("many_high: need k vertices");
    std::vector<char> isVs(g.num_vertices(), 0);
    for (Vertex v : vs) {
        if (!g.in_range(v) || isVs[v]) throw InputError("many_high: bad guarded vertex list");
        isVs[v] = 1;
    }
    std::vector<Vertex> cVerts;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        if (!isVs[u]) cVerts.push_back(u);
    if (cVerts.empty()) throw InputError("many_high: C empty");
    std::vector<Vertex> cMap;
    Graph c = induced_subgraph(g, cVerts, &cMap);
    if (!is_connected(c)) throw InputError("many_high: C disconnected");
    std::uint64_t need = detail::sat_pow(static_cast<std::uint64_t>(k), 3);
    std::vector<std::vector<int>> nbrC(k);  // local indices of N_C(v_i)
    for (int i = 0; i < k; ++i) {
        for (int lu = 0; lu < c.num_vertices(); ++lu)
            if (g.adjacent(vs[i], cMap[lu])) nbrC[i].push_back(lu);
        if (static_cast<std::uint64_t>(nbrC[i].size()) < need)
            throw InputError("many_high: deg_C(v_" + std::to_string(i) + ") below k^3");
    }

    auto layering = bfs_layering(c, 0);
    int n = c.num_vertices();
    std::vector<char> inX(n, 0);
    std::vector<int> parent(n, -1);
    inX[0] = 1;
    parent[0] = 0;
    std::vector<std::vector<int>> s(k);
    std::vector<char> inS(n, 0);

    int t = static_cast<int>(layering.layers.size()) - 1;
    while (true) {
        int pending = -1;
        for (int i = 0; i < k; ++i)
            if (static_cast<int>(s[i].size()) <= k) {
                pending = i;
                break;
            }
        if (pending < 0) break;

        // least i with an available neighbour in the current layer, then the
        // least such neighbour
        int chosenI = -1, w = -1;
        for (int i = 0; i < k && chosenI < 0; ++i) {
            if (static_cast<int>(s[i].size()) > k) continue;
            for (int lu : nbrC[i])
                if (!inX[lu] && layering.layer[lu] == t) {
                    chosenI = i;
                    w = lu;
                    break;
                }
        }
        if (chosenI < 0) {
            if (--t < 0)
                throw InputError("many_high: guarded vertices run out of fresh neighbours "
                                 "(degree precondition too tight)");
            continue;
        }

        // walk from w down the layering to the first X vertex
        std::vector<int> path{w};
        int cur = w;
        while (!inX[cur]) {
            int nxt = -1;
            for (Vertex u : c.neighbours(cur))
                if (layering.layer[u] == layering.layer[cur] - 1) {
                    nxt = u;
                    break;
                }
            if (nxt < 0) throw InternalError("many_high: layering walk stuck");
            path.push_back(nxt);
            cur = nxt;
        }

        // fan escape: the path meets k neighbours of some v_j
        for (int j = 0; j < k; ++j) {
            std::vector<char> met(path.size(), 0);
            int count = 0;
            for (std::size_t p = 0; p < path.size(); ++p)
                if (g.adjacent(vs[j], cMap[path[p]])) {
                    met[p] = 1;
                    ++count;
                }
            if (count >= k) {
                std::vector<Vertex> gpath;
                for (int lu : path) gpath.push_back(cMap[lu]);
                PatternWitness wit;
                wit.kind = PatternWitness::Kind::Fan;
                wit.k = k;
                wit.model = detail::fan_model_from_path(gpath, met, {vs[j]}, k);
                return wit;
            }
        }

        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            inX[path[p]] = 1;
            parent[path[p]] = path[p + 1];
        }
        s[chosenI].push_back(w);
        inS[w] = 1;
    }

    // fat star: contract X - S to a hub; each v_i keeps one contracted leaf
    // and k thickening leaves
    PatternWitness wit;
    wit.kind = PatternWitness::Kind::FatStar;
    wit.k = k;
    wit.model.branch_sets.resize(1 + k + k * k);
    for (int lu = 0; lu < n; ++lu)
        if (inX[lu] && !inS[lu]) wit.model.branch_sets[0].push_back(cMap[lu]);
    for (int i = 0; i < k; ++i) {
        auto& leaf = wit.model.branch_sets[1 + i];
        leaf = {vs[i], cMap[s[i][0]]};
        std::sort(leaf.begin(), leaf.end());
        for (int j = 0; j < k; ++j)
            wit.model.branch_sets[1 + k + i * k + j] = {cMap[s[i][j + 1]]};
    }
    return wit;
}

// Common-neighbour forest: in a bipartite graph with sides A and B, the graph
// H on A joining pairs with >= k common neighbours carries an immediate
// k-strong model (singleton branch sets, the common neighbours as witnesses).
// When >= p vertices of A have degree >= k|A| and B has minimum degree 2,
// H has at least p/2 edges.
inline StrongModel find_forest(const Graph& bip, const std::vector<Vertex>& sideA, int k, int p) {
    std::vector<char> inA(bip.num_vertices(), 0);
    for (Vertex a : sideA) {
        if (!bip.in_range(a) || inA[a]) throw InputError("find_forest: bad side annotation");
        inA[a] = 1;
    }
    for (auto [u, v] : bip.edges())
        if (inA[u] == inA[v]) throw InputError("find_forest: edge inside one side");

    std::vector<Vertex> a = sideA;
    std::sort(a.begin(), a.end());
    int an = static_cast<int>(a.size());
    StrongModel sm;
    EdgeList he;
    for (int i = 0; i < an; ++i)
        for (int j = i + 1; j < an; ++j) {
            std::vector<Vertex> common;
            std::set_intersection(bip.neighbours(a[i]).begin(), bip.neighbours(a[i]).end(),
                                  bip.neighbours(a[j]).begin(), bip.neighbours(a[j]).end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) >= k) {
                he.emplace_back(i, j);
                sm.witnesses[{i, j}] = std::move(common);
            }
        }
    sm.pattern = build_graph(an, he);
    for (int i = 0; i < an; ++i) sm.branch_sets.push_back({a[i]});

    // the p/2 guarantee only binds when the stated preconditions hold
    int highA = 0;
    for (Vertex v : a)
        if (static_cast<std::uint64_t>(bip.degree(v)) >=
            detail::sat_mul(static_cast<std::uint64_t>(k), an))
            ++highA;
    bool minDegB = true;
    for (Vertex v = 0; v < bip.num_vertices(); ++v)
        if (!inA[v] && bip.degree(v) < 2) minDegB = false;
    if (highA >= p && minDegB && 2 * sm.pattern.num_edges() < p)
        throw InternalError("find_forest: edge count " + std::to_string(sm.pattern.num_edges()) +
                            " below p/2 with certified preconditions");
    return sm;
}

// Meandering-path extraction: a path on >= k^(c+1) vertices inside layers
// V_i..V_{i+c} (i >= 1) yields a k-fan, either directly from k path vertices
// in V_i (layers below i contract to the apex) or by recursing one layer
// deeper on a surviving subpath of >= k^c vertices.
inline MinorModel fan_from_layered_path(const Graph& g, const BFSLayering& l,
                                        std::vector<Vertex> path, int i, int c, int k) {
    if (i < 1 || c < 0 || k < 1) throw InputError("fan_from_layered_path: bad parameters");
    for (std::size_t p = 0; p < path.size(); ++p) {
        if (!g.in_range(path[p])) throw InputError("fan_from_layered_path: path out of range");
        if (l.layer[path[p]] < i || l.layer[path[p]] > i + c)
            throw InputError("fan_from_layered_path: path leaves layers [i, i+c]");
        if (p + 1 < path.size() && !g.adjacent(path[p], path[p + 1]))
            throw InputError("fan_from_layered_path: not a path");
    }
    {
        std::vector<Vertex> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("fan_from_layered_path: repeated path vertex");
    }
    if (static_cast<std::uint64_t>(path.size()) <
        detail::sat_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(c) + 1))
        throw InputError("fan_from_layered_path: path shorter than k^(c+1)");

    while (true) {
        int inLayerI = 0;
        for (Vertex v : path)
            if (l.layer[v] == i) ++inLayerI;
        if (inLayerI >= k) {
            std::vector<char> met(path.size(), 0);
            for (std::size_t p = 0; p < path.size(); ++p) met[p] = (l.layer[path[p]] == i);
            std::vector<Vertex> apex;
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                if (l.layer[v] < i) apex.push_back(v);
            return detail::fan_model_from_path(path, met, apex, k);
        }
        if (c == 0) throw InternalError("fan_from_layered_path: base case missed k vertices");
        // first maximal run of the path avoiding V_i with >= k^c vertices
        std::uint64_t want = detail::sat_pow(static_cast<std::uint64_t>(k),
                                             static_cast<unsigned>(c));
        std::vector<Vertex> piece;
        bool found = false;
        for (std::size_t p = 0; p <= path.size(); ++p) {
            if (p < path.size() && l.layer[path[p]] > i) {
                piece.push_back(path[p]);
                continue;
            }
            if (static_cast<std::uint64_t>(piece.size()) >= want) {
                found = true;
                break;
            }
            piece.clear();
        }
        if (!found)
            throw InternalError("fan_from_layered_path: no surviving subpath of k^c vertices");
        path = std::move(piece);
        ++i;
        --c;
    }
}

// The 2-connected high-degree pipeline. If g (a block) has at least (k+2)k^k
// vertices of degree >= d(k), a fan / fat star / fat path minor is extracted:
// a component in k heavy pairs feeds the leaf-growing algorithm; otherwise the
// K_{2,l} structures of the heavy pairs, or the contact graph of the
// untouched high-degree vertices, give a strong model that the fat-minor
// extraction consumes. Returns nullopt when the degree threshold is not met.
inline std::optional<PatternWitness> two_connected_high(const Graph& g, int k,
                                                        const Limits& lim = Limits::defaults()) {
    if (k < 1) throw InputError("two_connected_high: need k >= 1");
    if (!is_block(g)) throw InputError("two_connected_high: graph is not 2-connected");

    const BigUint d = degree_threshold(k);
    const BigUint countNeeded = high_degree_count_threshold(k);
    std::vector<Vertex> high;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (BigUint(static_cast<std::uint64_t>(g.degree(v))) >= d) high.push_back(v);
    if (BigUint(static_cast<std::uint64_t>(high.size())) < countNeeded) return std::nullopt;

    int aCount = static_cast<int>(countNeeded.as_u64());
    std::vector<Vertex> A(high.begin(), high.begin() + aCount);
    std::vector<char> inA(g.num_vertices(), 0);
    for (Vertex v : A) inA[v] = 1;

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!inA[v]) rest.push_back(v);
    std::vector<Vertex> restMap;
    Graph gRest = induced_subgraph(g, rest, &restMap);
    auto comps = connected_components(gRest);
    int p = static_cast<int>(comps.size());
    std::vector<std::vector<Vertex>> compG(p);  // global vertex sets
    for (int j = 0; j < p; ++j)
        for (Vertex lu : comps[j]) compG[j].push_back(restMap[lu]);

    const std::uint64_t heavyNeed = detail::sat_mul(6, detail::sat_pow(k, k + 1));
    std::vector<std::vector<Vertex>> heavyOf(p);  // A-vertices heavy on component j
    for (int j = 0; j < p; ++j) {
        std::vector<char> inC(g.num_vertices(), 0);
        for (Vertex u : compG[j]) inC[u] = 1;
        for (Vertex a : A) {
            std::uint64_t cnt = 0;
            for (Vertex u : g.neighbours(a))
                if (inC[u]) ++cnt;
            if (cnt >= heavyNeed) heavyOf[j].push_back(a);
        }
    }

    for (int j = 0; j < p; ++j)
        if (static_cast<int>(heavyOf[j].size()) >= k) {
            std::vector<Vertex> vs(heavyOf[j].begin(), heavyOf[j].begin() + k);
            std::vector<Vertex> sub = compG[j];
            sub.insert(sub.end(), vs.begin(), vs.end());
            std::vector<Vertex> subMap;
            Graph host = induced_subgraph(g, sub, &subMap);
            std::vector<Vertex> vsLocal;
            for (Vertex v : vs)
                vsLocal.push_back(static_cast<int>(
                    std::lower_bound(subMap.begin(), subMap.end(), v) - subMap.begin()));
            PatternWitness w = many_high(host, vsLocal, k);
            for (auto& set : w.model.branch_sets)
                for (Vertex& v : set) v = subMap[v];
            return w;
        }

    // at most one heavy pair per component
    std::vector<std::pair<Vertex, int>> pairs;
    for (int j = 0; j < p; ++j)
        if (!heavyOf[j].empty()) pairs.emplace_back(heavyOf[j][0], j);

    const std::uint64_t ell = detail::sat_mul(3, detail::sat_pow(k, k));
    const std::uint64_t kk = detail::sat_pow(k, k);

    if (static_cast<std::uint64_t>(pairs.size()) >= kk) {
        // strong model straight from the K_{2,l} structures of the pairs
        StrongModel sm;
        std::vector<int> aIndex(g.num_vertices(), -1);
        EdgeList he;
        std::vector<std::vector<Vertex>> sets;
        std::vector<std::vector<Vertex>> witnessLists;
        for (auto [a, j] : pairs) {
            std::vector<Vertex> sub = compG[j];
            sub.push_back(a);
            std::vector<Vertex> subMap;
            Graph host = induced_subgraph(g, sub, &subMap);
            int aLocal = static_cast<int>(
                std::lower_bound(subMap.begin(), subMap.end(), a) - subMap.begin());
            OneHighResult r = one_high(host, aLocal, k, static_cast<int>(ell));
            if (r.is_fan()) {
                PatternWitness w;
                w.kind = PatternWitness::Kind::Fan;
                w.k = k;
                w.model = *r.fan_model;
                for (auto& set : w.model.branch_sets)
                    for (Vertex& v : set) v = subMap[v];
                return w;
            }
            if (aIndex[a] < 0) {
                aIndex[a] = static_cast<int>(sets.size());
                sets.push_back({a});
            }
            std::vector<Vertex> x, s;
            for (Vertex v : r.x_set) x.push_back(subMap[v]);
            for (Vertex v : r.s_set) s.push_back(subMap[v]);
            int xIdx = static_cast<int>(sets.size());
            sets.push_back(std::move(x));
            he.emplace_back(std::min(aIndex[a], xIdx), std::max(aIndex[a], xIdx));
            witnessLists.push_back(std::move(s));
        }
        sm.pattern = build_graph(static_cast<int>(sets.size()), he);
        sm.branch_sets = std::move(sets);
        for (std::size_t e = 0; e < he.size(); ++e) sm.witnesses[he[e]] = witnessLists[e];

        // trim to exactly k^k edges, drop isolated pattern vertices
        // (handled inside make_connected_model), then extract
        while (static_cast<std::uint64_t>(sm.pattern.num_edges()) > kk) {
            auto edges = sm.pattern.edges();
            auto last = edges.back();
            edges.pop_back();
            sm.witnesses.erase(last);
            sm.pattern = build_graph(sm.pattern.num_vertices(), edges);
        }
        StrongModel connected = make_connected_model(g, sm, k * (k + 1));
        FatMinor fm = fat_minor_from_strong_model(g, connected, k, lim);
        PatternWitness w;
        w.kind = fm.kind == FatMinor::Kind::FatPath ? PatternWitness::Kind::FatPath
                                                    : PatternWitness::Kind::FatStar;
        w.k = k;
        w.model = std::move(fm.model);
        return w;
    }

    // contact graph route: bipartite aux with one node per component,
    // everything below runs inside the aux graph, then the aux-in-g model
    // lifts the result
    std::vector<Vertex> primeA;
    {
        std::vector<char> inPair(g.num_vertices(), 0);
        for (int j = 0; j < p; ++j)
            for (Vertex a : heavyOf[j]) inPair[a] = 1;
        for (Vertex a : A)
            if (!inPair[a]) primeA.push_back(a);
    }
    if (static_cast<std::uint64_t>(primeA.size()) < detail::sat_mul(2, kk))
        throw InternalError("two_connected_high: untouched high-degree count below 2k^k");

    EdgeList auxEdges;
    for (int ai = 0; ai < aCount; ++ai) {
        std::vector<char> nb(g.num_vertices(), 0);
        for (Vertex u : g.neighbours(A[ai])) nb[u] = 1;
        for (int j = 0; j < p; ++j)
            for (Vertex u : compG[j])
                if (nb[u]) {
                    auxEdges.emplace_back(ai, aCount + j);
                    break;
                }
    }
    Graph aux = build_graph(aCount + p, auxEdges);
    if (!is_connected(aux))
        throw InternalError("two_connected_high: contact graph disconnected");
    std::vector<Vertex> sideA(aCount);
    for (int ai = 0; ai < aCount; ++ai) sideA[ai] = ai;
    StrongModel sm = find_forest(aux, sideA, static_cast<int>(ell),
                                 static_cast<int>(primeA.size()));
    while (static_cast<std::uint64_t>(sm.pattern.num_edges()) > kk) {
        auto edges = sm.pattern.edges();
        auto last = edges.back();
        edges.pop_back();
        sm.witnesses.erase(last);
        sm.pattern = build_graph(sm.pattern.num_vertices(), edges);
    }
    if (static_cast<std::uint64_t>(sm.pattern.num_edges()) < kk)
        throw InternalError("two_connected_high: contact graph below k^k strong edges");
    StrongModel connected = make_connected_model(aux, sm, k * (k + 1));
    FatMinor fm = fat_minor_from_strong_model(aux, connected, k, lim);

    MinorModel auxInG;
    auxInG.branch_sets.resize(aCount + p);
    for (int ai = 0; ai < aCount; ++ai) auxInG.branch_sets[ai] = {A[ai]};
    for (int j = 0; j < p; ++j) auxInG.branch_sets[aCount + j] = compG[j];
    PatternWitness w;
    w.kind = fm.kind == FatMinor::Kind::FatPath ? PatternWitness::Kind::FatPath
                                                : PatternWitness::Kind::FatStar;
    w.k = k;
    w.model = compose_models(auxInG, fm.model);
    return w;
}

} // namespace cgc
