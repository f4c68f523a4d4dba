#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgc/bfs.hpp"
#include "cgc/errors.hpp"
#include "cgc/generators.hpp"
#include "cgc/graph.hpp"
#include "cgc/limits.hpp"
#include "cgc/minor.hpp"
#include "cgc/subgraph.hpp"

namespace cgc {

using PatternEdge = std::pair<int, int>;  // (x,y) with x < y

// k-strong H-model: disjoint connected subgraphs X_i, one per vertex of the
// pattern H, such that every pattern edge has at least k witness vertices
// outside all the X_i adjacent to both endpoint subgraphs. Note that, unlike
// MinorModel, no direct host edge between X_i and X_j is required — pattern
// edges are carried entirely by the witnesses, and one vertex may witness
// several edges.
struct StrongModel {
    Graph pattern;
    std::vector<std::vector<Vertex>> branch_sets;
    std::map<PatternEdge, std::vector<Vertex>> witnesses;
};

inline std::optional<std::string> strong_model_violation(const Graph& host, const StrongModel& sm,
                                                         int min_witnesses) {
    const Graph& h = sm.pattern;
    if (static_cast<int>(sm.branch_sets.size()) != h.num_vertices())
        return "branch set count mismatch";
    std::vector<int> owner(host.num_vertices(), -1);
    for (int x = 0; x < h.num_vertices(); ++x) {
        if (sm.branch_sets[x].empty()) return "branch set " + std::to_string(x) + " empty";
        for (Vertex v : sm.branch_sets[x]) {
            if (!host.in_range(v)) return "branch vertex out of range";
            if (owner[v] >= 0) return "branch sets overlap at " + std::to_string(v);
            owner[v] = x;
        }
        if (!is_connected_set(host, sm.branch_sets[x]))
            return "branch set " + std::to_string(x) + " not connected";
    }
    for (auto [x, y] : h.edges()) {
        auto it = sm.witnesses.find({x, y});
        if (it == sm.witnesses.end())
            return "no witness list for edge (" + std::to_string(x) + "," + std::to_string(y) + ")";
        const auto& ws = it->second;
        if (static_cast<int>(ws.size()) < min_witnesses)
            return "edge (" + std::to_string(x) + "," + std::to_string(y) + ") has " +
                   std::to_string(ws.size()) + " witnesses, needs " + std::to_string(min_witnesses);
        for (Vertex w : ws) {
            if (!host.in_range(w) || owner[w] >= 0)
                return "witness " + std::to_string(w) + " inside a branch set";
            bool adjX = false, adjY = false;
            for (Vertex u : host.neighbours(w)) {
                if (owner[u] == x) adjX = true;
                if (owner[u] == y) adjY = true;
            }
            if (!adjX || !adjY)
                return "witness " + std::to_string(w) + " not adjacent to both sides of (" +
                       std::to_string(x) + "," + std::to_string(y) + ")";
        }
    }
    return std::nullopt;
}

inline bool is_valid_strong_model(const Graph& host, const StrongModel& sm, int min_witnesses) {
    return !strong_model_violation(host, sm, min_witnesses).has_value();
}

struct StrongModelResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<StrongModel> model;
    bool yes() const { return status == SearchStatus::Yes; }
    bool no() const { return status == SearchStatus::No; }
};

namespace detail {

// Same enumeration backbone as MinorSearch, but pattern edges demand k common
// free neighbours instead of a direct host edge. Placed pairs are re-checked
// after every placement because later branch sets consume witnesses.
class StrongModelSearch {
  public:
    StrongModelSearch(const Graph& host, const Graph& pattern, int k, std::uint64_t budget)
        : host_(host), pat_(pattern), k_(k), budget_(budget) {
        hn_ = host.num_vertices();
        pn_ = pattern.num_vertices();
        adj_.assign(hn_, 0);
        for (Vertex v = 0; v < hn_; ++v)
            for (Vertex w : host.neighbours(v)) adj_[v] |= bit(w);
        std::vector<char> placed(pn_, 0);
        for (int step = 0; step < pn_; ++step) {
            int best = -1, bestAnchored = -1, bestDeg = -1;
            for (int v = 0; v < pn_; ++v) {
                if (placed[v]) continue;
                int anchored = 0;
                for (int u : pat_.neighbours(v))
                    if (placed[u]) ++anchored;
                if (anchored > bestAnchored ||
                    (anchored == bestAnchored && pat_.degree(v) > bestDeg)) {
                    best = v;
                    bestAnchored = anchored;
                    bestDeg = pat_.degree(v);
                }
            }
            order_.push_back(best);
            placed[best] = 1;
        }
        pos_.assign(pn_, -1);
        for (int i = 0; i < pn_; ++i) pos_[order_[i]] = i;
        branch_.assign(pn_, 0);
        free_ = hn_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hn_) - 1;
    }

    StrongModelResult run() {
        StrongModelResult r;
        try {
            r.status = place(0) ? SearchStatus::Yes : SearchStatus::No;
            if (r.status == SearchStatus::Yes) {
                StrongModel sm;
                sm.pattern = pat_;
                sm.branch_sets.resize(pn_);
                for (int i = 0; i < pn_; ++i) {
                    std::uint64_t s = branch_[i];
                    while (s) {
                        int v = __builtin_ctzll(s);
                        s &= s - 1;
                        sm.branch_sets[order_[i]].push_back(v);
                    }
                }
                for (auto [x, y] : pat_.edges()) {
                    std::uint64_t common =
                        freeNeighbourhood(branch_[pos_[x]]) & freeNeighbourhood(branch_[pos_[y]]);
                    std::vector<Vertex>& ws = sm.witnesses[{x, y}];
                    while (common) {
                        int v = __builtin_ctzll(common);
                        common &= common - 1;
                        ws.push_back(v);
                    }
                }
                r.model = std::move(sm);
            }
        } catch (const BudgetStop&) {
            r.status = SearchStatus::Indeterminate;
        }
        return r;
    }

  private:
    const Graph& host_;
    const Graph& pat_;
    int k_;
    std::uint64_t budget_;
    int hn_, pn_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> order_, pos_;
    std::vector<std::uint64_t> branch_;
    std::uint64_t free_ = 0;
    std::uint64_t nodes_ = 0;

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void tick() {
        if (++nodes_ > budget_) throw BudgetStop{};
    }

    std::uint64_t neighbourhood(std::uint64_t s) const {
        std::uint64_t n = 0;
        while (s) {
            int v = __builtin_ctzll(s);
            s &= s - 1;
            n |= adj_[v];
        }
        return n;
    }

    std::uint64_t freeNeighbourhood(std::uint64_t s) const { return neighbourhood(s) & free_; }

    bool witnessesStillFeasible() const {
        for (auto [x, y] : pat_.edges()) {
            int i = pos_[x], j = pos_[y];
            if (!branch_[i] || !branch_[j]) continue;
            std::uint64_t common = freeNeighbourhood(branch_[i]) & freeNeighbourhood(branch_[j]);
            if (__builtin_popcountll(common) < k_) return false;
        }
        return true;
    }

    bool place(int i) {
        tick();
        if (i == pn_) return true;
        int cap = __builtin_popcountll(free_) - (pn_ - i - 1);
        if (cap <= 0) return false;
        std::uint64_t seeds = free_;
        while (seeds) {
            int v = __builtin_ctzll(seeds);
            seeds &= seeds - 1;
            std::uint64_t allowed = free_ & ~(bit(v) - 1);
            if (grow(i, bit(v), adj_[v] & allowed & ~bit(v), allowed, cap)) return true;
        }
        return false;
    }

    bool grow(int i, std::uint64_t S, std::uint64_t ext, std::uint64_t allowed, int cap) {
        tick();
        {
            branch_[i] = S;
            std::uint64_t savedFree = free_;
            free_ &= ~S;
            bool feasible = witnessesStillFeasible();
            if (feasible && place(i + 1)) return true;
            free_ = savedFree;
            branch_[i] = 0;
        }
        if (__builtin_popcountll(S) >= cap) return false;
        std::uint64_t candidates = ext;
        std::uint64_t banned = 0;
        while (candidates) {
            int v = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            banned |= bit(v);
            std::uint64_t s2 = S | bit(v);
            std::uint64_t ext2 = (ext | (adj_[v] & allowed)) & ~s2 & ~banned;
            if (grow(i, s2, ext2, allowed & ~(banned & ~bit(v)), cap)) return true;
        }
        return false;
    }
};

} // namespace detail

// Search for a k-strong H-model. Definitive "no" only when the search space
// was exhausted within budget.
inline StrongModelResult find_strong_model(const Graph& host, const Graph& pattern, int k,
                                           const Limits& lim = Limits::defaults()) {
    if (pattern.num_vertices() == 0) throw InputError("find_strong_model: empty pattern");
    if (host.num_vertices() > 64)
        throw BudgetError("find_strong_model: host exceeds 64 vertices");
    StrongModelResult r;
    if (pattern.num_vertices() > host.num_vertices()) {
        r.status = SearchStatus::No;
        return r;
    }
    detail::StrongModelSearch search(host, pattern, k, lim.search_nodes);
    return search.run();
}

// Merge the components of a strong model along connecting paths, as in the
// component-merging lemma: while H is disconnected, find a path between two
// decorated component subgraphs whose interior avoids all of them, identify
// the two met pattern vertices, absorb the path into the merged branch set,
// and charge the at most two consumed witnesses to every remaining list.
// Input: a (k + 2c - 2)-strong model, c = number of components of H after
// dropping isolated vertices. Output: a k-strong model of a connected H' with
// the same number of edges.
inline StrongModel make_connected_model(const Graph& g, StrongModel sm, int k) {
    if (!is_connected(g)) throw InputError("make_connected_model: host disconnected");

    // drop isolated pattern vertices
    {
        std::vector<int> keep;
        for (int v = 0; v < sm.pattern.num_vertices(); ++v)
            if (sm.pattern.degree(v) > 0) keep.push_back(v);
        if (keep.empty()) throw InputError("make_connected_model: pattern has no edges");
        if (static_cast<int>(keep.size()) < sm.pattern.num_vertices()) {
            std::vector<int> newIdx(sm.pattern.num_vertices(), -1);
            for (std::size_t i = 0; i < keep.size(); ++i) newIdx[keep[i]] = static_cast<int>(i);
            EdgeList pe;
            for (auto [x, y] : sm.pattern.edges()) pe.emplace_back(newIdx[x], newIdx[y]);
            StrongModel trimmed;
            trimmed.pattern = build_graph(static_cast<int>(keep.size()), pe);
            for (int v : keep) trimmed.branch_sets.push_back(sm.branch_sets[v]);
            for (auto& [e, ws] : sm.witnesses) {
                int a = newIdx[e.first], b = newIdx[e.second];
                if (a >= 0 && b >= 0) trimmed.witnesses[{std::min(a, b), std::max(a, b)}] = ws;
            }
            sm = std::move(trimmed);
        }
    }

    int c = static_cast<int>(connected_components(sm.pattern).size());
    if (auto bad = strong_model_violation(g, sm, k + 2 * c - 2))
        throw InputError("make_connected_model: invalid input model: " + *bad);

    while (true) {
        auto comps = connected_components(sm.pattern);
        if (comps.size() <= 1) break;

        // decorated component subgraphs G_a = branch sets + witness sets
        int n = g.num_vertices();
        std::vector<int> inComp(n, -1);  // which G_a a host vertex belongs to (first wins)
        std::vector<int> compOf(sm.pattern.num_vertices(), -1);
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (int v : comps[a]) compOf[v] = static_cast<int>(a);
        auto mark = [&](Vertex v, int a) {
            if (inComp[v] < 0) inComp[v] = a;
        };
        for (int x = 0; x < sm.pattern.num_vertices(); ++x)
            for (Vertex v : sm.branch_sets[x]) mark(v, compOf[x]);
        for (auto& [e, ws] : sm.witnesses)
            for (Vertex w : ws) mark(w, compOf[e.first]);

        // path from G_0 to any other G_b, interior outside all G_a.
        // Shared witnesses give single-vertex paths first.
        std::vector<Vertex> path;
        int hitComp = -1;
        {
            // single vertex case: a witness of a comp-0 edge that also
            // witnesses an edge of another component
            for (auto& [e, ws] : sm.witnesses) {
                if (compOf[e.first] != 0) continue;
                for (Vertex w : ws) {
                    for (auto& [e2, ws2] : sm.witnesses) {
                        if (compOf[e2.first] == 0) continue;
                        if (std::find(ws2.begin(), ws2.end(), w) != ws2.end()) {
                            path = {w};
                            hitComp = compOf[e2.first];
                            break;
                        }
                    }
                    if (!path.empty()) break;
                }
                if (!path.empty()) break;
            }
        }
        if (path.empty()) {
            std::vector<Vertex> prev(n, -1);
            std::vector<Vertex> queue;
            for (Vertex v = 0; v < n; ++v)
                if (inComp[v] == 0) {
                    prev[v] = v;
                    queue.push_back(v);
                }
            std::size_t head = 0;
            Vertex hit = -1;
            while (head < queue.size() && hit < 0) {
                Vertex u = queue[head++];
                for (Vertex w : g.neighbours(u)) {
                    if (prev[w] >= 0) continue;
                    if (inComp[w] > 0) {
                        prev[w] = u;
                        hit = w;
                        break;
                    }
                    if (inComp[w] < 0) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if (hit < 0)
                throw InternalError("make_connected_model: no connecting path in connected host");
            hitComp = inComp[hit];
            Vertex v = hit;
            while (true) {
                path.push_back(v);
                if (prev[v] == v) break;
                v = prev[v];
            }
            std::reverse(path.begin(), path.end());
        }

        Vertex xHost = path.front(), yHost = path.back();

        // pattern vertex to merge on each side: the branch set owner, or the
        // first endpoint of the least edge the vertex witnesses
        auto mergeTarget = [&](Vertex hostV, int compWanted) -> int {
            for (int x = 0; x < sm.pattern.num_vertices(); ++x)
                if (compOf[x] == compWanted)
                    for (Vertex v : sm.branch_sets[x])
                        if (v == hostV) return x;
            for (auto& [e, ws] : sm.witnesses)
                if (compOf[e.first] == compWanted &&
                    std::find(ws.begin(), ws.end(), hostV) != ws.end())
                    return e.first;
            throw InternalError("make_connected_model: path endpoint not in decorated subgraph");
        };
        int pi = mergeTarget(xHost, 0);
        int pj = mergeTarget(yHost, hitComp);

        // X_0 := X_i ∪ X_j ∪ P
        std::vector<Vertex> merged = sm.branch_sets[pi];
        merged.insert(merged.end(), sm.branch_sets[pj].begin(), sm.branch_sets[pj].end());
        merged.insert(merged.end(), path.begin(), path.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        // rebuild pattern with pj merged into pi
        int pn = sm.pattern.num_vertices();
        std::vector<int> newIdx(pn);
        int next = 0;
        for (int v = 0; v < pn; ++v) newIdx[v] = (v == pj) ? -2 : next++;
        for (int v = 0; v < pn; ++v)
            if (newIdx[v] == -2) newIdx[v] = newIdx[pi];

        EdgeList pe;
        for (auto [a, b] : sm.pattern.edges()) {
            int na = newIdx[a], nb = newIdx[b];
            pe.emplace_back(std::min(na, nb), std::max(na, nb));
        }
        StrongModel nextSm;
        nextSm.pattern = build_graph(pn - 1, pe);
        nextSm.branch_sets.resize(pn - 1);
        for (int v = 0; v < pn; ++v) {
            if (v == pj) continue;
            nextSm.branch_sets[newIdx[v]] = (v == pi) ? merged : sm.branch_sets[v];
        }
        for (auto& [e, ws] : sm.witnesses) {
            int na = newIdx[e.first], nb = newIdx[e.second];
            PatternEdge ne{std::min(na, nb), std::max(na, nb)};
            std::vector<Vertex> trimmed;
            for (Vertex w : ws)
                if (w != xHost && w != yHost) trimmed.push_back(w);
            nextSm.witnesses[ne] = std::move(trimmed);
        }
        sm = std::move(nextSm);

        int c2 = static_cast<int>(connected_components(sm.pattern).size());
        if (auto bad = strong_model_violation(g, sm, k + 2 * c2 - 2))
            throw InternalError("make_connected_model: merge broke the model: " + *bad);
    }
    return sm;
}

// The fat-minor extraction: a connected pattern with a k-vertex path (or a
// k-leaf star) and k(k+1) witnesses per edge yields a k-fat-path (k-fat-star)
// model. One witness per consecutive pair is contracted into the branch set to
// realize the spine edge; k more become the degree-2 thickening vertices.
struct FatMinor {
    enum class Kind { FatPath, FatStar };
    Kind kind;
    int k = 0;
    MinorModel model;  // against fat_path(k) / fat_star(k) numbering
};

inline FatMinor fat_minor_from_strong_model(const Graph& g, const StrongModel& sm, int k,
                                            const Limits& lim = Limits::defaults()) {
    if (k < 1) throw InputError("fat_minor_from_strong_model: need k >= 1");
    const Graph& h = sm.pattern;
    if (!is_connected(h)) throw InputError("fat_minor_from_strong_model: pattern disconnected");

    auto pathHyp = find_path_of_length(h, k, lim);
    int starCentre = -1;
    if (!pathHyp) {
        for (int v = 0; v < h.num_vertices(); ++v)
            if (h.degree(v) >= k) {
                starCentre = v;
                break;
            }
        if (starCentre < 0)
            throw InputError("fat_minor_from_strong_model: pattern has neither a " +
                             std::to_string(k) + "-vertex path nor a " + std::to_string(k) +
                             "-leaf star");
    }

    std::vector<char> usedWitness(g.num_vertices(), 0);
    auto takeWitnesses = [&](int a, int b, int count) {
        PatternEdge e{std::min(a, b), std::max(a, b)};
        auto it = sm.witnesses.find(e);
        std::vector<Vertex> picked;
        if (it != sm.witnesses.end())
            for (Vertex w : it->second) {
                if (usedWitness[w]) continue;
                picked.push_back(w);
                if (static_cast<int>(picked.size()) == count) break;
            }
        if (static_cast<int>(picked.size()) < count)
            throw InputError("fat_minor_from_strong_model: edge (" + std::to_string(e.first) +
                             "," + std::to_string(e.second) + ") lacks fresh witnesses");
        for (Vertex w : picked) usedWitness[w] = 1;
        return picked;
    };

    FatMinor out;
    out.k = k;
    if (pathHyp) {
        const auto& p = *pathHyp;  // k pattern vertices in path order
        out.kind = FatMinor::Kind::FatPath;
        out.model.branch_sets.resize(k * k);  // |V(fat_path(k))| = k^2
        for (int i = 0; i < k; ++i) out.model.branch_sets[i] = sm.branch_sets[p[i]];
        for (int i = 0; i + 1 < k; ++i) {
            auto ws = takeWitnesses(p[i], p[i + 1], k + 1);
            out.model.branch_sets[i].push_back(ws[0]);  // realizes the spine edge
            std::sort(out.model.branch_sets[i].begin(), out.model.branch_sets[i].end());
            for (int j = 0; j < k; ++j) out.model.branch_sets[k + i * k + j] = {ws[j + 1]};
        }
    } else {
        out.kind = FatMinor::Kind::FatStar;
        std::vector<int> leaves;
        for (int v : h.neighbours(starCentre)) {
            leaves.push_back(v);
            if (static_cast<int>(leaves.size()) == k) break;
        }
        out.model.branch_sets.resize(1 + k + k * k);
        out.model.branch_sets[0] = sm.branch_sets[starCentre];
        for (int i = 0; i < k; ++i) {
            auto ws = takeWitnesses(starCentre, leaves[i], k + 1);
            auto& leafSet = out.model.branch_sets[1 + i];
            leafSet = sm.branch_sets[leaves[i]];
            leafSet.push_back(ws[0]);
            std::sort(leafSet.begin(), leafSet.end());
            for (int j = 0; j < k; ++j)
                out.model.branch_sets[1 + k + i * k + j] = {ws[j + 1]};
        }
    }
    return out;
}

inline Graph fat_minor_pattern(const FatMinor& fm) {
    return fm.kind == FatMinor::Kind::FatPath ? fat_path(fm.k) : fat_star(fm.k);
}

} // namespace cgc
