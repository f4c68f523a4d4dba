#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgc/errors.hpp"
#include "cgc/graph.hpp"
#include "cgc/limits.hpp"

namespace cgc {

// Model of a pattern H in a host G: one branch set per pattern vertex,
// pairwise disjoint, each inducing a connected subgraph, with every pattern
// edge realized by a host edge between the two branch sets.
struct MinorModel {
    std::vector<std::vector<Vertex>> branch_sets;  // indexed by pattern vertex
};

// Three-valued search outcome. Budget exhaustion is a first-class result:
// an exhausted search must never be reported as a definitive "no".
enum class SearchStatus { Yes, No, Indeterminate };

struct MinorResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<MinorModel> model;  // present iff status == Yes
    std::uint64_t nodes_used = 0;

    bool yes() const { return status == SearchStatus::Yes; }
    bool no() const { return status == SearchStatus::No; }
};

// Independent validity check, applied by tests to every model any operation
// emits. Returns an explanation of the first violation, or nullopt.
inline std::optional<std::string> model_violation(const Graph& host, const Graph& pattern,
                                                  const MinorModel& m) {
    if (static_cast<int>(m.branch_sets.size()) != pattern.num_vertices())
        return "model has " + std::to_string(m.branch_sets.size()) + " branch sets for " +
               std::to_string(pattern.num_vertices()) + " pattern vertices";
    std::vector<int> owner(host.num_vertices(), -1);
    for (int x = 0; x < pattern.num_vertices(); ++x) {
        if (m.branch_sets[x].empty()) return "branch set " + std::to_string(x) + " empty";
        for (Vertex v : m.branch_sets[x]) {
            if (!host.in_range(v)) return "branch set " + std::to_string(x) + " out of range";
            if (owner[v] >= 0)
                return "vertex " + std::to_string(v) + " in branch sets " +
                       std::to_string(owner[v]) + " and " + std::to_string(x);
            owner[v] = x;
        }
        if (!is_connected_set(host, m.branch_sets[x]))
            return "branch set " + std::to_string(x) + " not connected";
    }
    for (auto [x, y] : pattern.edges()) {
        bool realized = false;
        for (Vertex u : m.branch_sets[x]) {
            for (Vertex v : host.neighbours(u))
                if (owner[v] == y) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized)
            return "pattern edge (" + std::to_string(x) + "," + std::to_string(y) +
                   ") not realized";
    }
    return std::nullopt;
}

inline bool is_valid_model(const Graph& host, const Graph& pattern, const MinorModel& m) {
    return !model_violation(host, pattern, m).has_value();
}

// Minor-of-minor composition: given a model of `mid` in `host` and a model of
// `pattern` in `mid`, produce the model of `pattern` in `host`.
inline MinorModel compose_models(const MinorModel& outer, const MinorModel& inner) {
    MinorModel out;
    out.branch_sets.resize(inner.branch_sets.size());
    for (std::size_t x = 0; x < inner.branch_sets.size(); ++x) {
        for (Vertex mid : inner.branch_sets[x])
            for (Vertex v : outer.branch_sets[mid]) out.branch_sets[x].push_back(v);
        std::sort(out.branch_sets[x].begin(), out.branch_sets[x].end());
    }
    return out;
}

namespace detail {

struct BudgetStop {};

// Branch-and-bound minor embedding. Pattern vertices are placed one at a time
// in a connected order; for each, all connected subsets of the remaining free
// host vertices that touch every earlier adjacent branch set are enumerated
// (smallest-vertex canonical form, so each subset appears exactly once).
// Pruning: subset size caps from the number of unplaced pattern vertices,
// branch-set boundary >= pattern degree, and reachability of required sets.
class MinorSearch {
  public:
    MinorSearch(const Graph& host, const Graph& pattern, std::uint64_t node_budget)
        : host_(host), pat_(pattern), budget_(node_budget) {
        hn_ = host.num_vertices();
        pn_ = pattern.num_vertices();
        adj_.assign(hn_, 0);
        for (Vertex v = 0; v < hn_; ++v)
            for (Vertex w : host.neighbours(v)) adj_[v] |= bit(w);
        order_ = placement_order();
        req_.assign(pn_, {});
        for (int i = 0; i < pn_; ++i)
            for (int j = 0; j < i; ++j)
                if (pat_.adjacent(order_[i], order_[j])) req_[i].push_back(j);
        branch_.assign(pn_, 0);
        nbr_.assign(pn_, 0);
        free_ = hn_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hn_) - 1;
    }

    MinorResult run() {
        MinorResult r;
        try {
            bool ok = place(0);
            r.status = ok ? SearchStatus::Yes : SearchStatus::No;
            if (ok) {
                MinorModel m;
                m.branch_sets.resize(pn_);
                for (int i = 0; i < pn_; ++i) {
                    std::uint64_t s = branch_[i];
                    while (s) {
                        int v = __builtin_ctzll(s);
                        s &= s - 1;
                        m.branch_sets[order_[i]].push_back(v);
                    }
                }
                r.model = std::move(m);
            }
        } catch (const BudgetStop&) {
            r.status = SearchStatus::Indeterminate;
        }
        r.nodes_used = nodes_;
        return r;
    }

  private:
    const Graph& host_;
    const Graph& pat_;
    std::uint64_t budget_;
    int hn_, pn_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> order_;
    std::vector<std::vector<int>> req_;
    std::vector<std::uint64_t> branch_;  // by order position
    std::vector<std::uint64_t> nbr_;     // free-side neighbourhood of each placed set
    std::uint64_t free_ = 0;
    std::uint64_t nodes_ = 0;

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void tick() {
        if (++nodes_ > budget_) throw BudgetStop{};
    }

    // Connected placement order: start from a maximum-degree vertex; then
    // prefer the vertex with the most placed neighbours (most constrained),
    // ties by higher degree then lower index.
    std::vector<int> placement_order() const {
        std::vector<int> order;
        std::vector<char> placed(pn_, 0);
        for (int step = 0; step < pn_; ++step) {
            int best = -1, bestAnchored = -1, bestDeg = -1;
            for (int v = 0; v < pn_; ++v) {
                if (placed[v]) continue;
                int anchored = 0;
                for (int u : pat_.neighbours(v))
                    if (placed[u]) ++anchored;
                int deg = pat_.degree(v);
                if (anchored > bestAnchored ||
                    (anchored == bestAnchored && deg > bestDeg)) {
                    best = v;
                    bestAnchored = anchored;
                    bestDeg = deg;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
        return order;
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

    bool place(int i) {
        tick();
        if (i == pn_) return true;
        int unplacedAfter = pn_ - i - 1;
        int cap = __builtin_popcountll(free_) - unplacedAfter;
        if (cap <= 0) return false;
        // seeds in ascending order; sets are canonicalized by their minimum
        // vertex, so seeds below the current one are banned
        std::uint64_t seeds = free_;
        while (seeds) {
            int v = __builtin_ctzll(seeds);
            seeds &= seeds - 1;
            std::uint64_t allowed = free_ & ~(bit(v) - 1);
            if (grow(i, bit(v), adj_[v] & allowed & ~bit(v), allowed, cap)) return true;
        }
        return false;
    }

    // S: current candidate branch set; ext: frontier vertices that may extend
    // it; allowed: vertices this canonical enumeration may ever use.
    bool grow(int i, std::uint64_t S, std::uint64_t ext, std::uint64_t allowed, int cap) {
        tick();
        // feasibility: every required set must be touchable within allowed
        for (int j : req_[i])
            if (!(nbr_[j] & (S | allowed))) return false;

        bool touchesAll = true;
        for (int j : req_[i])
            if (!(nbr_[j] & S)) {
                touchesAll = false;
                break;
            }
        if (touchesAll) {
            std::uint64_t boundary = neighbourhood(S) & ~S;
            if (__builtin_popcountll(boundary) >= pat_.degree(order_[i])) {
                branch_[i] = S;
                std::uint64_t savedFree = free_;
                free_ &= ~S;
                std::uint64_t savedNbrs[64];
                for (int j = 0; j < i; ++j) {
                    savedNbrs[j] = nbr_[j];
                    nbr_[j] &= free_;
                }
                nbr_[i] = neighbourhood(S) & free_;
                if (place(i + 1)) return true;
                for (int j = 0; j < i; ++j) nbr_[j] = savedNbrs[j];
                free_ = savedFree;
                branch_[i] = 0;
            }
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

// Exhaustive minor containment with an explicit node budget. A valid model is
// returned on success; "no" is definitive only when the search completed.
inline MinorResult has_minor(const Graph& host, const Graph& pattern,
                             const Limits& lim = Limits::defaults()) {
    if (host.num_vertices() > 64)
        throw BudgetError("has_minor: host exceeds 64 vertices, exact search refused");
    MinorResult r;
    if (pattern.num_vertices() == 0) {
        r.status = SearchStatus::Yes;
        r.model = MinorModel{};
        return r;
    }
    if (pattern.num_vertices() > host.num_vertices() || pattern.num_edges() > host.num_edges()) {
        r.status = SearchStatus::No;
        return r;
    }
    detail::MinorSearch search(host, pattern, lim.search_nodes);
    return search.run();
}

} // namespace cgc
