#pragma once

#include <cstdint>

namespace cgc {

// Central knobs for every exhaustive oracle. All brute-force searches take an
// explicit budget and fail loudly (BudgetError or an Indeterminate result)
// rather than run unbounded. Defaults complete the full acceptance suite in
// well under ten minutes on a laptop.
struct Limits {
    int tree_depth_max_vertices = 16;
    int treewidth_max_vertices = 14;
    int oracle_max_vertices = 22;        // optimal_cluster_colouring / defect_oracle
    int iso_dedup_max_vertices = 12;     // x_family isomorphism dedup bound
    int ternary_max_vertices = 200;      // ternary_lower_bound size guard
    std::uint64_t search_nodes = 50'000'000;  // minor/subgraph/oracle search nodes
    double search_seconds = 0.0;         // 0 = no wall-clock cap

    static Limits defaults() { return Limits{}; }
};

} // namespace cgc
