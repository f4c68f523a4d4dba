#include <catch2/catch_amalgamated.hpp>

#include "cgc/bfs.hpp"
#include "cgc/blocks.hpp"
#include "cgc/generators.hpp"
#include "cgc/graph.hpp"
#include "cgc/treedepth.hpp"
#include "cgc/treewidth.hpp"
#include "test_oracles.hpp"

using namespace cgc;

TEST_CASE("build_graph basics") {
    Graph k4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    Graph p3 = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(p3.num_edges() == 2);  // duplicate collapsed

    Graph single = build_graph(1, {});
    CHECK(single.num_vertices() == 1);
    CHECK(single.num_edges() == 0);

    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InputError);
}

TEST_CASE("adjacency symmetric and sorted on seeded graphs") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Graph g = random_graph(9, 0.4, seed);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto& nb = g.neighbours(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex w : nb) CHECK(g.adjacent(w, v));
        }
    }
}

TEST_CASE("bfs layering examples") {
    auto p4 = bfs_layering(path_graph(4), 0);
    CHECK(p4.layers == std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}});

    auto k4 = bfs_layering(complete_graph(4), 0);
    CHECK(k4.layers == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});

    auto c6 = bfs_layering(cycle_graph(6), 0);
    CHECK(c6.layers == std::vector<std::vector<Vertex>>{{0}, {1, 5}, {2, 4}, {3}});

    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(bfs_layering(two, 0), InputError);
}

TEST_CASE("bfs layering matches shortest-path oracle and spans adjacent layers") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_graph(9, 0.45, seed);
        if (!is_connected(g)) continue;
        auto d = testor::floyd_warshall(g);
        auto l = bfs_layering(g, 0);
        for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(l.layer[v] == d[0][v]);
        for (auto [u, v] : g.edges()) CHECK(std::abs(l.layer[u] - l.layer[v]) <= 1);
    }
}

TEST_CASE("block decomposition examples") {
    auto k4 = block_decomposition(complete_graph(4), 0);
    REQUIRE(k4.blocks.size() == 1);
    CHECK(k4.blocks[0] == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(k4.cut_vertices.empty());

    // bowtie: triangles {0,1,2} and {2,3,4} sharing vertex 2
    Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto b = block_decomposition(bowtie, 0);
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<Vertex>{2});
    CHECK(b.block_root[0] == 0);
    CHECK(b.block_root[1] == 2);
    CHECK(b.parent_block[1] == 0);

    auto p4 = block_decomposition(path_graph(4), 0);
    REQUIRE(p4.blocks.size() == 3);
    CHECK(p4.block_root == std::vector<Vertex>{0, 1, 2});

    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(block_decomposition(two, 0), InputError);
}

TEST_CASE("block decomposition vs removal oracle") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = random_graph(8, 0.3, seed);
        if (!is_connected(g) || g.num_vertices() < 3) continue;
        auto b = block_decomposition(g, 0);
        std::vector<char> cut(g.num_vertices(), 0);
        for (Vertex v : b.cut_vertices) cut[v] = 1;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            std::vector<Vertex> rest;
            for (Vertex u = 0; u < g.num_vertices(); ++u)
                if (u != v) rest.push_back(u);
            bool disconnects = !is_connected(induced_subgraph(g, rest));
            CHECK(disconnects == static_cast<bool>(cut[v]));
        }
        // blocks cover all edges
        std::size_t covered = 0;
        for (auto [u, v] : g.edges()) {
            bool in_block = false;
            for (const auto& blk : b.blocks)
                if (std::binary_search(blk.begin(), blk.end(), u) &&
                    std::binary_search(blk.begin(), blk.end(), v))
                    in_block = true;
            if (in_block) ++covered;
        }
        CHECK(covered == static_cast<std::size_t>(g.num_edges()));
    }
}

TEST_CASE("tree depth examples") {
    CHECK(tree_depth(complete_graph(4)) == 4);
    CHECK(connected_tree_depth(complete_graph(4)) == 4);

    Graph c33 = tree_closure(3, 3);
    CHECK(tree_depth(c33) == 3);
    CHECK(connected_tree_depth(c33) == 3);

    Graph twoTriangles = disjoint_copies(complete_graph(3), 2);
    CHECK(tree_depth(twoTriangles) == 3);
    CHECK(connected_tree_depth(twoTriangles) == 4);

    CHECK(tree_depth(empty_graph(0)) == 0);
    CHECK_THROWS_AS(tree_depth(empty_graph(40)), BudgetError);
}

TEST_CASE("tree depth closed forms") {
    for (int n = 1; n <= 6; ++n) CHECK(tree_depth(complete_graph(n)) == n);
    for (int n = 1; n <= 15; ++n) {
        int expected = 0;
        while ((1 << expected) < n + 1) ++expected;  // ceil(log2(n+1))
        CHECK(tree_depth(path_graph(n)) == expected);
    }
}

TEST_CASE("connected tree depth equals tree depth on connected graphs, matches oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = random_graph(7, 0.35, seed);
        int td = tree_depth(g);
        int ctd = connected_tree_depth(g);
        CHECK(ctd == testor::ctd_by_root_recursion(g));
        if (is_connected(g)) CHECK(ctd == td);
        CHECK((ctd == td || ctd == td + 1));
    }
}

TEST_CASE("treewidth examples") {
    CHECK(treewidth_exact(path_graph(7)) == 1);
    CHECK(treewidth_exact(random_tree(9, 3, 7)) == 1);
    CHECK(treewidth_exact(complete_graph(5)) == 4);
    CHECK(treewidth_exact(cycle_graph(6)) == 2);
    CHECK(treewidth_exact(empty_graph(3)) == 0);
    CHECK_THROWS_AS(treewidth_exact(empty_graph(20)), BudgetError);
}

TEST_CASE("treewidth matches permutation oracle") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = random_graph(6, 0.5, seed);
        CHECK(treewidth_exact(g) == testor::treewidth_by_permutations(g));
    }
}

TEST_CASE("connected components and induced subgraphs") {
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1] == std::vector<Vertex>{3, 4});
    CHECK(comps[2] == std::vector<Vertex>{5});

    Graph sub = induced_subgraph(g, {1, 2, 5});
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.num_edges() == 1);
}
