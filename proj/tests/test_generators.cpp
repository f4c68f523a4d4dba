#include <catch2/catch_amalgamated.hpp>

#include "cgc/generators.hpp"
#include "cgc/isomorphism.hpp"

using namespace cgc;

TEST_CASE("fan counts") {
    CHECK(is_isomorphic(fan(1), complete_graph(2)));

    Graph f3 = fan(3);
    CHECK(f3.num_vertices() == 4);
    CHECK(f3.num_edges() == 5);
    CHECK(f3.adjacent(0, 1));
    CHECK(f3.adjacent(0, 3));  // contains a triangle 0,1,dominant

    Graph f6 = fan(6);
    CHECK(f6.num_vertices() == 7);
    CHECK(f6.num_edges() == 11);
    CHECK_THROWS_AS(fan(0), InputError);

    for (int n = 1; n <= 20; ++n) {
        Graph f = fan(n);
        CHECK(f.num_vertices() == n + 1);
        CHECK(f.num_edges() == 2 * n - 1);
        CHECK(f.degree(n) == n);
    }
}

TEST_CASE("fat star counts and identity with C(3,n)") {
    CHECK(is_isomorphic(fat_star(1), complete_graph(3)));

    Graph s2 = fat_star(2);
    CHECK(s2.num_vertices() == 7);
    CHECK(s2.num_edges() == 10);

    for (int n = 1; n <= 6; ++n) {
        Graph s = fat_star(n);
        CHECK(s.num_vertices() == 1 + n + n * n);
        CHECK(s.num_edges() == n + 2 * n * n);
    }
    for (int n = 1; n <= 3; ++n) CHECK(is_isomorphic(fat_star(n), tree_closure(3, n)));
    CHECK_THROWS_AS(fat_star(0), InputError);
}

TEST_CASE("fat path counts") {
    CHECK(fat_path(1).num_vertices() == 1);

    Graph p2 = fat_path(2);
    CHECK(p2.num_vertices() == 4);
    CHECK(p2.num_edges() == 5);

    Graph p3 = fat_path(3);
    CHECK(p3.num_vertices() == 9);
    CHECK(p3.num_edges() == 14);

    for (int n = 1; n <= 6; ++n) {
        Graph p = fat_path(n);
        CHECK(p.num_vertices() == n * n);
        CHECK(p.num_edges() == (n - 1) + 2 * n * (n - 1));
    }
    CHECK_THROWS_AS(fat_path(0), InputError);
}

TEST_CASE("complete k-ary trees") {
    RootedTree t1 = complete_kary_tree(1, 5);
    CHECK(t1.n == 1);

    RootedTree t32 = complete_kary_tree(3, 2);
    CHECK(t32.n == 7);
    CHECK(tree_height(t32) == 3);

    RootedTree t23 = complete_kary_tree(2, 3);
    CHECK(t23.n == 4);
    auto leaves = tree_leaves(t23);
    CHECK((leaves[1] && leaves[2] && leaves[3] && !leaves[0]));

    for (int k = 2; k <= 3; ++k)
        for (int h = 1; h <= 3; ++h) {
            RootedTree t = complete_kary_tree(h, k);
            int expected = 0, level = 1;
            for (int d = 0; d < h; ++d) {
                expected += level;
                level *= k;
            }
            CHECK(t.n == expected);
            CHECK(tree_height(t) == h);
        }
}

TEST_CASE("closure and weak closure") {
    // chain of 4 nodes closes to K_4
    RootedTree chain;
    chain.n = 4;
    chain.root = 0;
    chain.parent = {0, 0, 1, 2};
    CHECK(is_isomorphic(closure(chain), complete_graph(4)));

    Graph c32 = tree_closure(3, 2);
    CHECK(c32.num_vertices() == 7);
    CHECK(c32.num_edges() == 10);

    CHECK(is_isomorphic(tree_closure(2, 4), star_graph(4)));

    for (int k = 1; k <= 5; ++k) CHECK(tree_weak_closure(2, k) == tree_closure(2, k));

    Graph w32 = tree_weak_closure(3, 2);
    CHECK(w32.num_vertices() == 7);
    CHECK(w32.num_edges() == 8);

    Graph w33 = tree_weak_closure(3, 3);
    CHECK(w33.num_vertices() == 13);
    CHECK(w33.num_edges() == 18);
}

TEST_CASE("x_prime") {
    CHECK(is_isomorphic(x_prime(empty_graph(1), 3), star_graph(3)));

    Graph g = x_prime(path_graph(3), 2);  // two disjoint P_3 plus dominant
    CHECK(g.num_vertices() == 7);
    CHECK(g.degree(6) == 6);
    CHECK(g.num_edges() == 4 + 6);

    CHECK(is_isomorphic(x_prime(star_graph(2), 2), fat_star(2)));
}

TEST_CASE("x_plus") {
    // K_2 with one 2-clique, k(c-1)+1 = 3 new vertices: K_{2,3} plus an edge
    auto r = x_plus(complete_graph(2), 2, 2);
    REQUIRE(r.added);
    CHECK(r.graph.num_vertices() == 5);
    CHECK(r.graph.num_edges() == 7);

    // c=1: one new vertex per path edge
    auto p = x_plus(path_graph(3), 2, 1);
    REQUIRE(p.added);
    CHECK(p.graph.num_vertices() == 5);
    CHECK(p.graph.num_edges() == 6);

    auto none = x_plus(empty_graph(1), 2, 3);
    CHECK_FALSE(none.added);
    CHECK(none.graph == empty_graph(1));
}

TEST_CASE("x_plusplus") {
    auto k4 = x_plusplus(complete_graph(2), 3, 1);  // path of 2 complete to K_2
    REQUIRE(k4.added);
    CHECK(is_isomorphic(k4.graph, complete_graph(4)));

    auto big = x_plusplus(complete_graph(2), 3, 2);  // path of 9 complete to both ends
    REQUIRE(big.added);
    CHECK(big.graph.num_vertices() == 11);
    CHECK(big.graph.num_edges() == 1 + 8 + 18);

    auto none = x_plusplus(empty_graph(3), 3, 2);
    CHECK_FALSE(none.added);
}

TEST_CASE("x_family") {
    auto x13 = x_family(1, 3, 10);
    REQUIRE(x13.size() == 2);
    CHECK(is_isomorphic(x13[0], path_graph(4)));
    CHECK(is_isomorphic(x13[1], star_graph(3)));

    // at c=1 both seeds collapse to K_2
    auto x11 = x_family(1, 1, 10);
    REQUIRE(x11.size() == 1);
    CHECK(is_isomorphic(x11[0], complete_graph(2)));

    auto x21 = x_family(2, 1, 10);
    bool hasTriangle = false;
    for (const auto& g : x21)
        if (is_isomorphic(g, complete_graph(3))) hasTriangle = true;
    CHECK(hasTriangle);  // x_prime(K_2,1) = K_3

    auto x31 = x_family(3, 1, 10);
    bool hasK4 = false;
    for (const auto& g : x31)
        if (is_isomorphic(g, complete_graph(4))) hasK4 = true;
    CHECK(hasK4);  // x_plusplus(K_2,3,1) = K_4

    CHECK(x_family(2, 2, 0).empty());
}

TEST_CASE("ternary lower bound family") {
    for (int c = 1; c <= 4; ++c) CHECK(ternary_lower_bound(2, c) == path_graph(c + 1));

    CHECK(is_isomorphic(ternary_lower_bound(3, 1), complete_graph(4)));

    Graph g32 = ternary_lower_bound(3, 2);
    CHECK(g32.num_vertices() == 21);

    // size recurrence within the test range
    for (int c = 1; c <= 2; ++c) {
        int prev = c + 1;
        for (int k = 3; k <= 4; ++k) {
            std::int64_t expect = (c + 1) + static_cast<std::int64_t>(c) * (2 * c - 1) * prev;
            if (expect > 200) {
                CHECK_THROWS_AS(ternary_lower_bound(k, c), BudgetError);
                break;
            }
            Graph g = ternary_lower_bound(k, c);
            CHECK(g.num_vertices() == expect);
            prev = static_cast<int>(expect);
        }
    }
}

TEST_CASE("decorate") {
    Graph k2 = decorate(empty_graph(1), empty_graph(1), {0});
    CHECK(is_isomorphic(k2, complete_graph(2)));

    Graph d = decorate(complete_graph(2), empty_graph(2), {0, 1});
    CHECK(d.num_vertices() == 4);
    CHECK(d.num_edges() == 5);  // K_{2,2} plus one edge

    Graph p = decorate(path_graph(3), path_graph(2), {1});
    CHECK(p.num_vertices() == 5);
    CHECK(p.num_edges() == 5);

    CHECK_THROWS_AS(decorate(path_graph(3), empty_graph(1), {0, 2}), InputError);
}

TEST_CASE("random graph determinism and extremes") {
    CHECK(random_graph(5, 0.0, 123).num_edges() == 0);
    CHECK(random_graph(5, 1.0, 123).num_edges() == 10);
    Graph a = random_graph(8, 0.3, 42);
    Graph b = random_graph(8, 0.3, 42);
    CHECK(a == b);
    // frozen golden value for seed 42 (recorded from the pinned PRNG)
    CHECK(a.num_edges() == 11);
}

TEST_CASE("random tree is a tree under the degree cap") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph t = random_tree(10, 3, seed);
        CHECK(t.num_edges() == 9);
        CHECK(is_connected(t));
        CHECK(t.max_degree() <= 3);
    }
}
