#include <doctest.h>

#include "minors.hpp"
#include "treewidth.hpp"

using namespace fmdel;

TEST_CASE("treewidth of small graphs") {
    auto k3 = treewidth_exact(complete_graph(3));
    CHECK(k3.width == 2);
    CHECK(!validate_decomposition(complete_graph(3), k3.decomposition));

    auto tree = treewidth_exact(path_graph(5));
    CHECK(tree.width == 1);
    CHECK(!validate_decomposition(path_graph(5), tree.decomposition));

    // 3x3 grid has treewidth 3 (frozen from the elimination-ordering DP; the
    // eta<=2 fast paths below independently rule out smaller widths)
    auto grid = treewidth_exact(grid_graph(3, 3));
    CHECK(grid.width == 3);
    CHECK(!validate_decomposition(grid_graph(3, 3), grid.decomposition));
    CHECK(grid.decomposition.width() == grid.width);

    CHECK(treewidth_exact(WeightedGraph{}).width == -1);
    CHECK(treewidth_exact(complete_graph(1)).width == 0);
    CHECK(treewidth_exact(complete_graph(4)).width == 3);
}

TEST_CASE("treewidth cap") {
    Caps caps;
    caps.tw_exact = 3;
    CHECK_THROWS_AS(treewidth_exact(complete_graph(5), caps), Error);
}

TEST_CASE("is_tw_at_most fast paths agree with the DP") {
    std::vector<WeightedGraph> corpus = {
        path_graph(6),    complete_graph(3), complete_graph(4), grid_graph(2, 3),
        grid_graph(3, 3), cycle_graph(5),    complete_bipartite(2, 3),
        load_graph("p 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n", GraphFormat::edgelist),
    };
    for (const auto& g : corpus)
        for (int eta = 1; eta <= 2; ++eta)
            CHECK(is_tw_at_most(g, eta) == (treewidth_exact(g).width <= eta));
}

TEST_CASE("is_tw_at_most examples") {
    CHECK(is_tw_at_most(path_graph(7), 1));          // forests have treewidth <= 1
    CHECK(!is_tw_at_most(complete_graph(4), 2));     // tw(K4) = 3
    // subdividing an edge of K4 keeps the K4 minor, so treewidth stays 3
    WeightedGraph sub = load_graph("p 5 7\ne 1 2\ne 1 3\ne 2 3\ne 2 4\ne 3 4\ne 1 5\ne 5 4\n",
                                   GraphFormat::edgelist);
    CHECK(!is_tw_at_most(sub, 2));
    CHECK(treewidth_exact(sub).width == 3);
    // K4 minus an edge with another edge subdivided is series-parallel: tw 2
    WeightedGraph sp = load_graph("p 5 6\ne 1 2\ne 1 3\ne 2 5\ne 5 3\ne 2 4\ne 3 4\n",
                                  GraphFormat::edgelist);
    CHECK(!is_tw_at_most(sp, 1));
    CHECK(is_tw_at_most(sp, 2));
    CHECK_THROWS_AS(is_tw_at_most(complete_graph(3), -1), Error);
}

TEST_CASE("edge count bound |E| <= tw * |V|") {
    for (const auto& g : {complete_graph(4), grid_graph(3, 3), cycle_graph(6), path_graph(4)}) {
        auto tw = treewidth_exact(g);
        if (g.m() > 0) CHECK(g.m() <= static_cast<long long>(tw.width) * g.n());
    }
}

TEST_CASE("lca basics") {
    // path-tree 1 -> 2 -> 3 rooted at 1 (node ids 0,1,2)
    RootedTree t;
    t.parent = {-1, 0, 1};
    t.root = 0;
    CHECK(lca_closure(t, {}).empty());
    CHECK(lca_closure(t, {0}) == std::vector<int>{0});
    CHECK(lca_closure(t, {1, 2}) == std::vector<int>{1, 2});
    CHECK(t.lca(1, 2) == 1);
    CHECK_THROWS_AS(lca_closure(t, {7}), Error);
}

TEST_CASE("lca closure bounds on random trees") {
    Rng rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(uniform_index(rng, 12));
        RootedTree t;
        t.parent.assign(n, -1);
        t.root = 0;
        for (int v = 1; v < n; ++v) t.parent[v] = static_cast<int>(uniform_index(rng, v));
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (uniform_index(rng, 3) == 0) s.push_back(v);
        auto closure = lca_closure(t, s);
        CHECK(closure.size() <= 2 * s.size());
        for (int v : s) CHECK(std::binary_search(closure.begin(), closure.end(), v));
        // closure is itself LCA-closed
        auto twice = lca_closure(t, closure);
        CHECK(twice == closure);
    }
}

TEST_CASE("decomposition extraction stays valid on a corpus") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(uniform_index(rng, 7));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 4) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        auto tw = treewidth_exact(g);
        auto reason = validate_decomposition(g, tw.decomposition);
        if (reason) FAIL(*reason);
        CHECK(tw.decomposition.width() == tw.width);
    }
}

TEST_CASE("treewidth frozen values for classic graphs") {
    CHECK(treewidth_exact(cycle_graph(6)).width == 2);
    CHECK(treewidth_exact(complete_graph(5)).width == 4);
    CHECK(treewidth_exact(complete_bipartite(3, 3)).width == 3);
    // Petersen graph
    WeightedGraph petersen = load_graph(
        "p 10 15\n"
        "e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"
        "e 1 6\ne 2 7\ne 3 8\ne 4 9\ne 5 10\n"
        "e 6 8\ne 8 10\ne 10 7\ne 7 9\ne 9 6\n",
        GraphFormat::edgelist);
    auto tw = treewidth_exact(petersen);
    CHECK(tw.width == 4);
    CHECK(!validate_decomposition(petersen, tw.decomposition));
}
