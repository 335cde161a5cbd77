#include <doctest.h>

#include <bit>

#include "minors.hpp"

using namespace fmdel;

namespace {

/// Independent oracle: assign every host vertex a branch label in {0,1..,h}
/// and test the raw definition. Exponential; only for n <= 8, |H| <= 4.
bool minor_oracle(const WeightedGraph& g, const WeightedGraph& h) {
    int n = g.n(), m = h.n();
    if (m == 0) return true;
    if (m > n) return false;
    std::vector<int> label(n, 0);
    MaskGraph mg = MaskGraph::of(g);
    auto valid = [&] {
        std::vector<std::uint64_t> branch(m, 0);
        for (int i = 0; i < n; ++i)
            if (label[i]) branch[label[i] - 1] |= 1ULL << i;
        for (int b = 0; b < m; ++b) {
            if (branch[b] == 0) return false;
            if (!mg.connected_within(branch[b])) return false;
        }
        for (const auto& [u, v] : h.edges()) {
            std::uint64_t bu = branch[h.index_of(u)], bv = branch[h.index_of(v)];
            if (!(mg.neighborhood(bu) & bv)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return valid();
        for (int l = 0; l <= m; ++l) {
            label[i] = l;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("has_minor basics") {
    CHECK(has_minor(complete_graph(3), complete_graph(3)));
    CHECK(!has_minor(path_graph(4), complete_graph(3)));  // forests are K3-minor-free
    // K4 minus one edge plus a subdividing vertex on another edge still has a
    // K3 minor (frozen from the branch-set oracle below)
    WeightedGraph g = load_graph("p 5 6\ne 1 2\ne 1 3\ne 2 5\ne 5 3\ne 2 4\ne 3 4\n",
                                 GraphFormat::edgelist);
    CHECK(has_minor(g, complete_graph(3)));
    CHECK(minor_oracle(g, complete_graph(3)));
}

TEST_CASE("has_minor pattern cap") {
    Caps caps;
    caps.minor_pattern = 3;
    CHECK_THROWS_AS(has_minor(complete_graph(5), complete_graph(4), caps), Error);
}

TEST_CASE("has_minor agrees with the label-assignment oracle") {
    Rng rng(7001);
    std::vector<WeightedGraph> patterns = {complete_graph(3), complete_graph(4), path_graph(3),
                                           cycle_graph(4), complete_bipartite(1, 3),
                                           complete_bipartite(3, 2)};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(uniform_index(rng, 5));  // up to 7 vertices
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 4) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        for (const auto& h : patterns) CHECK(has_minor(g, h) == minor_oracle(g, h));
    }
}

TEST_CASE("is_F_minor_free") {
    auto k3 = family_preset("k3");
    CHECK(is_F_minor_free(path_graph(5), k3));
    CHECK(!is_F_minor_free(complete_graph(3), k3));
    // the 2x3 grid is a 6-cycle plus one chord: outerplanar, so minor-free;
    // the 3x3 grid has a K3,2 minor through its middle column
    auto outer = family_preset("outerplanar");
    CHECK(is_F_minor_free(grid_graph(2, 3), outer));
    CHECK(!has_minor(grid_graph(2, 3), complete_bipartite(3, 2)));
    CHECK(!has_minor(grid_graph(2, 3), complete_graph(4)));
    CHECK(has_minor(grid_graph(3, 3), complete_bipartite(3, 2)));
    CHECK(!is_F_minor_free(grid_graph(3, 3), outer));
}

TEST_CASE("family presets") {
    auto k3 = family_preset("k3");
    CHECK(k3.eta == 1);
    CHECK(k3.h == 3);
    CHECK(k3.patterns.size() == 1);
    auto k4 = family_preset("k4");
    CHECK(k4.eta == 2);
    CHECK(k4.h == 6);  // K4 has 6 edges
    auto outer = family_preset("outerplanar");
    CHECK(outer.eta == 2);
    CHECK(outer.h == 6);
    CHECK(outer.patterns.size() == 2);
    CHECK_THROWS_WITH_AS(family_preset("planar"),
                         "family contains no planar graph: both K5 and K3,3 are nonplanar", Error);
    CHECK_THROWS_AS(family_preset("nonsense"), Error);
}

TEST_CASE("custom families") {
    // {K5, K3,3} rejected: no planar pattern
    CHECK_THROWS_AS(make_family({complete_graph(5), complete_bipartite(3, 3)}, 3), Error);
    // K5 alone is nonplanar, adding a planar pattern fixes it
    auto f = make_family({complete_graph(5), cycle_graph(4)}, 3);
    CHECK(f.h == 10);  // K5 has 10 edges
    CHECK_THROWS_AS(make_family({complete_graph(3)}, 1, 2), Error);  // h below bound
    auto parsed = parse_family(R"({"eta":1,"patterns":[{"vertices":[{"id":1},{"id":2},{"id":3}],
        "edges":[[1,2],[2,3],[1,3]]}]})");
    CHECK(parsed.eta == 1);
    CHECK(parsed.h == 3);
    // edgelist-text patterns are accepted too
    auto parsed2 = parse_family("{\"eta\":1,\"patterns\":[\"p 3 3\\ne 1 2\\ne 2 3\\ne 1 3\\n\"]}");
    CHECK(parsed2.h == 3);
    CHECK(has_minor(complete_graph(4), parsed2.patterns[0]));
}
