#include <doctest.h>

#include <bit>

#include "minors.hpp"
#include "oracles.hpp"
#include "separations.hpp"
#include "treewidth.hpp"

using namespace fmdel;

namespace {

/// Definition-chasing oracle: every (S, component-with-N(C)=S) pair with the
/// treewidth check done by the exact DP.
std::vector<Separation> simple_separations_oracle(const WeightedGraph& g, int eta) {
    std::vector<Separation> out;
    int n = g.n();
    for (std::uint64_t smask = 0; smask < (1ULL << n); ++smask) {
        if (std::popcount(smask) > 2 * eta + 2) continue;
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (smask >> i & 1) s.push_back(g.id_at(i));
        for (const auto& comp : g.removed(s).components()) {
            if (g.open_neighborhood(comp) != s) continue;
            if (treewidth_exact(g.induced(comp)).width > eta) continue;
            out.push_back({comp, s, SepKind::simple});
        }
    }
    return out;
}

bool same_separation_set(std::vector<Separation> a, std::vector<Separation> b) {
    auto key = [](const Separation& s) { return std::make_pair(s.c, s.s); };
    auto cmp = [&](const Separation& x, const Separation& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (key(a[i]) != key(b[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("simple separations of K3 at eta=1") {
    // frozen from the definition-chasing oracle: one per vertex and one per pair
    auto seps = enumerate_simple_separations(complete_graph(3), 1);
    CHECK(seps.size() == 6);
    CHECK(same_separation_set(seps, simple_separations_oracle(complete_graph(3), 1)));
    int singles = 0, pairs = 0;
    for (const auto& sep : seps) {
        if (sep.c.size() == 1) ++singles;
        if (sep.c.size() == 2) ++pairs;
        CHECK(vset::unite(sep.c, sep.s) == VertexSet{1, 2, 3});
    }
    CHECK(singles == 3);
    CHECK(pairs == 3);
}

TEST_CASE("simple separations: single vertex and empty graph") {
    WeightedGraph one = load_graph("p 1 0\n", GraphFormat::edgelist);
    auto seps = enumerate_simple_separations(one, 1);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].c == VertexSet{1});
    CHECK(seps[0].s.empty());
    CHECK(enumerate_simple_separations(WeightedGraph{}, 1).empty());
}

TEST_CASE("simple separations match the oracle on random graphs") {
    Rng rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(uniform_index(rng, 5));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 5) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        CHECK(same_separation_set(enumerate_simple_separations(g, 1),
                                  simple_separations_oracle(g, 1)));
    }
}

TEST_CASE("lt-maximality on K3") {
    auto seps = enumerate_simple_separations(complete_graph(3), 1);
    for (const auto& sep : seps) {
        bool expect = sep.c.size() == 2;  // pairs are maximal, singletons are not
        CHECK(is_lt_maximal(sep, seps) == expect);
    }
}

TEST_CASE("lt-maximality of an isolated vertex") {
    WeightedGraph one = load_graph("p 1 0\n", GraphFormat::edgelist);
    auto seps = enumerate_simple_separations(one, 1);
    CHECK(is_lt_maximal(seps[0], seps));
}

TEST_CASE("C1 ⊆ C2 implies C1∪S1 ⊆ C2∪S2 for simple separations") {
    Rng rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(uniform_index(rng, 4));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 5) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        auto seps = enumerate_simple_separations(g, 1);
        for (const auto& a : seps)
            for (const auto& b : seps)
                if (vset::is_subset(a.c, b.c))
                    CHECK(vset::is_subset(a.protrusion(), b.protrusion()));
    }
}

TEST_CASE("hitting family of K3 at eta=1") {
    auto fam = build_hitting_family(complete_graph(3), 1);
    REQUIRE(fam.separations.size() == 3);
    for (const auto& sep : fam.separations) {
        CHECK(sep.kind == SepKind::semi_simple);
        CHECK(sep.c.size() == 2);
        CHECK(sep.s.size() == 1);
    }
    CHECK(check_family_structure(complete_graph(3), 1, fam).empty());
}

TEST_CASE("hitting family of K4 at eta=1") {
    // Every 2-subset C with its complement S is a maximal simple 1-separation
    // (an edge has treewidth 1), so the family consists of six semi-simple
    // members covering all edges and no edge-pairs.
    auto fam = build_hitting_family(complete_graph(4), 1);
    REQUIRE(fam.separations.size() == 6);
    for (const auto& sep : fam.separations) {
        CHECK(sep.kind == SepKind::semi_simple);
        CHECK(sep.c.size() == 2);
        CHECK(sep.s.size() == 2);
        CHECK(sep.protrusion() == complete_graph(4).vertices());
    }
    CHECK(check_family_structure(complete_graph(4), 1, fam).empty());
}

TEST_CASE("hitting family of K5 at eta=1") {
    // removing any 3-subset leaves an edge (tw 1), so the maximal simple
    // separations are the ten (pair, complementary triple) splits
    auto fam = build_hitting_family(complete_graph(5), 1);
    REQUIRE(fam.separations.size() == 10);
    for (const auto& sep : fam.separations) {
        CHECK(sep.kind == SepKind::semi_simple);
        CHECK(sep.c.size() == 2);
        CHECK(sep.s.size() == 3);
    }
    CHECK(check_family_structure(complete_graph(5), 1, fam).empty());
}

TEST_CASE("edge-pairs appear when no simple separation covers an edge") {
    // K7 at eta=1: deleting any allowed S (|S| <= 4) leaves a K3 or larger,
    // so there are no simple 1-separations and every edge becomes an edge-pair.
    CHECK(enumerate_simple_separations(complete_graph(7), 1).empty());
    auto fam = build_hitting_family(complete_graph(7), 1);
    REQUIRE(fam.separations.size() == 21);
    for (const auto& sep : fam.separations) CHECK(sep.kind == SepKind::edge_pair);
    CHECK(check_family_structure(complete_graph(7), 1, fam).empty());
}

TEST_CASE("hitting family rejects tw(G) <= eta") {
    CHECK_THROWS_AS(build_hitting_family(path_graph(5), 1), Error);
}

TEST_CASE("hitting family structure holds on random graphs") {
    Rng rng(777);
    int built = 0;
    for (int trial = 0; trial < 30 && built < 12; ++trial) {
        int n = 4 + static_cast<int>(uniform_index(rng, 5));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1 + uniform_index(rng, 4));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 5) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        if (is_tw_at_most(g, 1)) continue;
        ++built;
        auto fam = build_hitting_family(g, 1);
        CHECK(check_family_structure(g, 1, fam).empty());
        CHECK(check_protrusion_bound(g, 1, fam));
        auto all = enumerate_simple_separations(g, 1);
        CHECK(fam.separations.size() <= all.size() + static_cast<std::size_t>(g.m()));
    }
    CHECK(built >= 5);
}

TEST_CASE("important separators: basic shapes") {
    // star: center v adjacent to X, no separator avoiding X exists
    WeightedGraph star = load_graph("p 3 2\ne 1 2\ne 1 3\n", GraphFormat::edgelist);
    CHECK(enumerate_important_separators(star, 1, {2, 3}, 2).empty());
    // path v-a-x: the unique cut vertex
    WeightedGraph path = path_graph(3);
    auto seps = enumerate_important_separators(path, 1, {3}, 1);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0] == VertexSet{2});
    CHECK_THROWS_AS(enumerate_important_separators(path, 3, {3}, 1), Error);
}

TEST_CASE("important separators: two internally disjoint paths") {
    // v=1 joined to x=6 via 1-2-6 and 1-3-4-6. The separator {2,4} (nearest
    // x on each path) dominates {2,3}, so it is the unique important one.
    // Frozen from the definition oracle.
    WeightedGraph g =
        load_graph("p 6 5\ne 1 2\ne 2 6\ne 1 3\ne 3 4\ne 4 6\n", GraphFormat::edgelist);
    auto got = enumerate_important_separators(g, 1, {6}, 2);
    CHECK(got == brute_important_separators(g, 1, {6}, 2));
    REQUIRE(got.size() == 1);
    CHECK(got[0] == VertexSet{2, 4});
}

TEST_CASE("important separators: incomparable pair") {
    // v=1, cut vertex 2 branching to 3 and 4 which both reach x=5: both {2}
    // and {3,4} are important (frozen from the definition oracle).
    WeightedGraph g =
        load_graph("p 5 5\ne 1 2\ne 2 3\ne 2 4\ne 3 5\ne 4 5\n", GraphFormat::edgelist);
    auto got = enumerate_important_separators(g, 1, {5}, 2);
    CHECK(got == brute_important_separators(g, 1, {5}, 2));
    REQUIRE(got.size() == 2);
    CHECK(got[0] == VertexSet{2});
    CHECK(got[1] == VertexSet{3, 4});
}

TEST_CASE("important separators agree with the oracle on random graphs") {
    Rng rng(60601);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(uniform_index(rng, 5));  // up to 8
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 4) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        VertexId v = 1;
        VertexSet x{n};
        if (uniform_index(rng, 2)) x = VertexSet{n - 1, n};
        int k = 1 + static_cast<int>(uniform_index(rng, 4));
        auto got = enumerate_important_separators(g, v, x, k);
        auto want = brute_important_separators(g, v, x, k);
        CHECK(got == want);
        CHECK(got.size() <= static_cast<std::size_t>(1) << (2 * k));  // 4^k
    }
}

TEST_CASE("maximal simple separations avoiding a modulator give important separators") {
    // (C,S) maximal simple, X a minimal modulator disjoint
    // from C∪S, v in C  =>  S is an important (v,X)-separator with k = 2η+2.
    Rng rng(140);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 6; ++trial) {
        int n = 5 + static_cast<int>(uniform_index(rng, 3));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 5) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        if (is_tw_at_most(g, 1)) continue;
        auto all = enumerate_simple_separations(g, 1);
        auto modulators = all_modulators(g, 1);
        bool any = false;
        for (const auto& sep : all) {
            if (!is_lt_maximal(sep, all)) continue;
            for (const auto& x : modulators) {
                if (!vset::intersect(x, sep.protrusion()).empty()) continue;
                for (VertexId v : sep.c) {
                    auto important = enumerate_important_separators(g, v, x, 4);
                    CHECK(std::find(important.begin(), important.end(), sep.s) != important.end());
                    any = true;
                }
            }
        }
        if (any) ++checked;
    }
    CHECK(checked >= 3);
}

TEST_CASE("important separators with empty X") {
    // every set is a separator, so the empty set dominates everything
    auto got = enumerate_important_separators(path_graph(4), 1, {}, 2);
    REQUIRE(got.size() == 1);
    CHECK(got[0].empty());
    CHECK(got == brute_important_separators(path_graph(4), 1, {}, 2));
}

TEST_CASE("family size stays within the documented bound") {
    Rng rng(4490);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + static_cast<int>(uniform_index(rng, 5));
        std::vector<std::pair<VertexId, Weight>> vs;
        std::vector<std::pair<VertexId, VertexId>> es;
        for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (uniform_index(rng, 10) < 5) es.emplace_back(i, j);
        WeightedGraph g = WeightedGraph::make(vs, es);
        if (is_tw_at_most(g, 1)) continue;
        auto fam = build_hitting_family(g, 1);
        double bound = std::pow(static_cast<double>(n), 2 * 1 + 3) +
                       static_cast<double>(n) * n;
        CHECK(static_cast<double>(fam.separations.size()) <= bound);
    }
}
