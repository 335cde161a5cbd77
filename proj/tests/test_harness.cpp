#include <doctest.h>

#include <json.hpp>

#include "experiments.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "solvers.hpp"
#include "treewidth.hpp"

using namespace fmdel;

TEST_CASE("all_modulators") {
    auto forest = all_modulators(path_graph(4), 1);
    REQUIRE(forest.size() == 1);
    CHECK(forest[0].empty());

    auto tri = all_modulators(complete_graph(3), 1);
    REQUIRE(tri.size() == 3);
    for (const auto& x : tri) CHECK(x.size() == 1);

    // K4 at eta=1: all six vertex pairs
    auto k4 = all_modulators(complete_graph(4), 1);
    REQUIRE(k4.size() == 6);
    for (const auto& x : k4) CHECK(x.size() == 2);

    Caps caps;
    caps.modulator_enum = 3;
    CHECK_THROWS_AS(all_modulators(complete_graph(4), 1, caps), Error);
}

TEST_CASE("verify_hitting_family on K3") {
    auto fam = build_hitting_family(complete_graph(3), 1);
    auto hc = verify_hitting_family(complete_graph(3), 1, fam);
    CHECK(hc.ok);
    // each protrusion C∪S is the whole triangle, so every modulator meets all
    CHECK(hc.min_fraction == Rational(1));
}

TEST_CASE("verify_hitting_family rejects an empty family") {
    HittingFamily fam;
    fam.eta = 1;
    CHECK_THROWS_AS(verify_hitting_family(complete_graph(3), 1, fam), Error);
}

TEST_CASE("verify_exhaustive rejects a too-small family") {
    WeightedGraph g = complete_graph(3);
    ExhaustiveFamily fam;
    fam.protrusion = g.vertices();
    fam.candidates = {{VertexSet{}, 0}};
    CHECK(!verify_exhaustive(g, g.vertices(), family_preset("k3"), fam));
    // the all-subsets family is trivially exhaustive
    ExhaustiveFamily all;
    all.protrusion = g.vertices();
    for (std::uint64_t m = 0; m < 8; ++m) {
        VertexSet c;
        for (int i = 0; i < 3; ++i)
            if (m >> i & 1) c.push_back(g.id_at(i));
        all.candidates.emplace_back(c, g.total_weight(c));
    }
    CHECK(verify_exhaustive(g, g.vertices(), family_preset("k3"), all));
}

TEST_CASE("verify_exhaustive with ell=0 and the empty candidate is vacuous") {
    // only hitting sets avoiding A's interior are quantified over, and the
    // empty candidate reproduces each of them unchanged
    WeightedGraph g = complete_graph(3);
    ExhaustiveFamily fam;
    fam.protrusion = g.vertices();
    fam.candidates = {{VertexSet{}, 0}};
    CHECK(verify_exhaustive(g, g.vertices(), family_preset("k3"), fam, 0));
}

TEST_CASE("expectation audit on unit K3") {
    // three protrusions, each with nonempty candidates {1},{1,2},{1,2,3}:
    // W = 3*(1 + 1/2 + 1/3) = 11/2, |B| = 9, so E[w(Y)] = 18/11; every
    // deletion breaks the triangle so E[drop] = 1 (frozen from the exact
    // rational audit trace)
    SolverCache cache;
    auto audit = expectation_audit(complete_graph(3), 1, family_preset("k3"), default_caps(),
                                   &cache);
    CHECK(audit.identity_ok);
    CHECK(audit.pair_count == 9);
    CHECK(audit.e_cost == Rational(18, BigInt(11)));
    CHECK(audit.e_drop == Rational(1));
    REQUIRE(audit.ratio);
    CHECK(*audit.ratio == Rational(18, BigInt(11)));
}

TEST_CASE("expectation audit is exact on a skewed triangle") {
    WeightedGraph g = load_graph("p 3 3\nw 1 1\nw 2 1\nw 3 100\ne 1 2\ne 2 3\ne 1 3\n",
                                 GraphFormat::edgelist);
    SolverCache cache;
    auto audit = expectation_audit(g, 1, family_preset("k3"), default_caps(), &cache);
    CHECK(audit.identity_ok);
    REQUIRE(audit.ratio);
    // every single-vertex deletion breaks the triangle, so e_drop = 1 exactly
    CHECK(audit.e_drop == Rational(1));
    CHECK(*audit.ratio == audit.e_cost);
    CHECK_THROWS_AS(expectation_audit(path_graph(3), 1, family_preset("k3")), Error);
}

TEST_CASE("generators are deterministic and respect invariants") {
    CorpusSpec spec;
    spec.generator = GeneratorKind::gnp;
    spec.n_min = 5;
    spec.n_max = 8;
    spec.params["p"] = 0.5;
    spec.seed = 33;
    spec.count = 10;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (const auto& g : a) {
        CHECK(g.n() >= 5);
        CHECK(g.n() <= 8);
        for (VertexId v : g.vertices()) {
            CHECK(g.weight(v) >= 1);
            CHECK(g.weight(v) <= 5);
        }
    }
    for (auto kind : {GeneratorKind::grid_plus_noise, GeneratorKind::disjoint_cliques,
                      GeneratorKind::trees_plus_edges}) {
        spec.generator = kind;
        for (const auto& g : generate_corpus(spec)) CHECK(g.n() >= 1);
    }
    CHECK_THROWS_AS(parse_generator("nonsense"), Error);
}

TEST_CASE("run_experiments produces a reproducible passing report") {
    CorpusSpec spec;
    spec.generator = GeneratorKind::gnp;
    spec.n_min = 5;
    spec.n_max = 7;
    spec.params["p"] = 0.5;
    spec.seed = 7;
    spec.count = 6;
    ExperimentConfig config;
    config.family = "k3";
    config.mc_runs = 20;
    config.fpt_seeds = 4;
    config.checks = {"hitting_family", "important_separators", "exhaustive", "expectation",
                     "approx"};
    auto rep1 = run_experiments(spec, config);
    auto rep2 = run_experiments(spec, config);
    CHECK(rep1.json == rep2.json);
    CHECK(rep1.all_pass);
}

TEST_CASE("run_experiments with an empty corpus is a vacuous pass") {
    CorpusSpec spec;
    spec.count = 0;
    ExperimentConfig config;
    config.checks = {"hitting_family", "expectation"};
    auto rep = run_experiments(spec, config);
    CHECK(rep.all_pass);
}

TEST_CASE("hoeffding slack shrinks with more samples") {
    double a = hoeffding_slack(100, 1.0, 0.99);
    double b = hoeffding_slack(10000, 1.0, 0.99);
    CHECK(a > b);
    CHECK(b > 0.0);
}

TEST_CASE("fifty-instance gnp report populates every constant") {
    CorpusSpec spec;
    spec.generator = GeneratorKind::gnp;
    spec.n_min = 9;
    spec.n_max = 9;
    spec.params["p"] = 0.4;
    spec.seed = 4242;
    spec.count = 50;
    ExperimentConfig config;
    config.family = "k3";
    config.mc_runs = 30;
    config.fpt_seeds = 3;
    auto rep = run_experiments(spec, config);
    CHECK(rep.all_pass);
    auto doc = nlohmann::json::parse(rep.json);
    CHECK(doc["instances_total"] == 50);
    const auto& constants = doc["constants"];
    CHECK(constants.contains("hitting_family.min_hit_fraction"));
    CHECK(constants.contains("expectation.max_ratio"));
    CHECK(constants.contains("approx.worst_mean_ratio"));
    CHECK(constants.contains("fpt.success_rate"));
}
