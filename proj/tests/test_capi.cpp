// Exercises the shared-library C surface directly: handles, status codes,
// error reporting, and JSON payload shapes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "fmdel.h"

namespace {

const char* kTriangle = "p 3 3\nw 1 1\nw 2 5\nw 3 5\ne 1 2\ne 2 3\ne 1 3\n";

struct Graph {
    fmd_graph* g = nullptr;
    ~Graph() { fmd_graph_free(g); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    fmd_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("graph parse and introspection") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    CHECK(fmd_graph_vertex_count(g.g) == 3);
    CHECK(fmd_graph_edge_count(g.g) == 3);
    char* json = nullptr;
    REQUIRE(fmd_graph_to_json(g.g, &json) == FMD_OK);
    auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["vertices"].size() == 3);
}

TEST_CASE("parse errors set status and message") {
    fmd_graph* g = nullptr;
    CHECK(fmd_graph_parse("p 2 1\ne 1 1\n", "edgelist", &g) == FMD_ERR_PARSE);
    CHECK(std::string(fmd_last_error()).find("self-loop") != std::string::npos);
    CHECK(fmd_graph_parse(kTriangle, "yaml", &g) == FMD_ERR_INVALID);
    CHECK(fmd_graph_parse(nullptr, "edgelist", &g) == FMD_ERR_INVALID);
}

TEST_CASE("family endpoint") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    char* json = nullptr;
    REQUIRE(fmd_family(g.g, 1, &json) == FMD_OK);
    auto doc = nlohmann::json::parse(take(json));
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 3);
    for (const auto& sep : doc) {
        CHECK(sep.contains("kind"));
        CHECK(sep.contains("C"));
        CHECK(sep.contains("S"));
    }
    // precondition: tw <= eta is rejected
    Graph path;
    REQUIRE(fmd_graph_parse("p 2 1\ne 1 2\n", "edgelist", &path.g) == FMD_OK);
    char* out = nullptr;
    CHECK(fmd_family(path.g, 1, &out) == FMD_ERR_PRECONDITION);
}

TEST_CASE("exact endpoint") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    char* json = nullptr;
    REQUIRE(fmd_exact(g.g, "k3", -1, &json) == FMD_OK);
    auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["weight"] == 1);
    CHECK(doc["solution"] == nlohmann::json::array({1}));
    // infeasible k
    Graph two;
    REQUIRE(fmd_graph_parse("p 6 6\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\n", "edgelist",
                            &two.g) == FMD_OK);
    char* inf = nullptr;
    CHECK(fmd_exact(two.g, "k3", 1, &inf) == FMD_INFEASIBLE);
    auto infdoc = nlohmann::json::parse(take(inf));
    CHECK(infdoc["status"] == "infeasible");
}

TEST_CASE("approx endpoint is deterministic per seed") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    char *a = nullptr, *b = nullptr;
    REQUIRE(fmd_approx(g.g, "k3", 7, &a) == FMD_OK);
    REQUIRE(fmd_approx(g.g, "k3", 7, &b) == FMD_OK);
    std::string sa = take(a), sb = take(b);
    CHECK(sa == sb);
    auto doc = nlohmann::json::parse(sa);
    CHECK(doc["weight"].get<long long>() >= 1);
    CHECK(doc.contains("modulator"));
}

TEST_CASE("fpt endpoint reports failure as infeasible") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    char* json = nullptr;
    CHECK(fmd_fpt(g.g, "k3", 0, 5, 4, &json) == FMD_INFEASIBLE);
    auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["status"] == "failure");
    char* ok = nullptr;
    CHECK(fmd_fpt(g.g, "k3", 1, 5, 32, &ok) == FMD_OK);
    auto okdoc = nlohmann::json::parse(take(ok));
    CHECK(okdoc["status"] == "ok");
    CHECK(okdoc["weight"] == 1);
}

TEST_CASE("exhaust endpoint") {
    Graph g;
    REQUIRE(fmd_graph_parse(kTriangle, "edgelist", &g.g) == FMD_OK);
    int a[] = {1, 2, 3};
    char* json = nullptr;
    REQUIRE(fmd_exhaust(g.g, "k3", a, 3, -1, &json) == FMD_OK);
    auto doc = nlohmann::json::parse(take(json));
    CHECK(doc.contains("candidates"));
    CHECK(doc["candidates"].size() >= 2);
}

TEST_CASE("gen and verify endpoints") {
    char* text = nullptr;
    REQUIRE(fmd_gen(R"({"generator":"gnp","n":6,"params":{"p":0.5},"seed":3})", &text) == FMD_OK);
    std::string graph_text = take(text);
    CHECK(graph_text.substr(0, 2) == "p ");
    fmd_graph* g = nullptr;
    REQUIRE(fmd_graph_parse(graph_text.c_str(), "edgelist", &g) == FMD_OK);
    fmd_graph_free(g);

    char* rep = nullptr;
    REQUIRE(fmd_verify(
                R"({"generator":"gnp","n_min":5,"n_max":6,"count":4,"seed":5,"family":"k3",
                    "mc_runs":10,"fpt_seeds":2,"checks":["hitting_family","expectation"]})",
                &rep, nullptr) == FMD_OK);
    auto doc = nlohmann::json::parse(take(rep));
    CHECK(doc["schema"] == 1);
    CHECK(doc["all_pass"] == true);
}

TEST_CASE("caps are adjustable") {
    CHECK(fmd_set_cap("tw_exact", 20) == FMD_OK);
    CHECK(fmd_set_cap("nonsense", 5) == FMD_ERR_INVALID);
    CHECK(fmd_set_cap("tw_exact", 0) == FMD_ERR_INVALID);
    CHECK(fmd_set_threads(2) == FMD_OK);
    CHECK(fmd_set_threads(0) == FMD_ERR_INVALID);
    fmd_set_cap("tw_exact", 25);
    fmd_set_threads(1);
}
