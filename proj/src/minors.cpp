#include "minors.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "model_search.hpp"

namespace fmdel {

std::optional<std::vector<std::uint64_t>> find_minor_model(const WeightedGraph& g,
                                                           const WeightedGraph& h,
                                                           const Caps& caps) {
    if (h.n() > caps.minor_pattern)
        fail(ErrorKind::cap, "has_minor: pattern has " + std::to_string(h.n()) +
                                 " vertices, cap is " + std::to_string(caps.minor_pattern));
    if (h.n() == 0) return std::vector<std::uint64_t>{};
    if (h.n() > g.n() || h.m() > g.m()) return std::nullopt;
    MaskGraph mg = MaskGraph::of(g);
    std::vector<std::uint64_t> padj(h.n(), 0);
    for (const auto& [u, v] : h.edges()) {
        padj[h.index_of(u)] |= 1ULL << h.index_of(v);
        padj[h.index_of(v)] |= 1ULL << h.index_of(u);
    }
    ModelSearch search(mg, std::move(padj), std::vector<int>(h.n(), -1));
    if (search.run()) return search.model;
    return std::nullopt;
}

bool has_minor(const WeightedGraph& g, const WeightedGraph& h, const Caps& caps) {
    return find_minor_model(g, h, caps).has_value();
}

bool is_F_minor_free(const WeightedGraph& g, const MinorFamilySpec& f, const Caps& caps) {
    for (const auto& p : f.patterns)
        if (has_minor(g, p, caps)) return false;
    return true;
}

WeightedGraph complete_graph(int n) {
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return WeightedGraph::make(std::move(vs), std::move(es));
}

WeightedGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= a + b; ++i) vs.emplace_back(i, 1);
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) es.emplace_back(i, j);
    return WeightedGraph::make(std::move(vs), std::move(es));
}

WeightedGraph path_graph(int n) {
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return WeightedGraph::make(std::move(vs), std::move(es));
}

WeightedGraph cycle_graph(int n) {
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (int i = 1; i <= n; ++i) vs.emplace_back(i, 1);
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    if (n >= 3) es.emplace_back(1, n);
    return WeightedGraph::make(std::move(vs), std::move(es));
}

WeightedGraph grid_graph(int rows, int cols) {
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    auto id = [&](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            vs.emplace_back(id(r, c), 1);
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return WeightedGraph::make(std::move(vs), std::move(es));
}

namespace {

bool is_planar_small(const WeightedGraph& p, const Caps& caps) {
    return !has_minor(p, complete_graph(5), caps) && !has_minor(p, complete_bipartite(3, 3), caps);
}

}  // namespace

MinorFamilySpec make_family(std::vector<WeightedGraph> patterns, int eta, std::optional<int> h,
                            const Caps& caps) {
    if (patterns.empty()) fail(ErrorKind::invalid, "family: no patterns");
    if (eta < 1) fail(ErrorKind::invalid, "family: eta must be >= 1");
    int bound = 0;
    bool planar = false;
    for (const auto& p : patterns) {
        if (p.n() > caps.minor_pattern)
            fail(ErrorKind::cap, "family: pattern exceeds vertex cap");
        if (p.n() == 0) fail(ErrorKind::invalid, "family: empty pattern");
        bound = std::max<int>(bound, static_cast<int>(std::max<long long>(p.n(), p.m())));
        planar = planar || is_planar_small(p, caps);
    }
    if (!planar) fail(ErrorKind::invalid, "family contains no planar graph");
    MinorFamilySpec f;
    f.name = "custom";
    f.patterns = std::move(patterns);
    f.h = h.value_or(bound);
    if (f.h < bound)
        fail(ErrorKind::invalid, "family: h must be >= max(|V(F)|, |E(F)|) over patterns");
    f.eta = eta;
    return f;
}

MinorFamilySpec family_preset(const std::string& name) {
    if (name == "k3") {
        auto f = make_family({complete_graph(3)}, 1);
        f.name = "k3";
        return f;
    }
    if (name == "k4") {
        auto f = make_family({complete_graph(4)}, 2);
        f.name = "k4";
        return f;
    }
    if (name == "outerplanar") {
        auto f = make_family({complete_graph(4), complete_bipartite(3, 2)}, 2);
        f.name = "outerplanar";
        return f;
    }
    if (name == "planar")
        fail(ErrorKind::invalid,
             "family contains no planar graph: both K5 and K3,3 are nonplanar");
    fail(ErrorKind::invalid, "unknown family preset '" + name + "'");
}

MinorFamilySpec parse_family(const std::string& spec, const Caps& caps) {
    std::size_t start = spec.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && spec[start] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(spec);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::parse, std::string("family json: ") + e.what());
        }
        try {
            if (!doc.contains("eta")) fail(ErrorKind::parse, "family json: missing 'eta'");
            std::vector<WeightedGraph> patterns;
            for (const auto& p : doc.at("patterns")) {
                // objects use the graph-json format, strings hold edgelist text
                if (p.is_string())
                    patterns.push_back(load_graph(p.get<std::string>(), GraphFormat::edgelist));
                else
                    patterns.push_back(load_graph(p.dump(), GraphFormat::json));
            }
            std::optional<int> h;
            if (doc.contains("h")) h = doc.at("h").get<int>();
            return make_family(std::move(patterns), doc.at("eta").get<int>(), h, caps);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::parse, std::string("family json: ") + e.what());
        }
    }
    return family_preset(spec);
}

}  // namespace fmdel
