#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fmdel {

namespace vset {

bool contains(const VertexSet& a, VertexId v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_proper_subset(const VertexSet& a, const VertexSet& b) {
    return a.size() < b.size() && is_subset(a, b);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(VertexSet a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace vset

Caps& default_caps() {
    static Caps caps;
    return caps;
}

WeightedGraph WeightedGraph::make(std::vector<std::pair<VertexId, Weight>> vertices,
                                  std::vector<std::pair<VertexId, VertexId>> edges) {
    std::sort(vertices.begin(), vertices.end());
    WeightedGraph g;
    g.ids_.reserve(vertices.size());
    for (const auto& [id, w] : vertices) {
        if (!g.ids_.empty() && g.ids_.back() == id)
            fail(ErrorKind::invalid, "duplicate vertex id " + std::to_string(id));
        if (w < 1) fail(ErrorKind::invalid, "vertex " + std::to_string(id) + " has weight < 1");
        g.ids_.push_back(id);
        g.weights_.push_back(w);
    }
    g.adj_.assign(g.ids_.size(), {});
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [u, v] : edges) {
        if (u == v) fail(ErrorKind::invalid, "self-loop at vertex " + std::to_string(u));
        if (!g.has_vertex(u) || !g.has_vertex(v))
            fail(ErrorKind::invalid, "edge endpoint not a vertex: " + std::to_string(u) + "-" +
                                         std::to_string(v));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            fail(ErrorKind::invalid, "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adj_[g.index_of(u)].push_back(v);
        g.adj_[g.index_of(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edge_count_ = static_cast<long long>(seen.size());
    return g;
}

bool WeightedGraph::has_vertex(VertexId v) const { return vset::contains(ids_, v); }

int WeightedGraph::index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        fail(ErrorKind::invalid, "vertex " + std::to_string(v) + " not in graph");
    return static_cast<int>(it - ids_.begin());
}

Weight WeightedGraph::total_weight(const VertexSet& s) const {
    Weight sum = 0;
    for (VertexId v : s) sum += weight(v);
    return sum;
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<VertexId>& WeightedGraph::neighbors(VertexId v) const {
    return adj_[index_of(v)];
}

std::vector<std::pair<VertexId, VertexId>> WeightedGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (VertexId u : adj_[i])
            if (ids_[i] < u) out.emplace_back(ids_[i], u);
    return out;
}

void WeightedGraph::check_subset(const VertexSet& a, const char* op) const {
    if (!vset::is_subset(a, ids_))
        fail(ErrorKind::invalid, std::string(op) + ": argument is not a subset of V(G)");
}

VertexSet WeightedGraph::open_neighborhood(const VertexSet& a) const {
    check_subset(a, "open_neighborhood");
    VertexSet out;
    for (VertexId v : a)
        for (VertexId u : neighbors(v))
            if (!vset::contains(a, u)) out.push_back(u);
    return vset::normalized(std::move(out));
}

VertexSet WeightedGraph::boundary(const VertexSet& a) const {
    check_subset(a, "boundary");
    VertexSet out;
    for (VertexId v : a)
        for (VertexId u : neighbors(v))
            if (!vset::contains(a, u)) {
                out.push_back(v);
                break;
            }
    return out;  // already sorted, a is sorted
}

std::vector<VertexSet> WeightedGraph::components() const {
    std::vector<VertexSet> out;
    std::vector<bool> seen(ids_.size(), false);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (seen[i]) continue;
        VertexSet comp;
        std::vector<int> stack{static_cast<int>(i)};
        seen[i] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            comp.push_back(ids_[cur]);
            for (VertexId u : adj_[cur]) {
                int j = index_of(u);
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

WeightedGraph WeightedGraph::removed(const VertexSet& a) const {
    check_subset(a, "delete");
    return induced(vset::difference(ids_, a));
}

WeightedGraph WeightedGraph::induced(const VertexSet& keep) const {
    check_subset(keep, "induced");
    std::vector<std::pair<VertexId, Weight>> vs;
    vs.reserve(keep.size());
    for (VertexId v : keep) vs.emplace_back(v, weight(v));
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId v : keep)
        for (VertexId u : neighbors(v))
            if (v < u && vset::contains(keep, u)) es.emplace_back(v, u);
    return make(std::move(vs), std::move(es));
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
    return ids_ == other.ids_ && weights_ == other.weights_ && adj_ == other.adj_;
}

MaskGraph MaskGraph::of(const WeightedGraph& g) {
    if (g.n() > 64) fail(ErrorKind::cap, "mask algorithms require n <= 64");
    MaskGraph mg;
    mg.n = g.n();
    mg.adj.assign(mg.n, 0);
    for (int i = 0; i < mg.n; ++i)
        for (VertexId u : g.neighbors(g.id_at(i))) mg.adj[i] |= 1ULL << g.index_of(u);
    return mg;
}

std::uint64_t MaskGraph::component_of(int v, std::uint64_t alive) const {
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int i = std::countr_zero(f);
            f &= f - 1;
            next |= adj[i] & alive;
        }
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

std::uint64_t MaskGraph::neighborhood(std::uint64_t s) const {
    std::uint64_t nb = 0;
    std::uint64_t t = s;
    while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        nb |= adj[i];
    }
    return nb & ~s;
}

bool MaskGraph::connected_within(std::uint64_t s) const {
    if (s == 0) return true;
    return component_of(std::countr_zero(s), s) == s;
}

// --- serialization -----------------------------------------------------------

namespace {

// Parses a positive decimal like "3" or "2.50" into (digits-as-integer, #decimals).
struct DecimalWeight {
    long long digits = 0;
    int decimals = 0;
};

bool parse_decimal(const std::string& tok, DecimalWeight& out) {
    out = {};
    bool seen_dot = false, seen_digit = false;
    for (char c : tok) {
        if (c == '.') {
            if (seen_dot) return false;
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            if (out.digits > (1LL << 50)) return false;  // keep scaled weights in range
            out.digits = out.digits * 10 + (c - '0');
            if (seen_dot) ++out.decimals;
        } else {
            return false;
        }
    }
    return seen_digit;
}

long long pow10ll(int e) {
    long long r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

WeightedGraph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<DecimalWeight> weights;
    std::vector<bool> weight_set;
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto parse_fail = [&](const std::string& msg) {
        fail(ErrorKind::parse, "edgelist line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) parse_fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail("expected 'p <n> <m>'");
            if (n > 1000000 || m > 10000000) parse_fail("header out of supported range");
            weights.assign(n, DecimalWeight{1, 0});
            weight_set.assign(n, false);
        } else if (tag == "w") {
            if (n < 0) parse_fail("'w' before header");
            long long v;
            std::string wtok;
            if (!(ls >> v >> wtok)) parse_fail("expected 'w <vertex> <weight>'");
            if (v < 1 || v > n) parse_fail("vertex out of range");
            DecimalWeight dw;
            if (!parse_decimal(wtok, dw)) parse_fail("bad weight '" + wtok + "'");
            if (dw.digits == 0) parse_fail("weight must be positive");
            if (weight_set[v - 1]) parse_fail("duplicate weight for vertex " + std::to_string(v));
            weights[v - 1] = dw;
            weight_set[v - 1] = true;
        } else if (tag == "e") {
            if (n < 0) parse_fail("'e' before header");
            long long u, v;
            if (!(ls >> u >> v)) parse_fail("expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail("vertex out of range");
            if (u == v) parse_fail("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else {
            parse_fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) fail(ErrorKind::parse, "edgelist: missing 'p <n> <m>' header");
    if (m != static_cast<long long>(edges.size()))
        fail(ErrorKind::parse, "edgelist: header declares " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
    int scale = 0;
    for (const auto& dw : weights) scale = std::max(scale, dw.decimals);
    std::vector<std::pair<VertexId, Weight>> vs;
    for (long long v = 1; v <= n; ++v) {
        const auto& dw = weights[v - 1];
        vs.emplace_back(static_cast<VertexId>(v), dw.digits * pow10ll(scale - dw.decimals));
    }
    try {
        return WeightedGraph::make(std::move(vs), std::move(edges));
    } catch (const Error& e) {
        fail(ErrorKind::parse, std::string("edgelist: ") + e.what());
    }
}

WeightedGraph parse_json_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("json: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("vertices"))
            fail(ErrorKind::parse, "json: expected object with 'vertices'");
        std::vector<std::pair<VertexId, DecimalWeight>> raw;
        for (const auto& v : doc.at("vertices")) {
            VertexId id = v.at("id").get<VertexId>();
            DecimalWeight dw{1, 0};
            if (v.contains("w")) {
                const auto& w = v.at("w");
                if (w.is_number_integer()) {
                    long long val = w.get<long long>();
                    if (val < 1) fail(ErrorKind::parse, "json: weight must be positive");
                    dw = {val, 0};
                } else if (w.is_string()) {
                    if (!parse_decimal(w.get<std::string>(), dw) || dw.digits == 0)
                        fail(ErrorKind::parse, "json: bad weight string");
                } else {
                    fail(ErrorKind::parse, "json: weight must be an integer or decimal string");
                }
            }
            raw.emplace_back(id, dw);
        }
        int scale = 0;
        for (const auto& [id, dw] : raw) scale = std::max(scale, dw.decimals);
        std::vector<std::pair<VertexId, Weight>> vs;
        for (const auto& [id, dw] : raw)
            vs.emplace_back(id, dw.digits * pow10ll(scale - dw.decimals));
        std::vector<std::pair<VertexId, VertexId>> es;
        if (doc.contains("edges"))
            for (const auto& e : doc.at("edges")) {
                if (!e.is_array() || e.size() != 2)
                    fail(ErrorKind::parse, "json: edge must be a pair [u,v]");
                es.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
            }
        try {
            return WeightedGraph::make(std::move(vs), std::move(es));
        } catch (const Error& err) {
            fail(ErrorKind::parse, std::string("json: ") + err.what());
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("json: ") + e.what());
    }
}

}  // namespace

WeightedGraph load_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(text) : parse_json_graph(text);
}

std::string to_edgelist(const WeightedGraph& g) {
    // Output is always 1..n indexed; original ids are positional.
    std::ostringstream out;
    out << "p " << g.n() << " " << g.m() << "\n";
    for (int i = 0; i < g.n(); ++i) out << "w " << (i + 1) << " " << g.weight_at(i) << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << (g.index_of(u) + 1) << " " << (g.index_of(v) + 1) << "\n";
    return out.str();
}

std::string to_json_text(const WeightedGraph& g) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (int i = 0; i < g.n(); ++i)
        doc["vertices"].push_back({{"id", g.id_at(i)}, {"w", g.weight_at(i)}});
    doc["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump();
}

}  // namespace fmdel
