#include "boundaried.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "model_search.hpp"

namespace fmdel {

void validate_boundaried(const BoundariedGraph& bg) {
    std::set<VertexId> seen;
    for (VertexId v : bg.boundary) {
        if (!bg.graph.has_vertex(v))
            fail(ErrorKind::invalid, "boundary vertex " + std::to_string(v) + " not in graph");
        if (!seen.insert(v).second)
            fail(ErrorKind::invalid, "duplicate boundary vertex " + std::to_string(v));
    }
}

bool compatible(const BoundariedGraph& a, const BoundariedGraph& b) {
    validate_boundaried(a);
    validate_boundaried(b);
    if (a.t() != b.t()) return false;
    for (int i = 0; i < a.t(); ++i)
        for (int j = i + 1; j < a.t(); ++j)
            if (a.graph.adjacent(a.boundary[i], a.boundary[j]) !=
                b.graph.adjacent(b.boundary[i], b.boundary[j]))
                return false;
    return true;
}

WeightedGraph glue(const BoundariedGraph& a, const BoundariedGraph& b) {
    if (!compatible(a, b)) fail(ErrorKind::invalid, "glue: incompatible boundaries");
    VertexId next = 0;
    for (VertexId v : a.graph.vertices()) next = std::max(next, v);
    for (VertexId v : b.graph.vertices()) next = std::max(next, v);
    ++next;
    // map b's vertices into the result id space
    std::unordered_map<VertexId, VertexId> bmap;
    for (int i = 0; i < b.t(); ++i) bmap[b.boundary[i]] = a.boundary[i];
    for (VertexId v : b.graph.vertices())
        if (!bmap.count(v)) bmap[v] = next++;
    std::vector<std::pair<VertexId, Weight>> vs;
    for (VertexId v : a.graph.vertices()) vs.emplace_back(v, a.graph.weight(v));
    for (VertexId v : b.graph.vertices()) {
        bool is_boundary = std::find(b.boundary.begin(), b.boundary.end(), v) != b.boundary.end();
        if (!is_boundary) vs.emplace_back(bmap[v], b.graph.weight(v));
    }
    std::set<std::pair<VertexId, VertexId>> es;
    auto add_edge = [&](VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        es.insert({u, v});
    };
    for (const auto& [u, v] : a.graph.edges()) add_edge(u, v);
    for (const auto& [u, v] : b.graph.edges()) add_edge(bmap[u], bmap[v]);
    return WeightedGraph::make(std::move(vs), {es.begin(), es.end()});
}

// --- pattern encoding ---------------------------------------------------------
// code layout: bits 0..14 adjacency over pairs (i<j, 6 vertices),
// bits 15..38 labels (4 bits per vertex), bits 39..41 vertex count.

namespace {

constexpr int kMaxPatternVertices = 6;

int pair_bit(int i, int j) {  // i < j
    static constexpr int base[6] = {0, 5, 9, 12, 14, 15};
    return base[i] + (j - i - 1);
}

}  // namespace

std::uint64_t encode_pattern_canonical(const PatternView& p) {
    int m = p.m;
    if (m > kMaxPatternVertices) fail(ErrorKind::invalid, "pattern too large");
    bool adj[6][6] = {};
    for (auto [i, j] : p.edges) adj[i][j] = adj[j][i] = true;
    // labeled vertices sorted by label first, unlabeled minimized by adjacency
    std::vector<int> labeled, unlabeled;
    for (int i = 0; i < m; ++i)
        (p.labels[i] ? labeled : unlabeled).push_back(i);
    std::sort(labeled.begin(), labeled.end(),
              [&](int x, int y) { return p.labels[x] < p.labels[y]; });
    std::uint64_t best = ~0ULL;
    std::vector<int> perm = unlabeled;
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<int> order = labeled;  // order[newpos] = old index
        order.insert(order.end(), perm.begin(), perm.end());
        std::uint64_t bits = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (adj[order[i]][order[j]]) bits |= 1ULL << pair_bit(i, j);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (m == 0) best = 0;
    std::uint64_t code = best == ~0ULL ? 0 : best;
    for (std::size_t i = 0; i < labeled.size(); ++i)
        code |= static_cast<std::uint64_t>(p.labels[labeled[i]]) << (15 + 4 * i);
    code |= static_cast<std::uint64_t>(m) << 39;
    return code;
}

PatternView decode_pattern(std::uint64_t code) {
    PatternView p;
    p.m = static_cast<int>(code >> 39 & 0x7);
    p.labels.assign(p.m, 0);
    for (int i = 0; i < p.m; ++i)
        p.labels[i] = static_cast<int>(code >> (15 + 4 * i) & 0xF);
    for (int i = 0; i < p.m; ++i)
        for (int j = i + 1; j < p.m; ++j)
            if (code >> pair_bit(i, j) & 1) p.edges.emplace_back(i, j);
    return p;
}

// --- folio ---------------------------------------------------------------------

namespace {

struct FolioCache {
    std::mutex mu;
    std::unordered_map<std::string, Folio> entries;

    static FolioCache& instance() {
        static FolioCache c;
        return c;
    }
};

std::string folio_cache_key(const MaskGraph& mg, const std::vector<int>& roots, int h) {
    std::string key;
    key.reserve(2 + roots.size() + mg.adj.size() * 8);
    key.push_back(static_cast<char>(h));
    key.push_back(static_cast<char>(mg.n));
    for (int r : roots) key.push_back(static_cast<char>(r + 1));
    for (std::uint64_t row : mg.adj)
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>(row >> (8 * b) & 0xFF));
    return key;
}

bool pattern_realizable(const MaskGraph& host, const std::vector<int>& label_to_host,
                        const PatternView& p) {
    if (p.m > host.n) return false;
    std::vector<std::uint64_t> padj(p.m, 0);
    for (auto [i, j] : p.edges) {
        padj[i] |= 1ULL << j;
        padj[j] |= 1ULL << i;
    }
    std::vector<int> roots(p.m, -1);
    for (int i = 0; i < p.m; ++i)
        if (p.labels[i]) roots[i] = label_to_host[p.labels[i] - 1];
    // a boundary vertex is only usable by the branch set rooted at its label
    std::uint64_t forbidden = 0;
    for (std::size_t lab = 1; lab <= label_to_host.size(); ++lab) {
        bool present = false;
        for (int i = 0; i < p.m; ++i)
            if (p.labels[i] == static_cast<int>(lab)) present = true;
        if (!present) forbidden |= 1ULL << label_to_host[lab - 1];
    }
    ModelSearch search(host, std::move(padj), std::move(roots));
    search.used = forbidden;
    return search.run();
}

Folio folio_uncached(const MaskGraph& host, const std::vector<int>& label_to_host, int h) {
    int t = static_cast<int>(label_to_host.size());
    std::unordered_set<std::uint64_t> tested;
    std::set<std::uint64_t> realizable;
    std::vector<std::uint64_t> queue;
    std::uint64_t empty_code = encode_pattern_canonical(PatternView{});
    realizable.insert(empty_code);
    tested.insert(empty_code);
    queue.push_back(empty_code);
    auto consider = [&](const PatternView& cand) {
        std::uint64_t code = encode_pattern_canonical(cand);
        if (!tested.insert(code).second) return;
        if (pattern_realizable(host, label_to_host, cand)) {
            realizable.insert(code);
            queue.push_back(code);
        }
    };
    while (!queue.empty()) {
        PatternView p = decode_pattern(queue.back());
        queue.pop_back();
        if (p.m < h && p.m < kMaxPatternVertices && p.m < host.n) {
            // new isolated vertex: unlabeled, or any label not yet present
            PatternView ext = p;
            ext.m = p.m + 1;
            ext.labels.push_back(0);
            consider(ext);
            for (int lab = 1; lab <= t; ++lab) {
                if (std::find(p.labels.begin(), p.labels.end(), lab) != p.labels.end()) continue;
                ext.labels.back() = lab;
                consider(ext);
            }
        }
        if (static_cast<int>(p.edges.size()) < h) {
            for (int i = 0; i < p.m; ++i)
                for (int j = i + 1; j < p.m; ++j) {
                    if (std::find(p.edges.begin(), p.edges.end(), std::make_pair(i, j)) !=
                        p.edges.end())
                        continue;
                    PatternView ext = p;
                    ext.edges.emplace_back(i, j);
                    consider(ext);
                }
        }
    }
    Folio f;
    f.h = h;
    f.patterns.assign(realizable.begin(), realizable.end());
    return f;
}

}  // namespace

Folio folio(const BoundariedGraph& gb, int h, const Caps& caps) {
    validate_boundaried(gb);
    if (gb.graph.n() > caps.folio_host)
        fail(ErrorKind::cap, "folio: host has " + std::to_string(gb.graph.n()) +
                                 " vertices, cap is " + std::to_string(caps.folio_host));
    if (h > caps.folio_h || h < 0)
        fail(ErrorKind::cap, "folio: detail " + std::to_string(h) + " outside supported range");
    if (gb.t() > 12) fail(ErrorKind::cap, "folio: boundary larger than 12 is unsupported");
    MaskGraph mg = MaskGraph::of(gb.graph);
    std::vector<int> label_to_host(gb.t());
    for (int i = 0; i < gb.t(); ++i) label_to_host[i] = gb.graph.index_of(gb.boundary[i]);
    auto& cache = FolioCache::instance();
    std::string key = folio_cache_key(mg, label_to_host, h);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    Folio f = folio_uncached(mg, label_to_host, h);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.entries.emplace(std::move(key), f);
    }
    return f;
}

bool equivalent_h(const BoundariedGraph& a, const BoundariedGraph& b, int h, const Caps& caps) {
    if (!compatible(a, b)) fail(ErrorKind::invalid, "equivalent_h: incompatible boundaries");
    return folio(a, h, caps) == folio(b, h, caps);
}

std::string folio_to_json(const Folio& f) {
    nlohmann::json doc;
    doc["h"] = f.h;
    doc["patterns"] = nlohmann::json::array();
    for (std::uint64_t code : f.patterns) {
        PatternView p = decode_pattern(code);
        nlohmann::json pj;
        pj["vertices"] = p.m;
        pj["labels"] = p.labels;
        pj["edges"] = nlohmann::json::array();
        for (auto [i, j] : p.edges) pj["edges"].push_back({i, j});
        doc["patterns"].push_back(pj);
    }
    return doc.dump();
}

}  // namespace fmdel
