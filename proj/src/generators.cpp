#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fmdel {

GeneratorKind parse_generator(const std::string& name) {
    if (name == "gnp") return GeneratorKind::gnp;
    if (name == "grid_plus_noise") return GeneratorKind::grid_plus_noise;
    if (name == "disjoint_cliques") return GeneratorKind::disjoint_cliques;
    if (name == "trees_plus_edges") return GeneratorKind::trees_plus_edges;
    fail(ErrorKind::invalid, "unknown generator '" + name + "'");
}

std::string generator_name(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::gnp: return "gnp";
        case GeneratorKind::grid_plus_noise: return "grid_plus_noise";
        case GeneratorKind::disjoint_cliques: return "disjoint_cliques";
        case GeneratorKind::trees_plus_edges: return "trees_plus_edges";
    }
    return "?";
}

namespace {

Weight draw_weight(Rng& rng, const CorpusSpec& spec) {
    if (spec.weight_min > spec.weight_max || spec.weight_min < 1)
        fail(ErrorKind::invalid, "weight range must satisfy 1 <= min <= max");
    return spec.weight_min +
           static_cast<Weight>(uniform_index(rng, spec.weight_max - spec.weight_min + 1));
}

/// Uniform draw below a probability threshold, bias-free enough at 2^-64.
bool coin(Rng& rng, double p) {
    return static_cast<double>(uniform_u64(rng)) < p * 18446744073709551616.0;
}

double param(const CorpusSpec& spec, const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

WeightedGraph generate_one(const CorpusSpec& spec, std::uint64_t instance_seed) {
    Rng rng(instance_seed);
    int span = spec.n_max - spec.n_min + 1;
    if (span < 1) fail(ErrorKind::invalid, "n range must satisfy n_min <= n_max");
    int n = spec.n_min + static_cast<int>(uniform_index(rng, span));
    std::vector<std::pair<VertexId, Weight>> vs;
    std::vector<std::pair<VertexId, VertexId>> es;
    std::set<std::pair<VertexId, VertexId>> have;
    auto add_edge = [&](VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        if (u != v && have.insert({u, v}).second) es.emplace_back(u, v);
    };
    switch (spec.generator) {
        case GeneratorKind::gnp: {
            double p = param(spec, "p", 0.4);
            for (int i = 1; i <= n; ++i) vs.emplace_back(i, draw_weight(rng, spec));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (coin(rng, p)) add_edge(i, j);
            break;
        }
        case GeneratorKind::grid_plus_noise: {
            int cols = std::max(2, static_cast<int>(param(spec, "cols", 3)));
            int rows = std::max(1, (n + cols - 1) / cols);
            n = rows * cols;
            double noise = param(spec, "noise", 0.1);
            auto id = [&](int r, int c) { return r * cols + c + 1; };
            for (int i = 1; i <= n; ++i) vs.emplace_back(i, draw_weight(rng, spec));
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    if (c + 1 < cols) add_edge(id(r, c), id(r, c + 1));
                    if (r + 1 < rows) add_edge(id(r, c), id(r + 1, c));
                }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (coin(rng, noise)) add_edge(i, j);
            break;
        }
        case GeneratorKind::disjoint_cliques: {
            int clique = std::max(2, static_cast<int>(param(spec, "clique", 3)));
            for (int i = 1; i <= n; ++i) vs.emplace_back(i, draw_weight(rng, spec));
            for (int base = 0; base < n; base += clique) {
                int hi = std::min(n, base + clique);
                for (int i = base + 1; i <= hi; ++i)
                    for (int j = i + 1; j <= hi; ++j) add_edge(i, j);
            }
            break;
        }
        case GeneratorKind::trees_plus_edges: {
            int extra = static_cast<int>(param(spec, "extra", 2));
            for (int i = 1; i <= n; ++i) vs.emplace_back(i, draw_weight(rng, spec));
            for (int i = 2; i <= n; ++i)
                add_edge(static_cast<VertexId>(1 + uniform_index(rng, i - 1)), i);
            int added = 0, attempts = 0;
            while (added < extra && attempts < 20 * extra + 100) {
                ++attempts;
                VertexId u = static_cast<VertexId>(1 + uniform_index(rng, n));
                VertexId v = static_cast<VertexId>(1 + uniform_index(rng, n));
                if (u == v) continue;
                auto key = std::minmax(u, v);
                if (have.count({key.first, key.second})) continue;
                add_edge(u, v);
                ++added;
            }
            break;
        }
    }
    return WeightedGraph::make(std::move(vs), std::move(es));
}

std::vector<WeightedGraph> generate_corpus(const CorpusSpec& spec) {
    std::vector<WeightedGraph> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i) out.push_back(generate_one(spec, derive_seed(spec.seed, i)));
    return out;
}

}  // namespace fmdel
