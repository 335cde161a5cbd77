#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace fmdel {

using VertexId = int;
using Weight = long long;

/// Sorted vector of distinct vertex ids. All set-returning operations keep
/// this ordering so seeded runs are reproducible.
using VertexSet = std::vector<VertexId>;

namespace vset {

bool contains(const VertexSet& a, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b);  // a ⊆ b
bool is_proper_subset(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet difference(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet a);  // sort + dedupe

}  // namespace vset

/// Immutable simple undirected graph with positive integer vertex weights.
/// Vertex ids are opaque and stable across delete/induce so solution sets
/// compose across recursion levels.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates: distinct ids, weights >= 1, no self-loops, no parallel
    /// edges, edge endpoints present.
    static WeightedGraph make(std::vector<std::pair<VertexId, Weight>> vertices,
                              std::vector<std::pair<VertexId, VertexId>> edges);

    int n() const { return static_cast<int>(ids_.size()); }
    long long m() const { return edge_count_; }
    const VertexSet& vertices() const { return ids_; }

    bool has_vertex(VertexId v) const;
    int index_of(VertexId v) const;  // position in sorted id order; Error if absent
    VertexId id_at(int idx) const { return ids_[idx]; }

    Weight weight(VertexId v) const { return weights_[index_of(v)]; }
    Weight weight_at(int idx) const { return weights_[idx]; }
    Weight total_weight(const VertexSet& s) const;

    bool adjacent(VertexId u, VertexId v) const;
    /// Neighbor ids of v in ascending order.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<std::pair<VertexId, VertexId>> edges() const;  // u < v, lexicographic

    // set operations
    VertexSet open_neighborhood(const VertexSet& a) const;
    VertexSet boundary(const VertexSet& a) const;  // ∂(A) = N(V∖A), subset of A
    std::vector<VertexSet> components() const;     // smallest-vertex-first order
    WeightedGraph removed(const VertexSet& a) const;   // G − A
    WeightedGraph induced(const VertexSet& keep) const;

    bool operator==(const WeightedGraph& other) const;

private:
    void check_subset(const VertexSet& a, const char* op) const;

    VertexSet ids_;                           // sorted
    std::vector<Weight> weights_;             // by index
    std::vector<std::vector<VertexId>> adj_;  // by index, neighbor ids sorted
    long long edge_count_ = 0;
};

/// Index-space adjacency bitmasks for the subset-enumeration algorithms.
/// Requires n <= 64.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[i] over indexes

    static MaskGraph of(const WeightedGraph& g);
    std::uint64_t full() const { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }
    /// Component of v inside `alive` (v must be in alive).
    std::uint64_t component_of(int v, std::uint64_t alive) const;
    std::uint64_t neighborhood(std::uint64_t s) const;  // N(S), disjoint from S
    bool connected_within(std::uint64_t s) const;       // empty set counts as connected
};

// --- serialization -----------------------------------------------------------

enum class GraphFormat { edgelist, json };

/// Parses the `p/w/e` edgelist format or the JSON object format. Fractional
/// decimal weights are accepted and scaled by a common power of ten so that
/// all stored weights are positive integers.
WeightedGraph load_graph(const std::string& text, GraphFormat format);

std::string to_edgelist(const WeightedGraph& g);
std::string to_json_text(const WeightedGraph& g);

}  // namespace fmdel
