#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace fmdel {

/// Graph with an ordered boundary: the vertex at position i carries label i+1.
struct BoundariedGraph {
    WeightedGraph graph;
    std::vector<VertexId> boundary;

    int t() const { return static_cast<int>(boundary.size()); }
};

void validate_boundaried(const BoundariedGraph& bg);

/// Same boundary size and the label-respecting map is an isomorphism of the
/// induced boundary graphs.
bool compatible(const BoundariedGraph& a, const BoundariedGraph& b);

/// Disjoint union with label-i boundary vertices identified; parallel edges
/// collapsed. Keeps a's vertex ids; b's interior gets fresh ids.
WeightedGraph glue(const BoundariedGraph& a, const BoundariedGraph& b);

/// Rooted minor pattern in canonical encoding: <= 6 vertices, each carrying a
/// label (1-based boundary position) or none, plus an edge set.
struct PatternView {
    int m = 0;
    std::vector<int> labels;                     // by vertex, 0 = unlabeled
    std::vector<std::pair<int, int>> edges;      // vertex index pairs, i < j
};

std::uint64_t encode_pattern_canonical(const PatternView& p);
PatternView decode_pattern(std::uint64_t code);

/// The set of boundaried patterns of detail <= h (at most h vertices and h
/// edges, labels drawn from the host's label set) realizable as rooted minors
/// of the host: branch sets are connected and the branch set of a labeled
/// pattern vertex contains the host vertex with that label.
struct Folio {
    int h = 0;
    std::vector<std::uint64_t> patterns;  // canonical codes, sorted

    bool operator==(const Folio& o) const = default;
};

Folio folio(const BoundariedGraph& gb, int h, const Caps& caps = default_caps());

bool equivalent_h(const BoundariedGraph& a, const BoundariedGraph& b, int h,
                  const Caps& caps = default_caps());

std::string folio_to_json(const Folio& f);

}  // namespace fmdel
