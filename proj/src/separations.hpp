#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace fmdel {

enum class SepKind { simple, semi_simple, edge_pair };

/// Pair (C,S) with N(C) ⊆ S, tw(G[C]) <= η and |S| <= 2η+2.
struct Separation {
    VertexSet c;
    VertexSet s;
    SepKind kind = SepKind::simple;

    VertexSet protrusion() const { return vset::unite(c, s); }
    bool operator==(const Separation& o) const = default;
};

/// All simple η-separations: for each S with |S| <= 2η+2 (lexicographic over
/// sorted ids) and each component C of G−S (smallest-vertex order) with
/// N(C) = S and tw(G[C]) <= η.
std::vector<Separation> enumerate_simple_separations(const WeightedGraph& g, int eta,
                                                     const Caps& caps = default_caps());

/// No other simple separation in `all` has sep.c as a proper subset of its C.
bool is_lt_maximal(const Separation& sep, const std::vector<Separation>& all);

struct HittingFamily {
    int eta = 0;
    std::vector<Separation> separations;

    std::vector<VertexSet> protrusions() const;
};

/// The family 𝒮(G,η): ◁-maximal simple separations merged per equal S into
/// semi-simple ones, plus an edge-pair (∅,{u,v}) for every edge covered by no
/// simple separation at all. Rejects graphs with tw(G) <= η. The family has
/// at most n^{2η+2}·n + n² members (choices of S times components, plus one
/// pair per edge), i.e. size n^{O(η)} with the constant documented as 2η+3.
HittingFamily build_hitting_family(const WeightedGraph& g, int eta,
                                   const Caps& caps = default_caps());

/// Exactly the important (v,X)-separators of size <= k, sorted by
/// (size, lexicographic). Uses farthest min-cut branching with a final
/// definition filter.
std::vector<VertexSet> enumerate_important_separators(const WeightedGraph& g, VertexId v,
                                                      const VertexSet& x, int k);

std::string family_to_json(const HittingFamily& fam);

}  // namespace fmdel
