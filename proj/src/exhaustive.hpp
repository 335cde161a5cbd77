#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "minors.hpp"

namespace fmdel {

/// Candidate partial solutions inside a protrusion A: for every ℱ-minor
/// hitting set X there is a candidate X_A with (X∖A) ∪ X_A hitting and no
/// heavier than X.
struct ExhaustiveFamily {
    VertexSet protrusion;
    std::vector<std::pair<VertexSet, Weight>> candidates;  // deduplicated, lexicographic
    std::optional<std::map<int, std::vector<std::pair<VertexSet, Weight>>>> size_stratified;

    bool contains(const VertexSet& y) const;
};

/// Enumerates S ⊆ ∂(A) and interior subsets, keeping one minimum-weight
/// interior part per (S, folio of the boundaried remainder) class.
/// Pre: A is an r-protrusion for r = 3·F.eta+2.
ExhaustiveFamily exhaustive_family(const WeightedGraph& g, const VertexSet& a,
                                   const MinorFamilySpec& f, const Caps& caps = default_caps());

/// Same construction additionally keyed by |S ∪ X_int| ∈ 0..ell; every
/// candidate has at most ell vertices.
ExhaustiveFamily exhaustive_family_sized(const WeightedGraph& g, const VertexSet& a,
                                         const MinorFamilySpec& f, int ell,
                                         const Caps& caps = default_caps());

std::string exhaustive_to_json(const ExhaustiveFamily& fam);

}  // namespace fmdel
