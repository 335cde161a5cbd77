#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace fmdel {

/// True iff H is a minor of G: disjoint connected branch sets in G, one per
/// vertex of H, with a G-edge between the branch sets of every H-edge.
bool has_minor(const WeightedGraph& g, const WeightedGraph& h, const Caps& caps = default_caps());

/// Branch sets of one minor model (index masks into g), or nullopt.
std::optional<std::vector<std::uint64_t>> find_minor_model(const WeightedGraph& g,
                                                           const WeightedGraph& h,
                                                           const Caps& caps = default_caps());

/// The family ℱ with its treewidth bound η(ℱ) (trusted configuration) and the
/// detail bound h >= max(|V(F)|, |E(F)|) over patterns.
struct MinorFamilySpec {
    std::string name;  // preset name or "custom"
    std::vector<WeightedGraph> patterns;
    int h = 0;
    int eta = 0;
};

/// Presets: k3 (η=1), k4 (η=2), outerplanar = {K4, K3,2} (η=2). The planar
/// family {K5, K3,3} is rejected: it contains no planar graph.
MinorFamilySpec family_preset(const std::string& name);

/// eta is trusted; h defaults to max(|V|,|E|) over patterns. Validates that
/// at least one pattern is planar (by brute-force K5/K3,3-minor-freeness).
MinorFamilySpec make_family(std::vector<WeightedGraph> patterns, int eta,
                            std::optional<int> h = std::nullopt,
                            const Caps& caps = default_caps());

/// Accepts a preset name or a JSON document
/// {"eta":…, "h":…, "patterns":[<graph json>…]}.
MinorFamilySpec parse_family(const std::string& spec, const Caps& caps = default_caps());

bool is_F_minor_free(const WeightedGraph& g, const MinorFamilySpec& f,
                     const Caps& caps = default_caps());

// pattern builders used by presets and tests
WeightedGraph complete_graph(int n);
WeightedGraph complete_bipartite(int a, int b);
WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph grid_graph(int rows, int cols);

}  // namespace fmdel
