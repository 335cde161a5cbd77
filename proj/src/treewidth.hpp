#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace fmdel {

/// Rooted tree over node ids 0..size-1, parent[root] == -1.
struct RootedTree {
    std::vector<int> parent;
    int root = -1;

    int size() const { return static_cast<int>(parent.size()); }
    std::vector<int> depths() const;
    int lca(int u, int v) const;
    std::vector<std::vector<int>> children() const;
};

/// {LCA(u,v) : u,v in S}, sorted. Satisfies S ⊆ result and |result| <= 2|S|,
/// and every component of T−result has at most 2 neighbors in result.
std::vector<int> lca_closure(const RootedTree& t, const std::vector<int>& s);

struct TreeDecomposition {
    RootedTree tree;
    std::vector<VertexSet> bags;  // by node id

    int width() const;
};

/// Nullopt when valid; otherwise a human-readable reason.
std::optional<std::string> validate_decomposition(const WeightedGraph& g,
                                                  const TreeDecomposition& td);

struct TreewidthResult {
    int width = -1;
    TreeDecomposition decomposition;
};

/// Exact treewidth via dynamic programming over elimination-ordering prefixes.
TreewidthResult treewidth_exact(const WeightedGraph& g, const Caps& caps = default_caps());

/// eta=0/1 decided by edge/acyclicity checks, eta=2 by the series reduction
/// (equivalent to K4-minor-freeness), otherwise by the exact DP.
bool is_tw_at_most(const WeightedGraph& g, int eta, const Caps& caps = default_caps());

}  // namespace fmdel
