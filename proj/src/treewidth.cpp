#include "treewidth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace fmdel {

std::vector<int> RootedTree::depths() const {
    std::vector<int> d(parent.size(), -1);
    for (int v = 0; v < size(); ++v) {
        if (d[v] >= 0) continue;
        std::vector<int> path;
        int cur = v;
        while (cur != -1 && d[cur] < 0) {
            path.push_back(cur);
            cur = parent[cur];
        }
        int base = cur == -1 ? -1 : d[cur];
        for (auto it = path.rbegin(); it != path.rend(); ++it) d[*it] = ++base;
    }
    return d;
}

int RootedTree::lca(int u, int v) const {
    if (u < 0 || u >= size() || v < 0 || v >= size())
        fail(ErrorKind::invalid, "lca: node not in tree");
    auto d = depths();
    while (d[u] > d[v]) u = parent[u];
    while (d[v] > d[u]) v = parent[v];
    while (u != v) {
        u = parent[u];
        v = parent[v];
    }
    return u;
}

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> ch(size());
    for (int v = 0; v < size(); ++v)
        if (parent[v] != -1) ch[parent[v]].push_back(v);
    return ch;
}

std::vector<int> lca_closure(const RootedTree& t, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= t.size()) fail(ErrorKind::invalid, "lca_closure: node not in tree");
    auto d = t.depths();
    std::set<int> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) {
            int u = s[i], v = s[j];
            while (d[u] > d[v]) u = t.parent[u];
            while (d[v] > d[u]) v = t.parent[v];
            while (u != v) {
                u = t.parent[u];
                v = t.parent[v];
            }
            out.insert(u);
        }
    return {out.begin(), out.end()};
}

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

std::optional<std::string> validate_decomposition(const WeightedGraph& g,
                                                  const TreeDecomposition& td) {
    if (td.bags.size() != static_cast<std::size_t>(td.tree.size()))
        return "bag count does not match tree size";
    if (td.tree.size() == 0) return g.n() == 0 ? std::nullopt : std::optional<std::string>("empty tree");
    // each vertex induces a non-empty connected subtree
    auto ch = td.tree.children();
    for (VertexId v : g.vertices()) {
        std::vector<int> nodes;
        for (int t = 0; t < td.tree.size(); ++t)
            if (vset::contains(td.bags[t], v)) nodes.push_back(t);
        if (nodes.empty()) return "vertex " + std::to_string(v) + " appears in no bag";
        // connectivity in the tree
        std::set<int> want(nodes.begin(), nodes.end());
        std::vector<int> stack{nodes[0]};
        std::set<int> seen{nodes[0]};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            std::vector<int> nb = ch[cur];
            if (td.tree.parent[cur] != -1) nb.push_back(td.tree.parent[cur]);
            for (int nx : nb)
                if (want.count(nx) && !seen.count(nx)) {
                    seen.insert(nx);
                    stack.push_back(nx);
                }
        }
        if (seen.size() != want.size())
            return "vertex " + std::to_string(v) + " induces a disconnected subtree";
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (vset::contains(bag, u) && vset::contains(bag, v)) {
                covered = true;
                break;
            }
        if (!covered) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
    }
    return std::nullopt;
}

namespace {

/// Vertices outside S∪{v} adjacent to the component of v within S∪{v}.
/// This is the elimination degree of v when S was eliminated before it.
int elimination_degree(const MaskGraph& g, std::uint64_t s, int v) {
    std::uint64_t comp = g.component_of(v, s | (1ULL << v));
    return std::popcount(g.neighborhood(comp) & ~s);
}

TreeDecomposition decomposition_from_order(const WeightedGraph& g,
                                           const std::vector<int>& order) {
    // Simulate elimination with fill-in; bag(v) = {v} ∪ N(v) at elimination time.
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[g.index_of(u)].insert(g.index_of(v));
        adj[g.index_of(v)].insert(g.index_of(u));
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::vector<int>> bag_idx(n);
    for (int step = 0; step < n; ++step) {
        int v = order[step];
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        bag_idx[v] = nb;
        bag_idx[v].push_back(v);
        std::sort(bag_idx[v].begin(), bag_idx[v].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (int u : nb) adj[u].erase(v);
        adj[v].clear();
    }
    TreeDecomposition td;
    td.tree.parent.assign(n, -1);
    td.tree.root = order[n - 1];
    td.bags.assign(n, {});
    for (int v = 0; v < n; ++v) {
        for (int idx : bag_idx[v]) td.bags[v].push_back(g.id_at(idx));
        if (v == td.tree.root) continue;
        // parent = bag of the earliest-eliminated other member, or the root
        int best = -1;
        for (int u : bag_idx[v])
            if (u != v && (best == -1 || position[u] < position[best])) best = u;
        td.tree.parent[v] = best == -1 ? td.tree.root : best;
    }
    return td;
}

bool is_acyclic(const WeightedGraph& g) {
    // union-find over edges
    std::vector<int> up(g.n());
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges()) {
        int a = find(g.index_of(u)), b = find(g.index_of(v));
        if (a == b) return false;
        up[a] = b;
    }
    return true;
}

/// K4-minor-freeness via series reduction: repeatedly delete vertices of
/// degree <= 1 and suppress degree-2 vertices (collapsing parallel edges).
bool reduces_to_empty(const WeightedGraph& g) {
    std::vector<std::set<int>> adj(g.n());
    for (const auto& [u, v] : g.edges()) {
        adj[g.index_of(u)].insert(g.index_of(v));
        adj[g.index_of(v)].insert(g.index_of(u));
    }
    std::vector<bool> alive(g.n(), true);
    bool changed = true;
    int remaining = g.n();
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v]) continue;
            if (adj[v].size() <= 1) {
                for (int u : adj[v]) adj[u].erase(v);
                adj[v].clear();
                alive[v] = false;
                --remaining;
                changed = true;
            } else if (adj[v].size() == 2) {
                auto it = adj[v].begin();
                int a = *it++, b = *it;
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[v].clear();
                alive[v] = false;
                --remaining;
                changed = true;
            }
        }
    }
    return remaining == 0;
}

}  // namespace

TreewidthResult treewidth_exact(const WeightedGraph& g, const Caps& caps) {
    if (g.n() > caps.tw_exact)
        fail(ErrorKind::cap, "treewidth_exact: " + std::to_string(g.n()) + " vertices exceeds cap " +
                                 std::to_string(caps.tw_exact));
    TreewidthResult res;
    if (g.n() == 0) {
        res.width = -1;
        res.decomposition.tree.parent = {-1};
        res.decomposition.tree.root = 0;
        res.decomposition.bags = {{}};
        return res;
    }
    MaskGraph mg = MaskGraph::of(g);
    int n = g.n();
    std::size_t total = 1ULL << n;
    // dp[S] = min over orders eliminating exactly S first of the max
    // elimination degree seen; choice[S] = last vertex of S in that order.
    std::vector<std::int8_t> dp(total, 0);
    std::vector<std::int8_t> choice(total, -1);
    dp[0] = -1;
    for (std::uint64_t s = 1; s < total; ++s) {
        int best = n;
        int bestv = -1;
        std::uint64_t t = s;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            std::uint64_t prev = s & ~(1ULL << v);
            int cand = std::max<int>(dp[prev], elimination_degree(mg, prev, v));
            if (cand < best) {
                best = cand;
                bestv = v;
            }
        }
        dp[s] = static_cast<std::int8_t>(best);
        choice[s] = static_cast<std::int8_t>(bestv);
    }
    res.width = dp[total - 1];
    std::vector<int> order(n);
    std::uint64_t s = total - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        order[pos] = choice[s];
        s &= ~(1ULL << order[pos]);
    }
    res.decomposition = decomposition_from_order(g, order);
    return res;
}

bool is_tw_at_most(const WeightedGraph& g, int eta, const Caps& caps) {
    if (eta < 0) fail(ErrorKind::invalid, "is_tw_at_most: eta must be >= 0");
    if (g.n() == 0) return true;
    if (eta >= g.n() - 1) return true;
    if (eta == 0) return g.m() == 0;
    if (eta == 1) return is_acyclic(g);
    if (eta == 2) return reduces_to_empty(g);
    return treewidth_exact(g, caps).width <= eta;
}

}  // namespace fmdel
