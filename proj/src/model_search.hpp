#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace fmdel {

/// Searches for a minor model: disjoint nonempty connected branch sets in the
/// host, one per pattern vertex, with a host edge between the branch sets of
/// every pattern edge. Pattern vertices with forced_root >= 0 must have that
/// host index inside their branch set (rooted minors).
struct ModelSearch {
    const MaskGraph& g;
    int pn;
    std::vector<std::uint64_t> padj;  // pattern adjacency masks
    std::vector<int> forced_root;     // host index per pattern vertex, -1 = free
    std::vector<int> order;
    std::vector<std::uint64_t> branch;
    std::uint64_t used = 0;
    std::vector<std::uint64_t> model;

    ModelSearch(const MaskGraph& host, std::vector<std::uint64_t> pattern_adj,
                std::vector<int> roots)
        : g(host), pn(static_cast<int>(pattern_adj.size())), padj(std::move(pattern_adj)),
          forced_root(std::move(roots)) {
        // rooted vertices first, then most-constrained-first
        std::vector<bool> placed(pn, false);
        for (int step = 0; step < pn; ++step) {
            int best = -1, bestKey = -1;
            for (int v = 0; v < pn; ++v) {
                if (placed[v]) continue;
                int anchors = 0;
                for (int u = 0; u < pn; ++u)
                    if (placed[u] && (padj[v] >> u & 1)) ++anchors;
                int key = (forced_root[v] >= 0 ? 1000 : 0) + anchors * 10 +
                          std::popcount(padj[v]);
                if (key > bestKey) {
                    best = v;
                    bestKey = key;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
        branch.assign(pn, 0);
    }

    bool attachments_ok(int pv, std::uint64_t b) const {
        for (int q = 0; q < pn; ++q)
            if (branch[q] && (padj[pv] >> q & 1) && !(g.neighborhood(branch[q]) & b)) return false;
        return true;
    }

    // ESU discipline: each connected subset of `allowed` reachable from `cur`
    // is visited exactly once.
    template <typename Fn>
    bool grow(std::uint64_t cur, std::uint64_t ext, std::uint64_t nbcur, std::uint64_t allowed,
              int maxSize, Fn&& fn) {
        if (fn(cur)) return true;
        if (std::popcount(cur) >= maxSize) return false;
        while (ext) {
            int w = std::countr_zero(ext);
            std::uint64_t wbit = 1ULL << w;
            ext &= ~wbit;
            std::uint64_t fresh = g.adj[w] & allowed & ~nbcur & ~cur;
            if (grow(cur | wbit, (ext | fresh) & ~wbit, nbcur | g.adj[w], allowed, maxSize, fn))
                return true;
        }
        return false;
    }

    template <typename Fn>
    bool enum_connected(std::uint64_t free, int maxSize, Fn&& fn) {
        std::uint64_t roots = free;
        while (roots) {
            int r = std::countr_zero(roots);
            roots &= roots - 1;
            std::uint64_t above = r >= 63 ? 0 : (~0ULL << (r + 1));
            std::uint64_t allowed = free & above;
            if (grow(1ULL << r, g.adj[r] & allowed, g.adj[r], allowed, maxSize, fn)) return true;
        }
        return false;
    }

    template <typename Fn>
    bool enum_connected_rooted(int root, std::uint64_t free, int maxSize, Fn&& fn) {
        std::uint64_t allowed = free & ~(1ULL << root);
        return grow(1ULL << root, g.adj[root] & allowed, g.adj[root], allowed, maxSize, fn);
    }

    bool assign(int pos) {
        if (pos == pn) {
            model.assign(branch.begin(), branch.end());
            return true;
        }
        int pv = order[pos];
        std::uint64_t free = g.full() & ~used;
        int budget = std::popcount(free) - (pn - pos - 1);
        if (budget <= 0) return false;
        auto try_set = [&](std::uint64_t b) {
            if (!attachments_ok(pv, b)) return false;
            branch[pv] = b;
            used |= b;
            bool ok = assign(pos + 1);
            used &= ~b;
            branch[pv] = 0;
            return ok;
        };
        if (forced_root[pv] >= 0) {
            int r = forced_root[pv];
            if (!(free >> r & 1)) return false;
            return enum_connected_rooted(r, free, budget, try_set);
        }
        return enum_connected(free, budget, try_set);
    }

    bool run() { return assign(0); }
};

}  // namespace fmdel
