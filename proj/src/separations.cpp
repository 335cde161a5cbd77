#include "separations.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include <json.hpp>

#include "treewidth.hpp"

namespace fmdel {

namespace {

VertexSet ids_of_mask(const WeightedGraph& g, std::uint64_t mask) {
    VertexSet out;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(g.id_at(i));
    }
    return out;
}

std::uint64_t mask_of_ids(const WeightedGraph& g, const VertexSet& s) {
    std::uint64_t m = 0;
    for (VertexId v : s) m |= 1ULL << g.index_of(v);
    return m;
}

}  // namespace

std::vector<Separation> enumerate_simple_separations(const WeightedGraph& g, int eta,
                                                     const Caps& caps) {
    if (eta < 1) fail(ErrorKind::invalid, "enumerate_simple_separations: eta must be >= 1");
    std::vector<Separation> out;
    if (g.n() == 0) return out;
    MaskGraph mg = MaskGraph::of(g);
    int cap = 2 * eta + 2;
    // lexicographic enumeration of subsets S (as sorted id sequences)
    std::vector<int> chosen;
    auto emit_for = [&](std::uint64_t smask) {
        std::uint64_t rest = mg.full() & ~smask;
        // components of G−S in smallest-vertex order
        std::uint64_t left = rest;
        while (left) {
            int v = std::countr_zero(left);
            std::uint64_t comp = mg.component_of(v, rest);
            left &= ~comp;
            if (mg.neighborhood(comp) != smask) continue;
            VertexSet cids = ids_of_mask(g, comp);
            if (!is_tw_at_most(g.induced(cids), eta, caps)) continue;
            out.push_back({std::move(cids), ids_of_mask(g, smask), SepKind::simple});
        }
    };
    auto rec = [&](auto&& self, int start, std::uint64_t smask) -> void {
        emit_for(smask);
        if (static_cast<int>(chosen.size()) == cap) return;
        for (int i = start; i < g.n(); ++i) {
            chosen.push_back(i);
            self(self, i + 1, smask | (1ULL << i));
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool is_lt_maximal(const Separation& sep, const std::vector<Separation>& all) {
    for (const auto& other : all)
        if (other.kind == SepKind::simple && vset::is_proper_subset(sep.c, other.c)) return false;
    return true;
}

std::vector<VertexSet> HittingFamily::protrusions() const {
    std::vector<VertexSet> out;
    out.reserve(separations.size());
    for (const auto& sep : separations) out.push_back(sep.protrusion());
    return out;
}

HittingFamily build_hitting_family(const WeightedGraph& g, int eta, const Caps& caps) {
    if (eta < 1) fail(ErrorKind::invalid, "build_hitting_family: eta must be >= 1");
    if (is_tw_at_most(g, eta, caps))
        fail(ErrorKind::precondition,
             "build_hitting_family: tw(G) <= eta, the family is only defined for tw(G) > eta");
    auto all = enumerate_simple_separations(g, eta, caps);
    // ◁-maximal elements, then merge per equal S
    std::map<VertexSet, VertexSet> merged;  // S -> union of C
    for (const auto& sep : all) {
        if (!is_lt_maximal(sep, all)) continue;
        auto [it, inserted] = merged.try_emplace(sep.s, sep.c);
        if (!inserted) it->second = vset::unite(it->second, sep.c);
    }
    HittingFamily fam;
    fam.eta = eta;
    for (auto& [s, c] : merged)
        fam.separations.push_back({std::move(c), s, SepKind::semi_simple});
    // edge-pairs for edges covered by no simple separation at all
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& sep : all) {
            if ((vset::contains(sep.c, u) || vset::contains(sep.s, u)) &&
                (vset::contains(sep.c, v) || vset::contains(sep.s, v))) {
                covered = true;
                break;
            }
        }
        if (!covered) fam.separations.push_back({{}, {u, v}, SepKind::edge_pair});
    }
    return fam;
}

// --- important separators ----------------------------------------------------

namespace {

/// Unit-vertex-capacity max-flow specialised to small graphs. Source side and
/// targets are undeletable. Returns the cut size, stopping early once it
/// exceeds `limit` (then returns limit+1).
struct VertexCut {
    const MaskGraph& g;
    std::uint64_t targets;

    VertexCut(const MaskGraph& graph, std::uint64_t x) : g(graph), targets(x) {}

    // node encoding: 2*i = in-copy, 2*i+1 = out-copy
    int mincut(std::uint64_t src_side, int limit) const {
        if (src_side & targets) return limit + 1;  // no separator can exist
        int n = g.n;
        std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
        const int INF = 1 << 20;
        for (int i = 0; i < n; ++i) {
            bool soft = !((src_side >> i & 1) || (targets >> i & 1));
            cap[2 * i][2 * i + 1] = soft ? 1 : INF;
            std::uint64_t nb = g.adj[i];
            while (nb) {
                int j = std::countr_zero(nb);
                nb &= nb - 1;
                cap[2 * i + 1][2 * j] = INF;
            }
        }
        // super-source feeding all source-side out-copies, sink = any target in-copy
        int flow = 0;
        while (flow <= limit) {
            std::vector<int> prev(2 * n, -1);
            std::vector<int> queue;
            std::uint64_t s = src_side;
            while (s) {
                int i = std::countr_zero(s);
                s &= s - 1;
                prev[2 * i + 1] = 2 * i + 1;
                queue.push_back(2 * i + 1);
            }
            int reached = -1;
            for (std::size_t qi = 0; qi < queue.size() && reached < 0; ++qi) {
                int cur = queue[qi];
                for (int nx = 0; nx < 2 * n; ++nx) {
                    if (prev[nx] != -1 || cap[cur][nx] <= 0) continue;
                    prev[nx] = cur;
                    if ((nx & 1) == 0 && (targets >> (nx / 2) & 1)) {
                        reached = nx;
                        break;
                    }
                    queue.push_back(nx);
                }
            }
            if (reached < 0) return flow;
            int cur = reached;
            while (prev[cur] != cur) {
                int pr = prev[cur];
                --cap[pr][cur];
                ++cap[cur][pr];
                cur = pr;
            }
            ++flow;
        }
        return flow;
    }
};

std::uint64_t reach_avoiding(const MaskGraph& g, std::uint64_t seed, std::uint64_t removed) {
    std::uint64_t alive = g.full() & ~removed;
    std::uint64_t comp = seed & alive;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int i = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[i] & alive;
        }
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool separates(const MaskGraph& g, std::uint64_t vbit, std::uint64_t x, std::uint64_t s) {
    return (reach_avoiding(g, vbit, s) & x) == 0;
}

/// Greedy push to the unique v-side-maximal minimum cut with source side
/// containing `r`. Returns {r*, cut = N(r*)} or nullopt when the min cut
/// exceeds `budget`.
struct FarCut {
    std::uint64_t side;
    std::uint64_t cut;
};

std::optional<FarCut> farthest_cut(const MaskGraph& g, const VertexCut& vc, std::uint64_t r,
                                   std::uint64_t targets, int budget) {
    int lambda = vc.mincut(r, budget);
    if (lambda > budget) return std::nullopt;
    bool grewAny = true;
    while (grewAny) {
        grewAny = false;
        std::uint64_t frontier = g.neighborhood(r) & ~targets;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t cand = r | (1ULL << u);
            if (vc.mincut(cand, lambda) == lambda) {
                r = cand;
                grewAny = true;
                break;
            }
        }
    }
    return FarCut{r, g.neighborhood(r)};
}

}  // namespace

std::vector<VertexSet> enumerate_important_separators(const WeightedGraph& g, VertexId v,
                                                      const VertexSet& x, int k) {
    if (vset::contains(x, v))
        fail(ErrorKind::invalid, "enumerate_important_separators: v is in X");
    if (k < 0) fail(ErrorKind::invalid, "enumerate_important_separators: k must be >= 0");
    MaskGraph mg = MaskGraph::of(g);
    std::uint64_t xmask = mask_of_ids(g, x);
    std::uint64_t vbit = 1ULL << g.index_of(v);
    VertexCut vc(mg, xmask);

    std::set<std::uint64_t> candidates;
    // Branch on the farthest min cut: its lowest vertex is either in the
    // separator (delete it, budget-1) or on the v-side (absorb it).
    auto rec = [&](auto&& self, std::uint64_t removed, std::uint64_t side, int budget) -> void {
        // farthest cut in G - removed
        MaskGraph sub = mg;
        for (int i = 0; i < sub.n; ++i)
            sub.adj[i] = (removed >> i & 1) ? 0 : (sub.adj[i] & ~removed);
        VertexCut subvc(sub, xmask);
        auto far = farthest_cut(sub, subvc, side, xmask, budget);
        if (!far) return;
        candidates.insert(removed | far->cut);
        if (far->cut == 0) return;
        int u = std::countr_zero(far->cut);
        std::uint64_t ubit = 1ULL << u;
        if (budget >= 1) self(self, removed | ubit, side, budget - 1);
        self(self, removed, far->side | ubit, budget);
    };
    rec(rec, 0, vbit, k);

    // Definition filter in the original graph: separator, inclusion-minimal,
    // and no same-or-smaller separator with strictly larger v-side.
    std::vector<VertexSet> out;
    for (std::uint64_t smask : candidates) {
        if ((smask & (xmask | vbit)) != 0) continue;
        if (std::popcount(smask) > k) continue;
        if (!separates(mg, vbit, xmask, smask)) continue;
        bool minimal = true;
        std::uint64_t t = smask;
        while (t && minimal) {
            int i = std::countr_zero(t);
            t &= t - 1;
            if (separates(mg, vbit, xmask, smask & ~(1ULL << i))) minimal = false;
        }
        if (!minimal) continue;
        std::uint64_t rside = reach_avoiding(mg, vbit, smask);
        int size = std::popcount(smask);
        bool important = true;
        std::uint64_t t2 = smask;
        while (t2 && important) {
            int u = std::countr_zero(t2);
            t2 &= t2 - 1;
            if (mg.adj[u] & xmask) continue;  // absorbing u can never be cut off from X
            if (vc.mincut(rside | (1ULL << u), size) <= size) important = false;
        }
        if (!important) continue;
        out.push_back(ids_of_mask(g, smask));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::string family_to_json(const HittingFamily& fam) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& sep : fam.separations) {
        const char* kind = sep.kind == SepKind::simple     ? "simple"
                           : sep.kind == SepKind::semi_simple ? "semi_simple"
                                                              : "edge_pair";
        doc.push_back({{"kind", kind}, {"C", sep.c}, {"S", sep.s}});
    }
    return doc.dump();
}

}  // namespace fmdel
