#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>

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

}  // namespace

std::vector<VertexSet> all_modulators(const WeightedGraph& g, int eta, const Caps& caps) {
    if (g.n() > caps.modulator_enum)
        fail(ErrorKind::cap, "all_modulators: " + std::to_string(g.n()) +
                                 " vertices exceeds cap " + std::to_string(caps.modulator_enum));
    int n = g.n();
    std::size_t total = 1ULL << n;
    std::vector<bool> qualifies(total, false);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t keep = (total - 1) & ~x;
        qualifies[x] = is_tw_at_most(g.induced(ids_of_mask(g, keep)), eta, caps);
    }
    std::vector<VertexSet> out;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (!qualifies[x]) continue;
        bool minimal = true;
        std::uint64_t t = x;
        while (t && minimal) {
            int i = std::countr_zero(t);
            t &= t - 1;
            if (qualifies[x & ~(1ULL << i)]) minimal = false;
        }
        if (minimal) out.push_back(ids_of_mask(g, x));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

template <typename Pred>
ExactResult best_subset(const WeightedGraph& g, Pred&& qualifies) {
    int n = g.n();
    std::size_t total = 1ULL << n;
    Weight best_w = -1;
    VertexSet best;
    for (std::uint64_t x = 0; x < total; ++x) {
        VertexSet xs = ids_of_mask(g, x);
        Weight w = g.total_weight(xs);
        if (best_w >= 0 && (w > best_w || (w == best_w && !(xs < best)))) continue;
        if (!qualifies(x, xs)) continue;
        best_w = w;
        best = std::move(xs);
    }
    return {best, best_w < 0 ? 0 : best_w};
}

}  // namespace

ExactResult brute_opt_eta(const WeightedGraph& g, int eta, const Caps& caps) {
    if (g.n() > caps.exact_solver) fail(ErrorKind::cap, "brute_opt_eta: cap exceeded");
    std::uint64_t full = g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
    return best_subset(g, [&](std::uint64_t x, const VertexSet&) {
        return is_tw_at_most(g.induced(ids_of_mask(g, full & ~x)), eta, caps);
    });
}

ExactResult brute_opt(const WeightedGraph& g, const MinorFamilySpec& f, const Caps& caps) {
    if (g.n() > caps.exact_solver) fail(ErrorKind::cap, "brute_opt: cap exceeded");
    std::uint64_t full = g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
    return best_subset(g, [&](std::uint64_t x, const VertexSet&) {
        return is_F_minor_free(g.induced(ids_of_mask(g, full & ~x)), f, caps);
    });
}

std::optional<ExactResult> brute_opt_k(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                                       const Caps& caps) {
    if (g.n() > caps.exact_solver) fail(ErrorKind::cap, "brute_opt_k: cap exceeded");
    std::uint64_t full = g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
    bool any = false;
    auto res = best_subset(g, [&](std::uint64_t x, const VertexSet& xs) {
        if (static_cast<int>(xs.size()) > k) return false;
        bool ok = is_F_minor_free(g.induced(ids_of_mask(g, full & ~x)), f, caps);
        any = any || ok;
        return ok;
    });
    if (!any) return std::nullopt;
    return res;
}

bool is_hitting_set(const WeightedGraph& g, const MinorFamilySpec& f, const VertexSet& x,
                    const Caps& caps) {
    return is_F_minor_free(g.removed(x), f, caps);
}

std::vector<VertexSet> brute_important_separators(const WeightedGraph& g, VertexId v,
                                                  const VertexSet& x, int k) {
    if (vset::contains(x, v))
        fail(ErrorKind::invalid, "brute_important_separators: v is in X");
    if (k < 0) fail(ErrorKind::invalid, "brute_important_separators: k must be >= 0");
    MaskGraph mg = MaskGraph::of(g);
    std::uint64_t xmask = 0;
    for (VertexId u : x) xmask |= 1ULL << g.index_of(u);
    std::uint64_t vbit = 1ULL << g.index_of(v);
    auto reach = [&](std::uint64_t removed) {
        std::uint64_t alive = mg.full() & ~removed;
        std::uint64_t comp = vbit;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t fm = frontier;
            while (fm) {
                int i = std::countr_zero(fm);
                fm &= fm - 1;
                next |= mg.adj[i] & alive;
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        return comp;
    };
    auto separates = [&](std::uint64_t s) { return (reach(s) & xmask) == 0; };
    // all minimal separators of size <= k
    std::vector<std::pair<std::uint64_t, std::uint64_t>> minimal;  // (S, reach side)
    std::uint64_t pool = mg.full() & ~(xmask | vbit);
    std::vector<int> poolv;
    for (int i = 0; i < mg.n; ++i)
        if (pool >> i & 1) poolv.push_back(i);
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t s, int size) -> void {
        if (separates(s)) {
            bool min = true;
            std::uint64_t t = s;
            while (t && min) {
                int i = std::countr_zero(t);
                t &= t - 1;
                if (separates(s & ~(1ULL << i))) min = false;
            }
            if (min) minimal.emplace_back(s, reach(s));
            return;  // supersets are not minimal
        }
        if (size == k) return;
        for (std::size_t i = start; i < poolv.size(); ++i)
            self(self, i + 1, s | (1ULL << poolv[i]), size + 1);
    };
    rec(rec, 0, 0, 0);
    // dominance filter straight from the definition
    std::vector<VertexSet> out;
    for (const auto& [s, side] : minimal) {
        bool important = true;
        for (const auto& [s2, side2] : minimal) {
            if (s2 == s) continue;
            if (std::popcount(s2) <= std::popcount(s) && (side & ~side2) == 0 && side != side2) {
                important = false;
                break;
            }
        }
        if (important) out.push_back(ids_of_mask(g, s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

HitCheck verify_hitting_family(const WeightedGraph& g, int eta, const HittingFamily& fam,
                               const Caps& caps) {
    if (fam.separations.empty())
        fail(ErrorKind::invalid, "verify_hitting_family: family is empty");
    if (is_tw_at_most(g, eta, caps))
        fail(ErrorKind::precondition, "verify_hitting_family: tw(G) <= eta");
    auto protrusions = fam.protrusions();
    auto modulators = all_modulators(g, eta, caps);
    HitCheck res;
    res.min_fraction = Rational(1);
    bool first = true;
    for (const auto& x : modulators) {
        long long hit = 0;
        for (const auto& p : protrusions)
            if (!vset::intersect(p, x).empty()) ++hit;
        Rational frac(BigInt(hit), BigInt(static_cast<long long>(protrusions.size())));
        if (first || frac < res.min_fraction) res.min_fraction = frac;
        first = false;
    }
    res.ok = !first && res.min_fraction > Rational(0);
    return res;
}

std::vector<int> check_family_structure(const WeightedGraph& g, int eta,
                                        const HittingFamily& fam, const Caps& caps) {
    std::vector<int> violated;
    auto all = enumerate_simple_separations(g, eta, caps);
    auto is_simple_sep = [&](const VertexSet& c, const VertexSet& s) {
        for (const auto& sep : all)
            if (sep.c == c && sep.s == s) return true;
        return false;
    };
    // (1) each member is an edge-pair or a semi-simple separation
    for (const auto& sep : fam.separations) {
        if (sep.kind == SepKind::edge_pair) {
            if (!sep.c.empty() || sep.s.size() != 2 || !g.adjacent(sep.s[0], sep.s[1])) {
                violated.push_back(1);
                break;
            }
            continue;
        }
        bool ok = true;
        for (VertexId v : sep.c) {
            VertexSet comp;
            for (const auto& cc : g.removed(sep.s).components())
                if (vset::contains(cc, v)) comp = cc;
            if (!is_simple_sep(comp, sep.s)) ok = false;
        }
        if (!ok) {
            violated.push_back(1);
            break;
        }
    }
    // (2) edge-pairs only for edges covered by no simple separation
    for (const auto& sep : fam.separations) {
        if (sep.kind != SepKind::edge_pair) continue;
        for (const auto& simple : all) {
            VertexSet cu = simple.protrusion();
            if (vset::is_subset(sep.s, cu)) {
                violated.push_back(2);
                break;
            }
        }
        if (!violated.empty() && violated.back() == 2) break;
    }
    // (3) components of semi-simple members are ◁-maximal simple separations
    for (const auto& sep : fam.separations) {
        if (sep.kind != SepKind::semi_simple) continue;
        bool ok = true;
        for (VertexId v : sep.c) {
            VertexSet comp;
            for (const auto& cc : g.removed(sep.s).components())
                if (vset::contains(cc, v)) comp = cc;
            Separation probe{comp, sep.s, SepKind::simple};
            if (!is_lt_maximal(probe, all)) ok = false;
        }
        if (!ok) {
            violated.push_back(3);
            break;
        }
    }
    // (4) every edge covered by some member
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& sep : fam.separations) {
            VertexSet cu = sep.protrusion();
            if (vset::contains(cu, u) && vset::contains(cu, v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            violated.push_back(4);
            break;
        }
    }
    // (5) at most one member per S
    {
        std::map<VertexSet, int> counts;
        for (const auto& sep : fam.separations) ++counts[sep.s];
        for (const auto& [s, c] : counts)
            if (c > 1) {
                violated.push_back(5);
                break;
            }
    }
    return violated;
}

bool check_protrusion_bound(const WeightedGraph& g, int eta, const HittingFamily& fam,
                            const Caps& caps) {
    int r = 3 * eta + 2;
    for (const auto& sep : fam.separations) {
        VertexSet p = sep.protrusion();
        if (static_cast<int>(g.boundary(p).size()) > r) return false;
        if (!is_tw_at_most(g.induced(p), r, caps)) return false;
    }
    return true;
}

bool verify_exhaustive(const WeightedGraph& g, const VertexSet& a, const MinorFamilySpec& f,
                       const ExhaustiveFamily& fam, std::optional<int> ell, const Caps& caps) {
    if (g.n() > 20) fail(ErrorKind::cap, "verify_exhaustive: cap exceeded");
    int n = g.n();
    std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        VertexSet xs = ids_of_mask(g, x);
        VertexSet inter = vset::intersect(xs, a);
        if (ell && static_cast<int>(inter.size()) > *ell) continue;
        if (!is_F_minor_free(g.induced(ids_of_mask(g, full & ~x)), f, caps)) continue;
        Weight wx = g.total_weight(xs);
        VertexSet outside = vset::difference(xs, a);
        bool replaced = false;
        for (const auto& [cand, wc] : fam.candidates) {
            VertexSet alt = vset::unite(outside, cand);
            if (g.total_weight(alt) > wx) continue;
            if (is_F_minor_free(g.removed(alt), f, caps)) {
                replaced = true;
                break;
            }
        }
        if (!replaced) return false;
    }
    return true;
}

ExpectationAudit expectation_audit(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                                   const Caps& caps, SolverCache* cache) {
    auto dist = build_sampling_distribution(g, eta, f, caps, cache);
    ExpectationAudit audit;
    audit.pair_count = dist->pairs.size();
    if (dist->pairs.empty()) {
        audit.identity_ok = true;
        return audit;
    }
    Weight opt_g = brute_opt_eta(g, eta, caps).weight;
    std::map<VertexSet, Weight> drop_memo;
    Rational cost(0), drop(0);
    for (const auto& p : dist->pairs) {
        Rational prob = p.mass / dist->total;
        cost += Rational(BigInt(g.total_weight(p.candidate))) * prob;
        auto it = drop_memo.find(p.candidate);
        if (it == drop_memo.end())
            it = drop_memo.emplace(p.candidate, brute_opt_eta(g.removed(p.candidate), eta, caps).weight)
                     .first;
        drop += Rational(BigInt(opt_g - it->second)) * prob;
    }
    audit.e_cost = cost;
    audit.e_drop = drop;
    audit.identity_ok =
        cost == Rational(BigInt(static_cast<long long>(dist->pairs.size()))) / dist->total;
    if (drop > Rational(0)) audit.ratio = cost / drop;
    return audit;
}

}  // namespace fmdel
