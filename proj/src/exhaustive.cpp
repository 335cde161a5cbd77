#include "exhaustive.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <json.hpp>

#include "boundaried.hpp"
#include "treewidth.hpp"

namespace fmdel {

bool ExhaustiveFamily::contains(const VertexSet& y) const {
    for (const auto& [cand, w] : candidates)
        if (cand == y) return true;
    return false;
}

namespace {

struct Key {
    VertexSet s;
    std::vector<std::uint64_t> folio_codes;
    int size = -1;  // only used by the sized variant

    bool operator<(const Key& o) const {
        if (s != o.s) return s < o.s;
        if (folio_codes != o.folio_codes) return folio_codes < o.folio_codes;
        return size < o.size;
    }
};

ExhaustiveFamily build(const WeightedGraph& g, const VertexSet& a, const MinorFamilySpec& f,
                       std::optional<int> ell, const Caps& caps) {
    if (!vset::is_subset(a, g.vertices()))
        fail(ErrorKind::invalid, "exhaustive_family: A is not a subset of V(G)");
    int r = 3 * f.eta + 2;
    VertexSet bd = g.boundary(a);
    if (static_cast<int>(bd.size()) > r)
        fail(ErrorKind::precondition, "exhaustive_family: |∂(A)| = " + std::to_string(bd.size()) +
                                          " exceeds the protrusion bound r = " + std::to_string(r));
    if (!is_tw_at_most(g.induced(a), r, caps))
        fail(ErrorKind::precondition, "exhaustive_family: tw(G[A]) exceeds r = " + std::to_string(r));
    if (static_cast<int>(a.size()) > caps.exhaustive)
        fail(ErrorKind::cap, "exhaustive_family: |A| = " + std::to_string(a.size()) +
                                 " exceeds cap " + std::to_string(caps.exhaustive));
    VertexSet interior = vset::difference(a, bd);

    // keep one minimum-weight candidate per key, ties to the lexicographically
    // smallest vertex set
    std::map<Key, std::pair<Weight, VertexSet>> kept;
    int nb = static_cast<int>(bd.size());
    int ni = static_cast<int>(interior.size());
    for (std::uint64_t smask = 0; smask < (1ULL << nb); ++smask) {
        VertexSet s, kept_boundary;
        for (int i = 0; i < nb; ++i)
            ((smask >> i & 1) ? s : kept_boundary).push_back(bd[i]);
        if (ell && static_cast<int>(s.size()) > *ell) continue;
        for (std::uint64_t imask = 0; imask < (1ULL << ni); ++imask) {
            VertexSet x_int;
            for (int i = 0; i < ni; ++i)
                if (imask >> i & 1) x_int.push_back(interior[i]);
            VertexSet cand = vset::unite(s, x_int);
            if (ell && static_cast<int>(cand.size()) > *ell) continue;
            VertexSet remainder = vset::difference(a, cand);
            BoundariedGraph host{g.induced(remainder), kept_boundary};
            Folio fol = folio(host, f.h, caps);
            Key key{s, fol.patterns, ell ? static_cast<int>(cand.size()) : -1};
            Weight w = g.total_weight(cand);
            auto it = kept.find(key);
            if (it == kept.end() || w < it->second.first ||
                (w == it->second.first && cand < it->second.second))
                kept[key] = {w, std::move(cand)};
        }
    }

    ExhaustiveFamily fam;
    fam.protrusion = a;
    std::map<VertexSet, Weight> dedup;
    for (const auto& [key, val] : kept) dedup.emplace(val.second, val.first);
    for (const auto& [cand, w] : dedup) fam.candidates.emplace_back(cand, w);
    if (ell) {
        fam.size_stratified.emplace();
        for (const auto& [cand, w] : dedup)
            (*fam.size_stratified)[static_cast<int>(cand.size())].emplace_back(cand, w);
    }
    return fam;
}

}  // namespace

ExhaustiveFamily exhaustive_family(const WeightedGraph& g, const VertexSet& a,
                                   const MinorFamilySpec& f, const Caps& caps) {
    return build(g, a, f, std::nullopt, caps);
}

ExhaustiveFamily exhaustive_family_sized(const WeightedGraph& g, const VertexSet& a,
                                         const MinorFamilySpec& f, int ell, const Caps& caps) {
    if (ell < 0) fail(ErrorKind::invalid, "exhaustive_family_sized: ell must be >= 0");
    return build(g, a, f, ell, caps);
}

std::string exhaustive_to_json(const ExhaustiveFamily& fam) {
    nlohmann::json doc;
    doc["protrusion"] = fam.protrusion;
    doc["candidates"] = nlohmann::json::array();
    for (const auto& [cand, w] : fam.candidates)
        doc["candidates"].push_back({{"vertices", cand}, {"weight", w}});
    if (fam.size_stratified) {
        nlohmann::json strat = nlohmann::json::object();
        for (const auto& [sz, list] : *fam.size_stratified) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [cand, w] : list)
                arr.push_back({{"vertices", cand}, {"weight", w}});
            strat[std::to_string(sz)] = arr;
        }
        doc["stratified"] = strat;
    }
    return doc.dump();
}

}  // namespace fmdel
