#include "solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <map>
#include <mutex>

#include <json.hpp>

#include "treewidth.hpp"

namespace fmdel {

// --- exact solvers -------------------------------------------------------------

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

/// Vertex set of some minor model of a family pattern inside G[alive], shrunk
/// greedily, or 0 when G[alive] is ℱ-minor-free.
std::uint64_t find_obstruction(const WeightedGraph& g, const MinorFamilySpec& f,
                               std::uint64_t alive, const Caps& caps) {
    WeightedGraph sub = g.induced(ids_of_mask(g, alive));
    for (const auto& p : f.patterns) {
        auto model = find_minor_model(sub, p, caps);
        if (!model) continue;
        std::uint64_t u = 0;
        for (std::uint64_t b : *model) u |= b;
        std::uint64_t host = 0;
        std::uint64_t t = u;
        while (t) {
            int i = std::countr_zero(t);
            t &= t - 1;
            host |= 1ULL << g.index_of(sub.id_at(i));
        }
        // greedy shrink: drop vertices that keep the pattern present
        std::uint64_t probe = host;
        while (probe) {
            int i = std::countr_zero(probe);
            probe &= probe - 1;
            std::uint64_t smaller = host & ~(1ULL << i);
            if (has_minor(g.induced(ids_of_mask(g, smaller)), p, caps)) host = smaller;
        }
        return host;
    }
    return 0;
}

struct ExactSearch {
    const WeightedGraph& g;
    const MinorFamilySpec& f;
    const Caps& caps;
    int max_vertices;  // -1 = unbounded
    Weight best_weight = -1;
    VertexSet best;

    void consider(std::uint64_t chosen) {
        VertexSet sol = ids_of_mask(g, chosen);
        Weight w = g.total_weight(sol);
        if (best_weight < 0 || w < best_weight || (w == best_weight && sol < best)) {
            best_weight = w;
            best = std::move(sol);
        }
    }

    void branch(std::uint64_t chosen, std::uint64_t forbidden, Weight w) {
        if (best_weight >= 0 && w > best_weight) return;
        std::uint64_t alive = (g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1) & ~chosen;
        std::uint64_t obstruction = find_obstruction(g, f, alive, caps);
        if (obstruction == 0) {
            consider(chosen);
            return;
        }
        if (max_vertices >= 0 && std::popcount(chosen) >= max_vertices) return;
        std::uint64_t pick = obstruction & ~forbidden;
        std::uint64_t banned = forbidden;
        while (pick) {
            int v = std::countr_zero(pick);
            pick &= pick - 1;
            branch(chosen | (1ULL << v), banned, w + g.weight_at(v));
            banned |= 1ULL << v;
        }
    }
};

}  // namespace

ExactResult solve_exact(const WeightedGraph& g, const MinorFamilySpec& f, const Caps& caps) {
    if (g.n() > caps.exact_solver)
        fail(ErrorKind::cap, "solve_exact: " + std::to_string(g.n()) + " vertices exceeds cap " +
                                 std::to_string(caps.exact_solver));
    ExactSearch search{g, f, caps, -1};
    search.branch(0, 0, 0);
    return {search.best, search.best_weight < 0 ? 0 : search.best_weight};
}

std::optional<ExactResult> solve_exact_k(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                                         const Caps& caps) {
    if (k < 0) fail(ErrorKind::invalid, "solve_exact_k: k must be >= 0");
    if (g.n() > caps.exact_solver)
        fail(ErrorKind::cap, "solve_exact_k: " + std::to_string(g.n()) + " vertices exceeds cap " +
                                 std::to_string(caps.exact_solver));
    ExactSearch search{g, f, caps, k};
    search.branch(0, 0, 0);
    if (search.best_weight < 0) return std::nullopt;
    return ExactResult{search.best, search.best_weight};
}

// --- solver cache ----------------------------------------------------------------

namespace {

std::string graph_key(const WeightedGraph& g) {
    std::string key;
    for (VertexId v : g.vertices()) {
        key += std::to_string(v);
        key += ':';
        key += std::to_string(g.weight(v));
        key += ',';
    }
    key += ';';
    for (const auto& [u, v] : g.edges()) {
        key += std::to_string(u);
        key += '-';
        key += std::to_string(v);
        key += ',';
    }
    return key;
}

}  // namespace

struct SolverCache::Impl {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const HittingFamily>> families;
    std::map<std::string, std::shared_ptr<const ExhaustiveFamily>> exhaustives;
    std::map<std::string, std::shared_ptr<const SamplingDistribution>> distributions;
};

SolverCache::SolverCache() : impl_(std::make_shared<Impl>()) {}

std::shared_ptr<const HittingFamily> SolverCache::hitting_family(const WeightedGraph& g, int eta,
                                                                 const Caps& caps) {
    std::string key = std::to_string(eta) + "|" + graph_key(g);
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->families.find(key);
        if (it != impl_->families.end()) return it->second;
    }
    auto fam = std::make_shared<HittingFamily>(build_hitting_family(g, eta, caps));
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->families.emplace(std::move(key), std::move(fam)).first->second;
}

std::shared_ptr<const ExhaustiveFamily> SolverCache::exhaustive(const WeightedGraph& g,
                                                                const VertexSet& a,
                                                                const MinorFamilySpec& f,
                                                                std::optional<int> ell,
                                                                const Caps& caps) {
    std::string key = std::to_string(f.eta) + "/" + std::to_string(f.h) + "|";
    for (const auto& p : f.patterns) key += graph_key(p) + "&";
    key += "|" + std::to_string(ell ? *ell : -1) + "|";
    for (VertexId v : a) key += std::to_string(v) + ",";
    key += "|" + graph_key(g);
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->exhaustives.find(key);
        if (it != impl_->exhaustives.end()) return it->second;
    }
    auto fam = std::make_shared<ExhaustiveFamily>(
        ell ? exhaustive_family_sized(g, a, f, *ell, caps) : exhaustive_family(g, a, f, caps));
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->exhaustives.emplace(std::move(key), std::move(fam)).first->second;
}

std::shared_ptr<const SamplingDistribution> SolverCache::lookup_distribution(
    const WeightedGraph& g) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->distributions.find(graph_key(g));
    return it == impl_->distributions.end() ? nullptr : it->second;
}

void SolverCache::store_distribution(const WeightedGraph& g,
                                     std::shared_ptr<const SamplingDistribution> dist) {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->distributions.emplace(graph_key(g), std::move(dist));
}

// --- sampling --------------------------------------------------------------------

std::shared_ptr<const SamplingDistribution> build_sampling_distribution(const WeightedGraph& g,
                                                                        int eta,
                                                                        const MinorFamilySpec& f,
                                                                        const Caps& caps,
                                                                        SolverCache* cache) {
    if (f.eta != eta)
        fail(ErrorKind::invalid, "sample_step: family eta " + std::to_string(f.eta) +
                                     " does not match eta " + std::to_string(eta));
    if (cache)
        if (auto hit = cache->lookup_distribution(g)) return hit;
    std::shared_ptr<const HittingFamily> fam =
        cache ? cache->hitting_family(g, eta, caps)
              : std::make_shared<HittingFamily>(build_hitting_family(g, eta, caps));
    auto dist = std::make_shared<SamplingDistribution>();
    dist->family_size = fam->separations.size();
    for (const auto& sep : fam->separations) {
        VertexSet a = sep.protrusion();
        std::shared_ptr<const ExhaustiveFamily> ex =
            cache ? cache->exhaustive(g, a, f, std::nullopt, caps)
                  : std::make_shared<ExhaustiveFamily>(exhaustive_family(g, a, f, caps));
        for (const auto& [y, w] : ex->candidates) {
            if (y.empty()) continue;
            dist->pairs.push_back({a, y, Rational(1, BigInt(w))});
        }
    }
    dist->total = Rational(0);
    for (const auto& p : dist->pairs) dist->total += p.mass;
    if (cache) cache->store_distribution(g, dist);
    return dist;
}

namespace {

/// Index into the cumulative masses hit by a uniform 64-bit draw: the smallest
/// i with draw/2^64 · W <= cum_i (ties at boundaries go to the lower index).
std::size_t sample_from(const SamplingDistribution& dist, std::uint64_t draw) {
    Rational target = Rational(BigInt(draw), BigInt(1) << 64) * dist.total;
    Rational cum(0);
    for (std::size_t i = 0; i < dist.pairs.size(); ++i) {
        cum += dist.pairs[i].mass;
        if (target <= cum) return i;
    }
    return dist.pairs.size() - 1;
}

}  // namespace

SampleStep sample_step(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                       std::uint64_t rng_seed, const Caps& caps, SolverCache* cache) {
    auto dist = build_sampling_distribution(g, eta, f, caps, cache);
    if (dist->pairs.empty())
        fail(ErrorKind::precondition,
             "sample_step: the pair family ℬ is empty (every exhaustive family is {∅})");
    Rng rng(rng_seed);
    std::size_t idx = sample_from(*dist, uniform_u64(rng));
    return {dist->pairs[idx].candidate, idx, dist};
}

RunReport approx_modulator(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                           std::uint64_t rng_seed, const Caps& caps, SolverCache* cache) {
    RunReport report;
    report.seed = rng_seed;
    WeightedGraph cur = g;
    while (!is_tw_at_most(cur, eta, caps)) {
        SampleStep step = sample_step(cur, eta, f, derive_seed(rng_seed, report.per_iteration.size()),
                                      caps, cache);
        const auto& pair = step.dist->pairs[step.chosen_index];
        report.per_iteration.push_back(
            {pair.protrusion, step.y, step.dist->family_size, step.dist->pairs.size()});
        report.solution = vset::unite(report.solution, step.y);
        cur = cur.removed(step.y);
    }
    report.iterations = static_cast<int>(report.per_iteration.size());
    report.weight = g.total_weight(report.solution);
    return report;
}

RunReport approx_deletion(const WeightedGraph& g, const MinorFamilySpec& f,
                          std::uint64_t rng_seed, const Caps& caps, SolverCache* cache) {
    RunReport report = approx_modulator(g, f.eta, f, rng_seed, caps, cache);
    report.modulator = report.solution;
    report.modulator_weight = report.weight;
    ExactResult residual = solve_exact(g.removed(report.modulator), f, caps);
    report.residual_solution = residual.solution;
    report.solution = vset::unite(report.modulator, residual.solution);
    report.weight = g.total_weight(report.solution);
    return report;
}

// --- FPT branching ---------------------------------------------------------------

int sample_size_guess(Rng& rng, int k) {
    if (k < 1) fail(ErrorKind::invalid, "sample_size_guess: k must be >= 1");
    if (k == 1) return 1;
    if (k > 62) fail(ErrorKind::cap, "fpt: k larger than 62 is unsupported");
    std::uint64_t total = (1ULL << k) - 1;
    std::uint64_t r = uniform_index(rng, total);
    std::uint64_t cum = 0;
    for (int ell = 1; ell <= k; ++ell) {
        cum += 1ULL << (k - ell);
        if (r < cum) return ell;
    }
    return k;
}

namespace {

std::optional<VertexSet> fpt_one_repetition(const WeightedGraph& g, const MinorFamilySpec& f,
                                            int k, Rng& rng, const Caps& caps, SolverCache* cache,
                                            std::vector<IterationRecord>* trace) {
    if (k == 0) {
        if (is_F_minor_free(g, f, caps)) return VertexSet{};
        return std::nullopt;  // abort
    }
    if (is_tw_at_most(g, f.eta, caps)) {
        auto res = solve_exact_k(g, f, k, caps);
        if (!res) return std::nullopt;
        return res->solution;
    }
    std::shared_ptr<const HittingFamily> fam =
        cache ? cache->hitting_family(g, f.eta, caps)
              : std::make_shared<HittingFamily>(build_hitting_family(g, f.eta, caps));
    std::size_t ai = uniform_index(rng, fam->separations.size());
    VertexSet a = fam->separations[ai].protrusion();
    int ell = sample_size_guess(rng, k);
    std::shared_ptr<const ExhaustiveFamily> ex =
        cache ? cache->exhaustive(g, a, f, ell, caps)
              : std::make_shared<ExhaustiveFamily>(exhaustive_family_sized(g, a, f, ell, caps));
    std::vector<const std::pair<VertexSet, Weight>*> nonempty;
    for (const auto& cand : ex->candidates)
        if (!cand.first.empty()) nonempty.push_back(&cand);
    if (nonempty.empty()) return std::nullopt;  // 𝒜 = {∅}: abort
    const auto& y = nonempty[uniform_index(rng, nonempty.size())]->first;
    if (trace) trace->push_back({a, y, fam->separations.size(), nonempty.size()});
    auto rest = fpt_one_repetition(g.removed(y), f, k - ell, rng, caps, cache, trace);
    if (!rest) return std::nullopt;
    return vset::unite(y, *rest);
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::future<void>> futs;
    for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
    for (auto& fu : futs) fu.get();
}

}  // namespace

RunReport fpt_k_optimal(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                        std::uint64_t rng_seed, long long repetitions, const Caps& caps,
                        SolverCache* cache) {
    if (k < 0) fail(ErrorKind::invalid, "fpt_k_optimal: k must be >= 0");
    if (repetitions <= 0)
        repetitions = std::min<long long>(1LL << std::min(2 * k, 20), 1LL << 20);
    RunReport report;
    report.seed = rng_seed;
    report.repetitions = static_cast<std::size_t>(repetitions);
    report.per_repetition.assign(report.repetitions, {});
    std::vector<std::vector<IterationRecord>> traces(report.repetitions);
    parallel_for(report.repetitions, caps.threads, [&](std::size_t i) {
        Rng rng(derive_seed(rng_seed, i));
        auto res = fpt_one_repetition(g, f, k, rng, caps, cache, &traces[i]);
        if (res) {
            report.per_repetition[i].completed = true;
            report.per_repetition[i].solution = *res;
            report.per_repetition[i].weight = g.total_weight(*res);
        }
    });
    std::size_t best = report.repetitions;
    for (std::size_t i = 0; i < report.repetitions; ++i) {
        const auto& rep = report.per_repetition[i];
        if (!rep.completed) continue;
        ++report.completed_repetitions;
        if (best == report.repetitions || rep.weight < report.per_repetition[best].weight ||
            (rep.weight == report.per_repetition[best].weight &&
             rep.solution < report.per_repetition[best].solution))
            best = i;
    }
    if (best == report.repetitions) {
        report.success = false;
        return report;
    }
    report.success = true;
    report.solution = report.per_repetition[best].solution;
    report.weight = report.per_repetition[best].weight;
    report.per_iteration = traces[best];
    report.iterations = static_cast<int>(traces[best].size());
    return report;
}

// --- JSON ------------------------------------------------------------------------

std::string exact_to_json(const ExactResult& r) {
    nlohmann::json doc;
    doc["weight"] = r.weight;
    doc["solution"] = r.solution;
    return doc.dump();
}

std::string infeasible_json() {
    nlohmann::json doc;
    doc["status"] = "infeasible";
    return doc.dump();
}

namespace {

nlohmann::json iteration_json(const IterationRecord& it) {
    return {{"protrusion", it.protrusion},
            {"Y", it.y},
            {"family_size", it.family_size},
            {"pairs", it.pair_count}};
}

}  // namespace

std::string run_report_to_json(const RunReport& r, ReportKind kind) {
    nlohmann::json doc;
    doc["seed"] = r.seed;
    if (kind == ReportKind::fpt) {
        doc["status"] = r.success ? "ok" : "failure";
        doc["repetitions"] = r.repetitions;
        doc["completed_repetitions"] = r.completed_repetitions;
        if (!r.success) return doc.dump();
    }
    doc["solution"] = r.solution;
    doc["weight"] = r.weight;
    doc["iterations"] = r.iterations;
    doc["per_iteration"] = nlohmann::json::array();
    for (const auto& it : r.per_iteration) doc["per_iteration"].push_back(iteration_json(it));
    if (kind == ReportKind::deletion) {
        doc["modulator"] = r.modulator;
        doc["modulator_weight"] = r.modulator_weight;
        doc["residual_solution"] = r.residual_solution;
    }
    return doc.dump();
}

std::string distribution_to_json(const SamplingDistribution& d) {
    nlohmann::json doc;
    doc["family_size"] = d.family_size;
    doc["total_mass"] = to_string(d.total);
    doc["pairs"] = nlohmann::json::array();
    for (const auto& p : d.pairs)
        doc["pairs"].push_back(
            {{"protrusion", p.protrusion}, {"Y", p.candidate}, {"mass", to_string(p.mass)}});
    return doc.dump();
}

}  // namespace fmdel
