#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exhaustive.hpp"
#include "graph.hpp"
#include "minors.hpp"
#include "separations.hpp"

namespace fmdel {

struct ExactResult {
    VertexSet solution;
    Weight weight = 0;
};

/// Minimum-weight ℱ-minor hitting set, branch-and-bound on minor obstructions.
/// Deterministic lexicographic tie-break.
ExactResult solve_exact(const WeightedGraph& g, const MinorFamilySpec& f,
                        const Caps& caps = default_caps());

/// Minimum weight among hitting sets with at most k vertices; nullopt when
/// none exists (opt_{ℱ,k} = ∞).
std::optional<ExactResult> solve_exact_k(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                                         const Caps& caps = default_caps());

/// One atom of the sampling family ℬ: a protrusion together with a non-empty
/// candidate from its exhaustive family. Equal candidates arising from
/// different protrusions are distinct atoms.
struct SamplingPair {
    VertexSet protrusion;
    VertexSet candidate;
    Rational mass;  // 1/w(candidate), exact
};

struct SamplingDistribution {
    std::vector<SamplingPair> pairs;
    Rational total;               // W = Σ 1/w(Y)
    std::size_t family_size = 0;  // |𝒫|
};

/// Memoizes hitting families, exhaustive families and sampling distributions
/// per exact (graph, parameters) key so Monte-Carlo drivers do not rebuild
/// identical structures. Thread-safe; results are immutable shared objects.
class SolverCache {
public:
    SolverCache();

    std::shared_ptr<const HittingFamily> hitting_family(const WeightedGraph& g, int eta,
                                                        const Caps& caps);
    std::shared_ptr<const ExhaustiveFamily> exhaustive(const WeightedGraph& g, const VertexSet& a,
                                                       const MinorFamilySpec& f,
                                                       std::optional<int> ell, const Caps& caps);
    std::shared_ptr<const SamplingDistribution> lookup_distribution(const WeightedGraph& g) const;
    void store_distribution(const WeightedGraph& g,
                            std::shared_ptr<const SamplingDistribution> dist);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

std::shared_ptr<const SamplingDistribution> build_sampling_distribution(
    const WeightedGraph& g, int eta, const MinorFamilySpec& f, const Caps& caps = default_caps(),
    SolverCache* cache = nullptr);

struct SampleStep {
    VertexSet y;
    std::size_t chosen_index = 0;
    std::shared_ptr<const SamplingDistribution> dist;
};

/// Single sampling step: builds the hitting family and the per-protrusion
/// exhaustive families, then samples one (A,Y) pair with probability
/// proportional to 1/w(Y). Pre: tw(G) > eta and f.eta == eta.
SampleStep sample_step(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                       std::uint64_t rng_seed, const Caps& caps = default_caps(),
                       SolverCache* cache = nullptr);

struct IterationRecord {
    VertexSet protrusion;
    VertexSet y;
    std::size_t family_size = 0;  // |𝒫| at this iteration
    std::size_t pair_count = 0;   // |ℬ| (or nonempty candidates for fpt)
};

struct RepetitionRecord {
    bool completed = false;
    Weight weight = 0;
    VertexSet solution;
};

struct RunReport {
    VertexSet solution;
    Weight weight = 0;
    int iterations = 0;
    std::uint64_t seed = 0;
    std::vector<IterationRecord> per_iteration;

    // approx_deletion extras
    VertexSet modulator;
    Weight modulator_weight = 0;
    VertexSet residual_solution;

    // fpt extras
    bool success = true;
    std::size_t repetitions = 0;
    std::size_t completed_repetitions = 0;
    std::vector<RepetitionRecord> per_repetition;
};

/// Iterates sample_step on G − X until tw(G − X) <= eta.
RunReport approx_modulator(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                           std::uint64_t rng_seed, const Caps& caps = default_caps(),
                           SolverCache* cache = nullptr);

/// Modulator phase followed by an exact solve of the residual graph.
RunReport approx_deletion(const WeightedGraph& g, const MinorFamilySpec& f,
                          std::uint64_t rng_seed, const Caps& caps = default_caps(),
                          SolverCache* cache = nullptr);

/// Randomized branching for a k-optimal solution; repetitions <= 0 selects the
/// default schedule min(4^k, 2^20). report.success is false when every
/// repetition aborted.
RunReport fpt_k_optimal(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                        std::uint64_t rng_seed, long long repetitions = -1,
                        const Caps& caps = default_caps(), SolverCache* cache = nullptr);

/// Size guess for the branching step: Pr[L = ℓ] = 2^{k−ℓ}/(2^k − 1) on
/// [1,k], which dominates 2^{−ℓ} everywhere.
int sample_size_guess(Rng& rng, int k);

enum class ReportKind { modulator, deletion, fpt };

std::string exact_to_json(const ExactResult& r);
std::string infeasible_json();
std::string run_report_to_json(const RunReport& r, ReportKind kind);
std::string distribution_to_json(const SamplingDistribution& d);

}  // namespace fmdel
