#pragma once

#include <optional>
#include <vector>

#include "exhaustive.hpp"
#include "graph.hpp"
#include "minors.hpp"
#include "separations.hpp"
#include "solvers.hpp"

namespace fmdel {

/// Definition-level brute-force verifiers. These enumerate the solution space
/// directly and are kept independent of the production algorithms they check
/// (solve_exact branches on obstructions, these sweep subsets; the separator
/// oracle filters by the raw definition instead of cut branching).

/// All inclusion-minimal treewidth-eta modulators, ordered by (size, lex).
std::vector<VertexSet> all_modulators(const WeightedGraph& g, int eta,
                                      const Caps& caps = default_caps());

/// Minimum-weight X with tw(G−X) <= eta, by subset sweep.
ExactResult brute_opt_eta(const WeightedGraph& g, int eta, const Caps& caps = default_caps());

/// Minimum-weight ℱ-minor hitting set by subset sweep (lexicographic
/// tie-break), optionally restricted to |X| <= k (nullopt when infeasible).
ExactResult brute_opt(const WeightedGraph& g, const MinorFamilySpec& f,
                      const Caps& caps = default_caps());
std::optional<ExactResult> brute_opt_k(const WeightedGraph& g, const MinorFamilySpec& f, int k,
                                       const Caps& caps = default_caps());

bool is_hitting_set(const WeightedGraph& g, const MinorFamilySpec& f, const VertexSet& x,
                    const Caps& caps = default_caps());

/// Important (v,X)-separators straight from the definition: all minimal
/// separators of size <= k, then dominance filtering.
std::vector<VertexSet> brute_important_separators(const WeightedGraph& g, VertexId v,
                                                  const VertexSet& x, int k);

struct HitCheck {
    bool ok = false;
    Rational min_fraction;  // min over minimal modulators of the hit fraction
};

/// Fraction of protrusions met by every inclusion-minimal modulator.
HitCheck verify_hitting_family(const WeightedGraph& g, int eta, const HittingFamily& fam,
                               const Caps& caps = default_caps());

/// Structural facts asserted on a hitting family; returns a
/// list of violated item numbers (empty = all hold).
std::vector<int> check_family_structure(const WeightedGraph& g, int eta, const HittingFamily& fam,
                                        const Caps& caps = default_caps());

/// Protrusion bound: every C∪S has tw <= 3η+2 and boundary <= 3η+2.
bool check_protrusion_bound(const WeightedGraph& g, int eta, const HittingFamily& fam,
                            const Caps& caps = default_caps());

/// True iff for every hitting set X (with |X ∩ A| <= ell when given) some
/// candidate X_A gives a hitting set (X∖A) ∪ X_A of no greater weight.
bool verify_exhaustive(const WeightedGraph& g, const VertexSet& a, const MinorFamilySpec& f,
                       const ExhaustiveFamily& fam, std::optional<int> ell = std::nullopt,
                       const Caps& caps = default_caps());

struct ExpectationAudit {
    Rational e_cost;              // E[w(Y)] over the sampling distribution
    Rational e_drop;              // E[opt_eta(G) − opt_eta(G−Y)]
    std::optional<Rational> ratio;  // e_cost / e_drop, nullopt when e_drop = 0
    bool identity_ok = false;     // e_cost == |ℬ| / W exactly
    std::size_t pair_count = 0;
};

ExpectationAudit expectation_audit(const WeightedGraph& g, int eta, const MinorFamilySpec& f,
                                   const Caps& caps = default_caps(),
                                   SolverCache* cache = nullptr);

}  // namespace fmdel
