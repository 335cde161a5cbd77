#pragma once

#include <string>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "minors.hpp"

namespace fmdel {

struct ExperimentConfig {
    std::string family = "k3";  // preset or family JSON; eta comes from the family
    int mc_runs = 200;          // approx Monte-Carlo runs per instance
    int fpt_seeds = 20;         // fpt repetitions-of-repetitions per instance
    int max_k = 2;              // fpt budget cap per instance
    double confidence = 0.99;   // one-sided Hoeffding level
    std::vector<std::string> checks;  // empty = all
    bool csv = false;
};

struct VerificationReport {
    bool all_pass = false;
    std::string json;  // schema 1
    std::string csv;   // optional per-instance summary
};

/// Runs every enabled definition-level verifier and the Monte-Carlo suites on
/// the generated corpus. Deterministic given (spec, config).
VerificationReport run_experiments(const CorpusSpec& spec, const ExperimentConfig& config,
                                   const Caps& caps = default_caps());

/// One-sided Hoeffding slack at the given confidence for N samples in a range
/// of width `range`.
double hoeffding_slack(int samples, double range, double confidence);

}  // namespace fmdel
