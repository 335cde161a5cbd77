#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "boundaried.hpp"
#include "oracles.hpp"
#include "separations.hpp"
#include "solvers.hpp"
#include "treewidth.hpp"

namespace fmdel {

double hoeffding_slack(int samples, double range, double confidence) {
    if (samples <= 0) return 0.0;
    return range * std::sqrt(std::log(1.0 / (1.0 - confidence)) / (2.0 * samples));
}

namespace {

bool enabled(const ExperimentConfig& cfg, const std::string& name) {
    if (cfg.checks.empty()) return true;
    return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

double rat_to_double(const Rational& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

struct CheckResult {
    std::string name;
    bool pass = true;
    int instances = 0;
    nlohmann::json details = nlohmann::json::object();
    std::vector<std::string> errors;
};

RootedTree random_tree(Rng& rng, int n) {
    RootedTree t;
    t.parent.assign(n, -1);
    t.root = 0;
    for (int v = 1; v < n; ++v) t.parent[v] = static_cast<int>(uniform_index(rng, v));
    return t;
}

}  // namespace

VerificationReport run_experiments(const CorpusSpec& spec, const ExperimentConfig& config,
                                   const Caps& caps) {
    MinorFamilySpec family = parse_family(config.family, caps);
    int eta = family.eta;
    auto corpus = generate_corpus(spec);
    std::ostringstream csv;
    csv << "check,instance,key,value\n";

    std::vector<CheckResult> results;
    std::vector<int> hard;  // corpus indexes with tw > eta
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (!is_tw_at_most(corpus[i], eta, caps)) hard.push_back(static_cast<int>(i));

    // hitting family construction + structural facts + hit fractions
    if (enabled(config, "hitting_family")) {
        CheckResult res;
        res.name = "hitting_family";
        Rational min_fraction(1);
        bool any = false;
        std::size_t max_family = 0;
        for (int idx : hard) {
            const auto& g = corpus[idx];
            ++res.instances;
            try {
                HittingFamily fam = build_hitting_family(g, eta, caps);
                auto structure = check_family_structure(g, eta, fam, caps);
                if (!structure.empty()) {
                    res.pass = false;
                    res.errors.push_back("instance " + std::to_string(idx) +
                                         ": structure item violated");
                }
                if (!check_protrusion_bound(g, eta, fam, caps)) {
                    res.pass = false;
                    res.errors.push_back("instance " + std::to_string(idx) + ": protrusion bound");
                }
                auto all = enumerate_simple_separations(g, eta, caps);
                if (fam.separations.size() > all.size() + static_cast<std::size_t>(g.m())) {
                    res.pass = false;
                    res.errors.push_back("instance " + std::to_string(idx) + ": size bound");
                }
                if (g.n() <= caps.modulator_enum) {
                    HitCheck hc = verify_hitting_family(g, eta, fam, caps);
                    if (!hc.ok) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) + ": zero hit fraction");
                    }
                    if (!any || hc.min_fraction < min_fraction) min_fraction = hc.min_fraction;
                    any = true;
                    csv << "hitting_family," << idx << ",min_fraction,"
                        << rat_to_double(hc.min_fraction) << "\n";
                }
                max_family = std::max(max_family, fam.separations.size());
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        if (any) res.details["min_hit_fraction"] = to_string(min_fraction);
        res.details["max_family_size"] = max_family;
        results.push_back(std::move(res));
    }

    // important separators vs the definition oracle
    if (enabled(config, "important_separators")) {
        CheckResult res;
        res.name = "important_separators";
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
            const auto& g = corpus[idx];
            if (g.n() < 3 || g.n() > 10) continue;
            ++res.instances;
            try {
                Rng rng(derive_seed(spec.seed, 7000 + idx));
                for (int trial = 0; trial < 3; ++trial) {
                    VertexId v = g.id_at(static_cast<int>(uniform_index(rng, g.n())));
                    VertexId x1 = g.id_at(static_cast<int>(uniform_index(rng, g.n())));
                    VertexId x2 = g.id_at(static_cast<int>(uniform_index(rng, g.n())));
                    if (v == x1 || v == x2) continue;
                    VertexSet x = vset::normalized({x1, x2});
                    int k = 1 + trial;
                    auto got = enumerate_important_separators(g, v, x, k);
                    auto want = brute_important_separators(g, v, x, k);
                    if (got != want) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) + ": mismatch");
                    }
                    if (got.size() > static_cast<std::size_t>(std::pow(4.0, k))) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) + ": 4^k bound");
                    }
                }
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        results.push_back(std::move(res));
    }

    // LCA closure bounds on random trees
    if (enabled(config, "lca")) {
        CheckResult res;
        res.name = "lca";
        Rng rng(derive_seed(spec.seed, 11));
        for (int trial = 0; trial < 1000; ++trial) {
            ++res.instances;
            int n = 2 + static_cast<int>(uniform_index(rng, 14));
            RootedTree t = random_tree(rng, n);
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (uniform_index(rng, 3) == 0) s.push_back(v);
            auto closure = lca_closure(t, s);
            if (closure.size() > 2 * s.size()) {
                res.pass = false;
                res.errors.push_back("|L| > 2|S| at trial " + std::to_string(trial));
            }
            for (int v : s)
                if (!std::binary_search(closure.begin(), closure.end(), v)) {
                    res.pass = false;
                    res.errors.push_back("S not contained at trial " + std::to_string(trial));
                }
            // components of T−L have at most 2 neighbors in L
            std::vector<bool> in_l(n, false);
            for (int v : closure) in_l[v] = true;
            auto ch = t.children();
            std::vector<int> comp(n, -1);
            int ncomp = 0;
            for (int v = 0; v < n; ++v) {
                if (in_l[v] || comp[v] >= 0) continue;
                std::vector<int> stack{v};
                comp[v] = ncomp;
                while (!stack.empty()) {
                    int cur = stack.back();
                    stack.pop_back();
                    std::vector<int> nb = ch[cur];
                    if (t.parent[cur] != -1) nb.push_back(t.parent[cur]);
                    for (int nx : nb)
                        if (!in_l[nx] && comp[nx] < 0) {
                            comp[nx] = ncomp;
                            stack.push_back(nx);
                        }
                }
                ++ncomp;
            }
            std::vector<std::set<int>> nbrs(ncomp);
            for (int v = 0; v < n; ++v) {
                if (comp[v] < 0) continue;
                std::vector<int> nb = ch[v];
                if (t.parent[v] != -1) nb.push_back(t.parent[v]);
                for (int nx : nb)
                    if (in_l[nx]) nbrs[comp[v]].insert(nx);
            }
            for (const auto& s2 : nbrs)
                if (s2.size() > 2) {
                    res.pass = false;
                    res.errors.push_back("component with >2 neighbors at trial " +
                                         std::to_string(trial));
                }
        }
        results.push_back(std::move(res));
    }

    // exhaustive families against the definition
    if (enabled(config, "exhaustive")) {
        CheckResult res;
        res.name = "exhaustive";
        for (int idx : hard) {
            const auto& g = corpus[idx];
            if (g.n() > 10) continue;
            ++res.instances;
            try {
                HittingFamily fam = build_hitting_family(g, eta, caps);
                std::size_t tried = 0;
                for (const auto& sep : fam.separations) {
                    if (tried >= 3) break;
                    VertexSet a = sep.protrusion();
                    ++tried;
                    ExhaustiveFamily ex = exhaustive_family(g, a, family, caps);
                    csv << "exhaustive," << idx << ",candidates," << ex.candidates.size() << "\n";
                    if (!verify_exhaustive(g, a, family, ex, std::nullopt, caps)) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) + ": not exhaustive");
                    }
                    ExhaustiveFamily ex1 = exhaustive_family_sized(g, a, family, 1, caps);
                    if (!verify_exhaustive(g, a, family, ex1, 1, caps)) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) +
                                             ": not 1-exhaustive");
                    }
                }
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        results.push_back(std::move(res));
    }

    // exact expectation audit
    std::optional<Rational> max_ratio;
    if (enabled(config, "expectation")) {
        CheckResult res;
        res.name = "expectation";
        for (int idx : hard) {
            const auto& g = corpus[idx];
            if (g.n() > 11) continue;
            ++res.instances;
            try {
                SolverCache cache;
                ExpectationAudit audit = expectation_audit(g, eta, family, caps, &cache);
                if (!audit.identity_ok) {
                    res.pass = false;
                    res.errors.push_back("instance " + std::to_string(idx) + ": identity violated");
                }
                if (!audit.ratio) {
                    res.pass = false;
                    res.errors.push_back("instance " + std::to_string(idx) +
                                         ": zero expected drop (flagged)");
                } else {
                    if (!max_ratio || *max_ratio < *audit.ratio) max_ratio = *audit.ratio;
                    csv << "expectation," << idx << ",ratio," << rat_to_double(*audit.ratio) << "\n";
                }
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        if (max_ratio) res.details["max_ratio"] = to_string(*max_ratio);
        results.push_back(std::move(res));
    }

    // Monte-Carlo approximation runs: validity, ratio statistics, supermartingale
    if (enabled(config, "approx")) {
        CheckResult res;
        res.name = "approx";
        double worst_mean_ratio = 0.0;
        for (int idx : hard) {
            const auto& g = corpus[idx];
            ++res.instances;
            try {
                SolverCache cache;
                Weight opt = brute_opt(g, family, caps).weight;
                Weight opt_eta_w = brute_opt_eta(g, eta, caps).weight;
                double sum_ratio = 0.0, sum_mod = 0.0;
                for (int run = 0; run < config.mc_runs; ++run) {
                    RunReport rep = approx_deletion(g, family,
                                                    derive_seed(spec.seed, 5000 + idx * 100000 + run),
                                                    caps, &cache);
                    if (!is_hitting_set(g, family, rep.solution, caps)) {
                        res.pass = false;
                        res.errors.push_back("instance " + std::to_string(idx) + ": invalid output");
                        break;
                    }
                    sum_ratio += static_cast<double>(rep.weight) / static_cast<double>(opt);
                    sum_mod += static_cast<double>(rep.modulator_weight);
                }
                double mean_ratio = sum_ratio / config.mc_runs;
                double mean_mod = sum_mod / config.mc_runs;
                worst_mean_ratio = std::max(worst_mean_ratio, mean_ratio);
                csv << "approx," << idx << ",mean_ratio," << mean_ratio << "\n";
                csv << "approx," << idx << ",mean_modulator_weight," << mean_mod << "\n";
                csv << "approx," << idx << ",opt," << opt << "\n";
                csv << "approx," << idx << ",opt_eta," << opt_eta_w << "\n";
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        res.details["worst_mean_ratio"] = worst_mean_ratio;
        res.details["mc_runs"] = config.mc_runs;
        results.push_back(std::move(res));
    }

    // FPT success frequency against the exact k-optimal solver
    if (enabled(config, "fpt")) {
        CheckResult res;
        res.name = "fpt";
        int successes = 0, trials = 0;
        for (int idx : hard) {
            const auto& g = corpus[idx];
            if (g.n() > 10) continue;
            try {
                ExactResult opt = brute_opt(g, family, caps);
                int k = static_cast<int>(opt.solution.size());
                if (k < 1 || k > config.max_k) continue;
                ++res.instances;
                SolverCache cache;
                auto kopt = solve_exact_k(g, family, k, caps);
                for (int s = 0; s < config.fpt_seeds; ++s) {
                    RunReport rep = fpt_k_optimal(g, family, k,
                                                  derive_seed(spec.seed, 9000 + idx * 1000 + s), -1,
                                                  caps, &cache);
                    ++trials;
                    if (rep.success && kopt && rep.weight == kopt->weight) ++successes;
                    if (rep.success) {
                        if (static_cast<int>(rep.solution.size()) > k ||
                            !is_hitting_set(g, family, rep.solution, caps)) {
                            res.pass = false;
                            res.errors.push_back("instance " + std::to_string(idx) +
                                                 ": invalid fpt output");
                        }
                    }
                }
            } catch (const Error& e) {
                res.pass = false;
                res.errors.push_back("instance " + std::to_string(idx) + ": " + e.what());
            }
        }
        res.details["success_rate"] =
            trials == 0 ? 1.0 : static_cast<double>(successes) / static_cast<double>(trials);
        res.details["trials"] = trials;
        results.push_back(std::move(res));
    }

    // assemble the report
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["generator"] = generator_name(spec.generator);
    doc["seed"] = spec.seed;
    doc["count"] = spec.count;
    doc["family"] = family.name;
    doc["eta"] = eta;
    doc["instances_total"] = corpus.size();
    doc["instances_above_eta"] = hard.size();
    bool all = true;
    doc["checks"] = nlohmann::json::array();
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& res : results) {
        nlohmann::json cj;
        cj["name"] = res.name;
        cj["pass"] = res.pass;
        cj["instances"] = res.instances;
        cj["details"] = res.details;
        cj["errors"] = res.errors;
        doc["checks"].push_back(cj);
        all = all && res.pass;
        for (auto it = res.details.begin(); it != res.details.end(); ++it)
            constants[res.name + "." + it.key()] = it.value();
    }
    doc["constants"] = constants;
    doc["all_pass"] = all;

    VerificationReport report;
    report.all_pass = all;
    report.json = doc.dump(2);
    if (config.csv) report.csv = csv.str();
    return report;
}

}  // namespace fmdel
