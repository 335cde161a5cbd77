// fmdel command line: family / exhaust / approx / fpt / exact / verify / gen.
// Thin adapter over the C API; all algorithmic work happens in the library.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmdel.h"

namespace {

int exit_code_for(fmd_status st) {
    if (st == FMD_OK) return 0;
    if (st == FMD_INFEASIBLE) return 2;
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(1);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string detect_format(const std::string& path, const std::string& flag) {
    if (!flag.empty()) return flag;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return "json";
    return "edgelist";
}

struct GraphHandle {
    fmd_graph* g = nullptr;
    ~GraphHandle() { fmd_graph_free(g); }
};

int load_graph_arg(const std::string& path, const std::string& format, GraphHandle& out) {
    std::string text = read_file(path);
    fmd_status st = fmd_graph_parse(text.c_str(), detect_format(path, format).c_str(), &out.g);
    if (st != FMD_OK) {
        std::cerr << "error: " << fmd_last_error() << "\n";
        return exit_code_for(st);
    }
    return 0;
}

/// Family flag: preset name, inline JSON, or a path to a family JSON file.
std::string resolve_family(const std::string& flag) {
    if (!flag.empty() && flag[0] != '{') {
        std::ifstream probe(flag);
        if (probe.good()) return read_file(flag);
    }
    return flag;
}

int emit(const char* text, const std::string& out_path) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload.push_back('\n');
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 1;
        }
        out << payload;
    }
    return 0;
}

std::uint64_t pick_seed(const CLI::Option* opt, std::uint64_t given) {
    if (opt->count() > 0) return given;
    std::uint64_t seed =
        static_cast<std::uint64_t>(std::time(nullptr)) * 2654435761ULL ^ 0x9e3779b97f4a7c15ULL;
    std::cerr << "seed not given; using generated seed " << seed << " (pass --seed " << seed
              << " to replay)\n";
    return seed;
}

int family_eta(const std::string& family_spec) {
    if (family_spec == "k3") return 1;
    if (family_spec == "k4" || family_spec == "outerplanar") return 2;
    if (!family_spec.empty() && family_spec[0] == '{') {
        try {
            auto doc = nlohmann::json::parse(family_spec);
            if (doc.contains("eta")) return doc.at("eta").get<int>();
        } catch (...) {
        }
    }
    return -1;
}

void apply_env_caps() {
    struct {
        const char* env;
        const char* cap;
    } names[] = {
        {"FMDEL_TW_CAP", "tw_exact"},         {"FMDEL_PATTERN_CAP", "minor_pattern"},
        {"FMDEL_FOLIO_CAP", "folio_host"},    {"FMDEL_FOLIO_H_CAP", "folio_h"},
        {"FMDEL_EXACT_CAP", "exact_solver"},  {"FMDEL_MODULATOR_CAP", "modulator_enum"},
        {"FMDEL_EXHAUST_CAP", "exhaustive"},
    };
    for (const auto& [env, cap] : names)
        if (const char* val = std::getenv(env)) fmd_set_cap(cap, std::atoi(val));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted F-minor deletion toolkit"};
    app.require_subcommand(1);
    apply_env_caps();

    std::string graph_path, graph_format, family = "k3", json_out;
    std::uint64_t seed = 0;
    int eta = -1, k = -1, ell = -1, threads = 1;
    long long reps = -1;
    std::vector<int> protrusion;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph) {
            cmd->add_option("--graph", graph_path, "input graph file")->required();
            cmd->add_option("--format", graph_format, "edgelist or json (default: by extension)");
        }
        cmd->add_option("--json-out", json_out, "write the JSON result to this path");
        cmd->add_option("--threads", threads, "worker threads for repetition loops");
        return cmd;
    };

    auto* cmd_family = add_common(app.add_subcommand("family", "modulator hitting family"), true);
    cmd_family->add_option("--eta", eta, "treewidth bound")->required();

    auto* cmd_exhaust =
        add_common(app.add_subcommand("exhaust", "exhaustive family over a protrusion"), true);
    cmd_exhaust->add_option("--family", family, "family preset or file");
    cmd_exhaust->add_option("--vertices", protrusion, "protrusion vertex ids")->required();
    cmd_exhaust->add_option("--ell", ell, "size budget for the sized variant");

    auto* cmd_exact = add_common(app.add_subcommand("exact", "exact minimum-weight solver"), true);
    cmd_exact->add_option("--family", family, "family preset or file");
    cmd_exact->add_option("--k", k, "restrict to solutions with at most k vertices");

    auto* cmd_approx =
        add_common(app.add_subcommand("approx", "randomized constant-factor approximation"), true);
    cmd_approx->add_option("--family", family, "family preset or file");
    cmd_approx->add_option("--eta", eta, "treewidth bound (must match the family)");
    auto* approx_seed = cmd_approx->add_option("--seed", seed, "rng seed");

    auto* cmd_fpt = add_common(app.add_subcommand("fpt", "randomized k-optimal search"), true);
    cmd_fpt->add_option("--family", family, "family preset or file");
    cmd_fpt->add_option("--k", k, "solution size budget")->required();
    auto* fpt_seed = cmd_fpt->add_option("--seed", seed, "rng seed");
    cmd_fpt->add_option("--reps", reps, "repetition count (default 4^k capped)");

    auto* cmd_verify = add_common(app.add_subcommand("verify", "verification harness"), false);
    std::string gen_name = "gnp";
    int n_min = 6, n_max = 9, count = 20, mc_runs = 200, fpt_seeds = 20, max_k = 2;
    double p_param = 0.4;
    std::vector<std::string> checks;
    std::string csv_out, spec_file;
    cmd_verify->add_option("--spec", spec_file, "corpus spec JSON file (overrides flags)");
    cmd_verify->add_option("--family", family, "family preset or file");
    cmd_verify->add_option("--generator", gen_name, "gnp|grid_plus_noise|disjoint_cliques|trees_plus_edges");
    cmd_verify->add_option("--n-min", n_min, "minimum vertex count");
    cmd_verify->add_option("--n-max", n_max, "maximum vertex count");
    cmd_verify->add_option("--count", count, "corpus size");
    cmd_verify->add_option("--p", p_param, "generator edge probability / noise");
    cmd_verify->add_option("--mc-runs", mc_runs, "Monte-Carlo runs per instance");
    cmd_verify->add_option("--fpt-seeds", fpt_seeds, "fpt trials per instance");
    cmd_verify->add_option("--max-k", max_k, "fpt budget cap");
    cmd_verify->add_option("--checks", checks, "subset of checks to run");
    cmd_verify->add_option("--csv-out", csv_out, "write the per-instance CSV summary here");
    auto* verify_seed = cmd_verify->add_option("--seed", seed, "corpus seed");

    auto* cmd_gen = add_common(app.add_subcommand("gen", "generate an instance"), false);
    std::string out_format = "edgelist";
    int gen_n = -1;
    cmd_gen->add_option("--generator", gen_name, "generator name");
    cmd_gen->add_option("--n", gen_n, "vertex count (overrides the range)");
    cmd_gen->add_option("--n-min", n_min, "minimum vertex count");
    cmd_gen->add_option("--n-max", n_max, "maximum vertex count");
    cmd_gen->add_option("--p", p_param, "generator edge probability / noise");
    std::vector<long long> weight_range{1, 5};
    cmd_gen->add_option("--weights", weight_range, "weight range lo hi")->expected(2);
    cmd_gen->add_option("--out-format", out_format, "edgelist or json");
    auto* gen_seed = cmd_gen->add_option("--seed", seed, "instance seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
    }
    fmd_set_threads(threads < 1 ? 1 : threads);

    family = resolve_family(family);

    if (cmd_family->parsed()) {
        GraphHandle g;
        if (int rc = load_graph_arg(graph_path, graph_format, g)) return rc;
        char* json = nullptr;
        fmd_status st = fmd_family(g.g, eta, &json);
        if (st != FMD_OK) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        fmd_string_free(json);
        return rc;
    }

    if (cmd_exhaust->parsed()) {
        GraphHandle g;
        if (int rc = load_graph_arg(graph_path, graph_format, g)) return rc;
        char* json = nullptr;
        fmd_status st = fmd_exhaust(g.g, family.c_str(), protrusion.data(), protrusion.size(),
                                    ell, &json);
        if (st != FMD_OK) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        fmd_string_free(json);
        return rc;
    }

    if (cmd_exact->parsed()) {
        GraphHandle g;
        if (int rc = load_graph_arg(graph_path, graph_format, g)) return rc;
        char* json = nullptr;
        fmd_status st = fmd_exact(g.g, family.c_str(), k, &json);
        if (st != FMD_OK && st != FMD_INFEASIBLE) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        fmd_string_free(json);
        return rc != 0 ? rc : exit_code_for(st);
    }

    if (cmd_approx->parsed()) {
        GraphHandle g;
        if (int rc = load_graph_arg(graph_path, graph_format, g)) return rc;
        int feta = family_eta(family);
        if (eta >= 0 && feta >= 0 && eta != feta) {
            std::cerr << "error: --eta " << eta << " is inconsistent with the family (eta "
                      << feta << ")\n";
            return 1;
        }
        std::uint64_t s = pick_seed(approx_seed, seed);
        char* json = nullptr;
        fmd_status st = fmd_approx(g.g, family.c_str(), s, &json);
        if (st != FMD_OK) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        fmd_string_free(json);
        return rc;
    }

    if (cmd_fpt->parsed()) {
        GraphHandle g;
        if (int rc = load_graph_arg(graph_path, graph_format, g)) return rc;
        std::uint64_t s = pick_seed(fpt_seed, seed);
        char* json = nullptr;
        fmd_status st = fmd_fpt(g.g, family.c_str(), k, s, reps, &json);
        if (st != FMD_OK && st != FMD_INFEASIBLE) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        fmd_string_free(json);
        return rc != 0 ? rc : exit_code_for(st);
    }

    if (cmd_verify->parsed()) {
        std::uint64_t s = pick_seed(verify_seed, seed);
        nlohmann::json spec;
        if (!spec_file.empty()) {
            spec = nlohmann::json::parse(read_file(spec_file));
            if (!spec.contains("seed")) spec["seed"] = s;
        } else {
            spec = {{"generator", gen_name}, {"n_min", n_min},   {"n_max", n_max},
                    {"count", count},        {"seed", s},        {"family", family},
                    {"mc_runs", mc_runs},    {"fpt_seeds", fpt_seeds}, {"max_k", max_k},
                    {"params", {{"p", p_param}, {"noise", p_param}}}};
            if (!checks.empty()) spec["checks"] = checks;
            spec["csv"] = !csv_out.empty();
        }
        std::string spec_text = spec.dump();
        char* json = nullptr;
        char* csv = nullptr;
        fmd_status st = fmd_verify(spec_text.c_str(), &json, csv_out.empty() ? nullptr : &csv);
        if (st != FMD_OK && st != FMD_INFEASIBLE) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(json, json_out);
        if (csv) {
            std::ofstream out(csv_out, std::ios::binary);
            out << csv;
            fmd_string_free(csv);
        }
        fmd_string_free(json);
        if (st == FMD_INFEASIBLE) std::cerr << "verify: some checks failed\n";
        return rc != 0 ? rc : exit_code_for(st);
    }

    if (cmd_gen->parsed()) {
        std::uint64_t s = pick_seed(gen_seed, seed);
        nlohmann::json spec = {{"generator", gen_name},
                               {"n_min", n_min},
                               {"n_max", n_max},
                               {"seed", s},
                               {"weights", weight_range},
                               {"format", out_format},
                               {"params", {{"p", p_param}, {"noise", p_param}}}};
        if (gen_n > 0) spec["n"] = gen_n;
        std::string spec_text = spec.dump();
        char* text = nullptr;
        fmd_status st = fmd_gen(spec_text.c_str(), &text);
        if (st != FMD_OK) {
            std::cerr << "error: " << fmd_last_error() << "\n";
            return exit_code_for(st);
        }
        int rc = emit(text, json_out);
        fmd_string_free(text);
        return rc;
    }

    return 1;
}
