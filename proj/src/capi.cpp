#include "fmdel.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "boundaried.hpp"
#include "exhaustive.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "minors.hpp"
#include "oracles.hpp"
#include "separations.hpp"
#include "solvers.hpp"
#include "treewidth.hpp"

using namespace fmdel;

struct fmd_graph {
    WeightedGraph g;
};

namespace {

thread_local std::string g_last_error;

fmd_status from_error(const Error& e) {
    g_last_error = e.what();
    switch (e.kind()) {
        case ErrorKind::parse: return FMD_ERR_PARSE;
        case ErrorKind::invalid: return FMD_ERR_INVALID;
        case ErrorKind::precondition: return FMD_ERR_PRECONDITION;
        case ErrorKind::cap: return FMD_ERR_CAP;
    }
    return FMD_ERR;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
fmd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return from_error(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FMD_ERR;
    } catch (...) {
        g_last_error = "unknown error";
        return FMD_ERR;
    }
}

fmd_status check_args(bool ok, const char* msg) {
    if (ok) return FMD_OK;
    g_last_error = msg;
    return FMD_ERR_INVALID;
}

CorpusSpec corpus_from_json(const nlohmann::json& doc) {
    CorpusSpec spec;
    spec.generator = parse_generator(doc.value("generator", std::string("gnp")));
    spec.n_min = doc.value("n_min", 6);
    spec.n_max = doc.value("n_max", 9);
    if (doc.contains("n")) spec.n_min = spec.n_max = doc.at("n").get<int>();
    if (doc.contains("params"))
        for (auto it = doc.at("params").begin(); it != doc.at("params").end(); ++it)
            spec.params[it.key()] = it.value().get<double>();
    if (doc.contains("weights")) {
        spec.weight_min = doc.at("weights").at(0).get<Weight>();
        spec.weight_max = doc.at("weights").at(1).get<Weight>();
    }
    spec.seed = doc.value("seed", 1ULL);
    spec.count = doc.value("count", 20);
    return spec;
}

}  // namespace

extern "C" {

const char* fmd_last_error(void) { return g_last_error.c_str(); }

void fmd_string_free(char* s) { std::free(s); }

fmd_status fmd_graph_parse(const char* text, const char* format, fmd_graph** out) {
    if (auto st = check_args(text && format && out, "null argument")) return st;
    return guarded([&] {
        GraphFormat fmt;
        std::string f = format;
        if (f == "edgelist") fmt = GraphFormat::edgelist;
        else if (f == "json") fmt = GraphFormat::json;
        else {
            g_last_error = "unknown graph format '" + f + "'";
            return FMD_ERR_INVALID;
        }
        *out = new fmd_graph{load_graph(text, fmt)};
        return FMD_OK;
    });
}

void fmd_graph_free(fmd_graph* g) { delete g; }

int fmd_graph_vertex_count(const fmd_graph* g) { return g ? g->g.n() : -1; }

long long fmd_graph_edge_count(const fmd_graph* g) { return g ? g->g.m() : -1; }

fmd_status fmd_graph_to_json(const fmd_graph* g, char** json_out) {
    if (auto st = check_args(g && json_out, "null argument")) return st;
    return guarded([&] {
        *json_out = dup_string(to_json_text(g->g));
        return FMD_OK;
    });
}

fmd_status fmd_set_cap(const char* name, int value) {
    if (auto st = check_args(name != nullptr, "null argument")) return st;
    if (value < 1) return check_args(false, "cap must be positive");
    std::string n = name;
    Caps& caps = default_caps();
    if (n == "tw_exact") caps.tw_exact = value;
    else if (n == "minor_pattern") caps.minor_pattern = value;
    else if (n == "folio_host") caps.folio_host = value;
    else if (n == "folio_h") caps.folio_h = value;
    else if (n == "exact_solver") caps.exact_solver = value;
    else if (n == "modulator_enum") caps.modulator_enum = value;
    else if (n == "exhaustive") caps.exhaustive = value;
    else return check_args(false, "unknown cap name");
    return FMD_OK;
}

fmd_status fmd_set_threads(int threads) {
    if (threads < 1) return check_args(false, "threads must be positive");
    default_caps().threads = threads;
    return FMD_OK;
}

fmd_status fmd_family(const fmd_graph* g, int eta, char** json_out) {
    if (auto st = check_args(g && json_out, "null argument")) return st;
    return guarded([&] {
        HittingFamily fam = build_hitting_family(g->g, eta);
        *json_out = dup_string(family_to_json(fam));
        return FMD_OK;
    });
}

fmd_status fmd_exhaust(const fmd_graph* g, const char* family, const int* a, size_t a_len,
                       int ell, char** json_out) {
    if (auto st = check_args(g && family && json_out && (a || a_len == 0), "null argument"))
        return st;
    return guarded([&] {
        MinorFamilySpec f = parse_family(family);
        VertexSet av(a, a + a_len);
        av = vset::normalized(std::move(av));
        ExhaustiveFamily fam = ell < 0 ? exhaustive_family(g->g, av, f)
                                       : exhaustive_family_sized(g->g, av, f, ell);
        *json_out = dup_string(exhaustive_to_json(fam));
        return FMD_OK;
    });
}

fmd_status fmd_exact(const fmd_graph* g, const char* family, int k, char** json_out) {
    if (auto st = check_args(g && family && json_out, "null argument")) return st;
    return guarded([&] {
        MinorFamilySpec f = parse_family(family);
        if (k < 0) {
            *json_out = dup_string(exact_to_json(solve_exact(g->g, f)));
            return FMD_OK;
        }
        auto res = solve_exact_k(g->g, f, k);
        if (!res) {
            *json_out = dup_string(infeasible_json());
            return FMD_INFEASIBLE;
        }
        *json_out = dup_string(exact_to_json(*res));
        return FMD_OK;
    });
}

fmd_status fmd_approx(const fmd_graph* g, const char* family, uint64_t seed, char** json_out) {
    if (auto st = check_args(g && family && json_out, "null argument")) return st;
    return guarded([&] {
        MinorFamilySpec f = parse_family(family);
        SolverCache cache;
        RunReport rep = approx_deletion(g->g, f, seed, default_caps(), &cache);
        *json_out = dup_string(run_report_to_json(rep, ReportKind::deletion));
        return FMD_OK;
    });
}

fmd_status fmd_fpt(const fmd_graph* g, const char* family, int k, uint64_t seed,
                   long long repetitions, char** json_out) {
    if (auto st = check_args(g && family && json_out, "null argument")) return st;
    return guarded([&] {
        MinorFamilySpec f = parse_family(family);
        SolverCache cache;
        RunReport rep = fpt_k_optimal(g->g, f, k, seed, repetitions, default_caps(), &cache);
        *json_out = dup_string(run_report_to_json(rep, ReportKind::fpt));
        return rep.success ? FMD_OK : FMD_INFEASIBLE;
    });
}

fmd_status fmd_verify(const char* spec_json, char** json_out, char** csv_out) {
    if (auto st = check_args(spec_json && json_out, "null argument")) return st;
    return guarded([&] {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
            g_last_error = std::string("verify spec: ") + e.what();
            return FMD_ERR_PARSE;
        }
        CorpusSpec spec = corpus_from_json(doc);
        ExperimentConfig config;
        config.family = doc.value("family", std::string("k3"));
        config.mc_runs = doc.value("mc_runs", 200);
        config.fpt_seeds = doc.value("fpt_seeds", 20);
        config.max_k = doc.value("max_k", 2);
        config.confidence = doc.value("confidence", 0.99);
        config.csv = doc.value("csv", false) || csv_out != nullptr;
        if (doc.contains("checks"))
            for (const auto& c : doc.at("checks")) config.checks.push_back(c.get<std::string>());
        VerificationReport rep = run_experiments(spec, config);
        *json_out = dup_string(rep.json);
        if (csv_out) *csv_out = dup_string(rep.csv);
        return rep.all_pass ? FMD_OK : FMD_INFEASIBLE;
    });
}

fmd_status fmd_gen(const char* spec_json, char** text_out) {
    if (auto st = check_args(spec_json && text_out, "null argument")) return st;
    return guarded([&] {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
            g_last_error = std::string("gen spec: ") + e.what();
            return FMD_ERR_PARSE;
        }
        CorpusSpec spec = corpus_from_json(doc);
        WeightedGraph g = generate_one(spec, derive_seed(spec.seed, 0));
        std::string format = doc.value("format", std::string("edgelist"));
        if (format == "edgelist") *text_out = dup_string(to_edgelist(g));
        else if (format == "json") *text_out = dup_string(to_json_text(g));
        else {
            g_last_error = "unknown output format '" + format + "'";
            return FMD_ERR_INVALID;
        }
        return FMD_OK;
    });
}

}  // extern "C"
