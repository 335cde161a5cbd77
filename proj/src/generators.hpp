#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"

namespace fmdel {

enum class GeneratorKind { gnp, grid_plus_noise, disjoint_cliques, trees_plus_edges };

GeneratorKind parse_generator(const std::string& name);
std::string generator_name(GeneratorKind g);

struct CorpusSpec {
    GeneratorKind generator = GeneratorKind::gnp;
    int n_min = 6;
    int n_max = 9;
    std::map<std::string, double> params;  // generator-specific knobs
    Weight weight_min = 1;
    Weight weight_max = 5;
    std::uint64_t seed = 1;
    int count = 20;
};

/// Deterministic given the description. Instance i uses the derived seed (seed, i).
std::vector<WeightedGraph> generate_corpus(const CorpusSpec& spec);

WeightedGraph generate_one(const CorpusSpec& spec, std::uint64_t instance_seed);

}  // namespace fmdel
