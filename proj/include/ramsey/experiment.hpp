#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/constants.hpp"
#include "ramsey/expansion.hpp"
#include "ramsey/pathfinder.hpp"
#include "ramsey/separator.hpp"
#include "ramsey/theorem.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

std::string artifact_version();

// Seeds used for one (base seed) instance: the graph and its coloring draw
// from independent child streams, so every strategy colors the same graph.
std::uint64_t graph_seed_of(std::uint64_t base);
std::uint64_t coloring_seed_of(std::uint64_t base);

// Monochromatic paths in sparse random graphs: for each (strategy, seed),
// color G(n, omega/n) and measure the longest monochromatic path.
struct RemarkExperimentConfig {
    int n = 0;
    double omega = 0;  // edge probability is omega / n
    double epsilon = 0.1;
    std::vector<std::string> strategies;
    std::vector<std::uint64_t> seeds;
    int exact_cutoff = kDefaultExactCutoff;
    unsigned workers = 0;  // 0: hardware concurrency

    double edge_prob() const { return omega / n; }
    void validate() const;
};

struct ExperimentRecord {
    std::string experiment_name;
    // parameters
    int n = 0;
    double edge_prob = 0;
    double omega = 0;
    double epsilon = 0;
    std::string strategy;
    int exact_cutoff = 0;
    std::uint64_t seed = 0;
    // outcome
    std::size_t num_edges = 0;
    std::size_t blue_path = 0;
    std::size_t red_path = 0;
    bool exact = false;  // path lengths are exact maxima, not lower bounds
    std::size_t longest = 0;
    double ratio = 0;  // longest / n
    bool meets_lower_bound = false;         // longest >= (1 - epsilon) n / 3
    bool meets_upper_bound = false;         // longest <= 2n/3 + 1
    bool upper_bound_applicable = false;    // split:1/3 on a near-complete graph
    std::size_t split_cap = 0;              // max(|B|, 2|A| + 1) for split strategies, else 0
    double wall_time = 0;  // seconds
    std::string version;
};

ExperimentRecord run_remark_instance(const RemarkExperimentConfig& config, const std::string& strategy,
                                     std::uint64_t seed);

// Records sorted by (strategy position in config, seed position in config),
// independent of how the jobs were scheduled.
std::vector<ExperimentRecord> run_remark_experiment(const RemarkExperimentConfig& config);

Json to_json(const ExperimentRecord& r);
std::string csv_header();
std::string to_csv_row(const ExperimentRecord& r);

Json to_json(const VertexSet& s);
Json to_json(const PathResult& p);
Json to_json(const ExpansionReport& r);
Json to_json(const ProofConstants& k);
Json to_json(const PaperConstantsReport& r);
Json to_json(const SeparatorOutcome& o);
Json to_json(const ArrowVerdict& v);

}  // namespace ramsey
