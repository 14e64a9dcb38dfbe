#include "ramsey/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "ramsey/errors.hpp"
#include "ramsey/random.hpp"

namespace ramsey {

std::string artifact_version() { return RAMSEY_LAB_VERSION; }

std::uint64_t graph_seed_of(std::uint64_t base) { return child_seed(base, 0); }
std::uint64_t coloring_seed_of(std::uint64_t base) { return child_seed(base, 1); }

void RemarkExperimentConfig::validate() const {
    if (n < 1) throw ParameterError("remark experiment: n must be positive");
    if (!(omega > 0.0)) throw ParameterError("remark experiment: omega must be positive");
    if (!(edge_prob() <= 1.0)) throw ParameterError("remark experiment: omega / n must not exceed 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("remark experiment: epsilon must lie in (0, 1)");
    if (strategies.empty()) throw ParameterError("remark experiment: no strategies");
    for (const auto& s : strategies) parse_strategy(s);
}

ExperimentRecord run_remark_instance(const RemarkExperimentConfig& config, const std::string& strategy,
                                     std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord r;
    r.experiment_name = "remark";
    r.n = config.n;
    r.edge_prob = config.edge_prob();
    r.omega = config.omega;
    r.epsilon = config.epsilon;
    r.exact_cutoff = config.exact_cutoff;
    r.seed = seed;
    r.version = artifact_version();

    const auto coloring = parse_strategy(strategy, coloring_seed_of(seed));
    r.strategy = strategy_name(coloring);
    const auto g = generate_gnp(config.n, r.edge_prob, graph_seed_of(seed));
    const auto cg = apply_strategy(g, coloring);
    r.num_edges = g.num_edges();

    if (config.n <= config.exact_cutoff) {
        const auto exact = longest_mono_path_exact(cg, config.exact_cutoff);
        r.blue_path = exact.blue.vertex_count;
        r.red_path = exact.red.vertex_count;
        r.exact = true;
    } else {
        r.blue_path = longest_mono_path_lower_bound(cg, EdgeColor::Blue).vertex_count;
        r.red_path = longest_mono_path_lower_bound(cg, EdgeColor::Red).vertex_count;
    }
    r.longest = std::max(r.blue_path, r.red_path);
    const double n = config.n;
    r.ratio = r.longest / n;
    r.meets_lower_bound = r.longest >= (1.0 - config.epsilon) * n / 3.0;
    r.meets_upper_bound = r.longest <= 2.0 * n / 3.0 + 1.0;
    if (const auto* split = std::get_if<SplitAdversary>(&coloring)) {
        const auto a = static_cast<std::size_t>(split_small_part_size(split->small_part_fraction, config.n));
        r.split_cap = std::max(static_cast<std::size_t>(config.n) - a, 2 * a + 1);
        r.upper_bound_applicable = std::abs(split->small_part_fraction - 1.0 / 3.0) < 1e-3 && r.edge_prob >= 0.5;
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<ExperimentRecord> run_remark_experiment(const RemarkExperimentConfig& config) {
    config.validate();
    const std::size_t jobs = config.strategies.size() * config.seeds.size();
    std::vector<ExperimentRecord> records(jobs);
    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));

    // Job j writes only slot j, so the output order is fixed by the config.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
            try {
                const auto& strategy = config.strategies[j / config.seeds.size()];
                records[j] = run_remark_instance(config, strategy, config.seeds[j % config.seeds.size()]);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

Json to_json(const ExperimentRecord& r) {
    return Json{
        {"experiment_name", r.experiment_name},
        {"parameters",
         {{"n", r.n},
          {"p", r.edge_prob},
          {"omega", r.omega},
          {"epsilon", r.epsilon},
          {"strategy", r.strategy},
          {"exact_cutoff", r.exact_cutoff}}},
        {"seed", r.seed},
        {"outcome",
         {{"num_edges", r.num_edges},
          {"blue_path", r.blue_path},
          {"red_path", r.red_path},
          {"exact", r.exact},
          {"longest", r.longest},
          {"ratio", r.ratio},
          {"meets_lower_bound", r.meets_lower_bound},
          {"meets_upper_bound", r.meets_upper_bound},
          {"upper_bound_applicable", r.upper_bound_applicable},
          {"split_cap", r.split_cap}}},
        {"wall_time", r.wall_time},
        {"artifact_version", r.version},
    };
}

std::string csv_header() {
    return "experiment_name,n,p,omega,epsilon,strategy,exact_cutoff,seed,num_edges,blue_path,red_path,exact,"
           "longest,ratio,meets_lower_bound,meets_upper_bound,upper_bound_applicable,split_cap,wall_time,"
           "artifact_version";
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::ostringstream out;
    out.precision(17);
    out << r.experiment_name << ',' << r.n << ',' << r.edge_prob << ',' << r.omega << ',' << r.epsilon << ','
        << r.strategy << ',' << r.exact_cutoff << ',' << r.seed << ',' << r.num_edges << ',' << r.blue_path
        << ',' << r.red_path << ',' << r.exact << ',' << r.longest << ',' << r.ratio << ','
        << r.meets_lower_bound << ',' << r.meets_upper_bound << ',' << r.upper_bound_applicable << ','
        << r.split_cap << ',' << r.wall_time << ',' << r.version;
    return out.str();
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const PathResult& p) { return Json{{"vertex_count", p.vertex_count}, {"witness", p.witness}}; }

Json to_json(const ExpansionReport& r) {
    Json j{{"set_size", r.set_size}, {"verdict", verdict_name(r.verdict)}};
    if (r.witness) j["witness"] = {{"S", to_json(r.witness->first)}, {"T", to_json(r.witness->second)}};
    else j["witness"] = nullptr;
    if (r.verdict == ExpansionReport::Verdict::HoldsExact || r.verdict == ExpansionReport::Verdict::FailsExact) {
        j["failing_pairs"] = r.failing_pairs;
        j["total_pairs"] = r.total_pairs;
    } else {
        j["trials"] = r.trials;
        j["failures"] = r.failures;
    }
    return j;
}

Json to_json(const ProofConstants& k) {
    return Json{{"c", k.c}, {"d", k.d}, {"alpha", k.alpha}, {"f", k.f}, {"objective", k.objective}, {"margin", k.margin}};
}

Json to_json(const PaperConstantsReport& r) {
    return Json{{"c", r.constants.c},
                {"d", r.constants.d},
                {"alpha", r.constants.alpha},
                {"f", r.constants.f},
                {"objective", r.constants.objective},
                {"f_below_claimed_ceiling", r.entropy_ok},
                {"objective_below_claimed_bound", r.objective_ok},
                {"claimed_ceiling", kClaimedEntropyCeiling},
                {"claimed_bound", kClaimedBound},
                {"lower_bound_constant", r.lower_bound_constant},
                {"pass", r.pass()}};
}

namespace {

Json sizes_json(const ProfileSizes& s) {
    return Json{{"x", s.x}, {"y", s.y}, {"x_prime", s.x_prime}, {"y_prime", s.y_prime}};
}

}  // namespace

Json to_json(const SeparatorOutcome& o) {
    if (const auto* p = std::get_if<MonoPath>(&o))
        return Json{{"outcome", "mono_path"}, {"vertex_count", p->vertices.size()}, {"path", p->vertices}};
    const auto& s = std::get<Separator>(o);
    return Json{{"outcome", "separator"},
                {"set_size", s.u_set.size()},
                {"U", to_json(s.u_set)},
                {"W", to_json(s.w_set)},
                {"steps", s.trace.size()}};
}

Json to_json(const ArrowVerdict& v) {
    if (const auto* p = std::get_if<MonoPathFound>(&v))
        return Json{{"verdict", "mono_path_found"},
                    {"color", color_name(p->color)},
                    {"vertex_count", p->path.size()},
                    {"path", p->path}};
    const auto& c = std::get<ProofContradiction>(v);
    return Json{{"verdict", "proof_contradiction"},
                {"pair", large_pair_name(c.pair)},
                {"threshold", c.threshold},
                {"edge_count", c.edge_count},
                {"profile", sizes_json(c.profile)},
                {"first", to_json(c.first)},
                {"second", to_json(c.second)}};
}

}  // namespace ramsey
