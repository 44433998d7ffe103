#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "refute/conjecture.hpp"
#include "refute/kernels.hpp"
#include "refute/search.hpp"

// Command-line front end.
//   refute --conjecture ID --algorithm NAME [...]   search for a counter-example
//   refute verify FILE --conjecture ID [...]        check a graph from a file
//   refute bench [...]                              seeded reproduction sweep
//   refute list                                     registry summary
// Exit codes: 0 = refuted, 1 = not refuted / holds, 2 = error.

namespace {

using nlohmann::json;
using namespace refute;

constexpr int kExitRefuted = 0;
constexpr int kExitNotRefuted = 1;
constexpr int kExitError = 2;

int fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitError;
}

json graph_json(const Graph& g) {
    return json{{"n", g.order()},
                {"m", g.edge_count()},
                {"edges", serialize_edge_list(g)}};
}

json report_json(const ScoreReport& r) {
    if (!r.defined) return json{{"defined", false}};
    return json{{"defined", true},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"score", r.score}};
}

std::vector<std::string> history_strings(const std::vector<Move>& history) {
    std::vector<std::string> out;
    out.reserve(history.size());
    for (const Move& m : history) out.push_back(move_to_string(m));
    return out;
}

struct RunConfig {
    std::string conjecture_id;
    std::string algorithm_name;
    int target = -1;  // -1 = conjecture default
    double budget = 900.0;
    std::uint64_t seed = 1;
    std::string range = "diff";
    bool relax_class = false;
    std::string output = "edges";  // edges | dot | json
    std::uint64_t max_evals = 0;
    // optional tuning; negative/zero-marker means "leave default"
    int level = -1;
    int playouts = -1;
    double ratio = -1.0;
    int iterations = -1;
    double alpha = -1.0;
    double exploration = -1.0;
    int grave_ref = -1;
    int width = -1;
};

int run_command(const RunConfig& cfg) {
    const Conjecture* conj = find_conjecture(cfg.conjecture_id);
    if (!conj) return fail("unknown conjecture '" + cfg.conjecture_id + "'");
    const std::optional<Algorithm> algo =
        algorithm_from_name(cfg.algorithm_name);
    if (!algo) return fail("unknown algorithm '" + cfg.algorithm_name + "'");
    const std::optional<RangeDef> range = range_def_from_name(cfg.range);
    if (!range) return fail("unknown range definition '" + cfg.range + "'");

    const int target = cfg.target > 0 ? cfg.target : conj->default_target;
    if (target < 1 || target > 1000)
        return fail("target must be between 1 and 1000");

    GameRules rules;
    rules.build_class =
        cfg.relax_class ? GraphClass::Any : conj->accept_class;
    rules.target = target;
    rules.min_stop = conj->min_size;

    ConjectureOptions copts;
    copts.range = *range;

    SearchParams params;
    params.budget_seconds = cfg.budget;
    params.max_evaluations = cfg.max_evals;
    if (cfg.level > 0) {
        params.nmcs_level = cfg.level;
        params.lnmcs_level = cfg.level;
        params.nrpa_level = cfg.level;
    }
    if (cfg.playouts > 0) params.lnmcs_playouts = cfg.playouts;
    if (cfg.ratio >= 0.0) params.lnmcs_ratio = cfg.ratio;
    if (cfg.iterations > 0) params.nrpa_iterations = cfg.iterations;
    if (cfg.alpha >= 0.0) params.nrpa_alpha = cfg.alpha;
    if (cfg.exploration >= 0.0) params.mcts_exploration = cfg.exploration;
    if (cfg.grave_ref > 0) params.grave_ref = cfg.grave_ref;
    if (cfg.width > 0) params.beam_width = cfg.width;

    const SearchOutcome out =
        run_search(*algo, *conj, rules, copts, params, cfg.seed);

    if (cfg.output == "json") {
        json doc{{"schema", 1},
                 {"mode", "run"},
                 {"conjecture", conj->id},
                 {"statement", conj->statement},
                 {"algorithm", cfg.algorithm_name},
                 {"seed", cfg.seed},
                 {"target", target},
                 {"budget_seconds", cfg.budget},
                 {"range", range_def_name(*range)},
                 {"relax_class", cfg.relax_class},
                 {"backend", std::string(kernels::backend_name())},
                 {"refuted", out.refuted},
                 {"halt_reason", out.halt_reason},
                 {"evaluations", out.evaluations},
                 {"evaluations_at_found", out.evaluations_at_found},
                 {"elapsed_seconds", out.elapsed_seconds},
                 {"frontier_discards", out.frontier_discards}};
        if (out.graph.order() > 0) {
            doc["graph"] = graph_json(out.graph);
            doc["report"] = report_json(out.report);
            doc["best_score"] = out.best_score;
            doc["history"] = history_strings(out.history);
        } else {
            doc["graph"] = nullptr;
            doc["report"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
        return out.refuted ? kExitRefuted : kExitNotRefuted;
    }

    if (cfg.output == "dot") {
        std::cout << "// conjecture " << conj->id << ", algorithm "
                  << cfg.algorithm_name << ", seed " << cfg.seed << "\n"
                  << "// " << (out.refuted ? "refuted" : "not refuted")
                  << "\n";
        if (out.graph.order() > 0) std::cout << to_dot(out.graph);
        return out.refuted ? kExitRefuted : kExitNotRefuted;
    }

    std::cout << "conjecture: " << conj->id << " (" << conj->statement
              << ")\n"
              << "algorithm: " << cfg.algorithm_name << "  seed: " << cfg.seed
              << "  target: " << target << "  budget: " << cfg.budget
              << "s\n"
              << "range: " << range_def_name(*range)
              << "  relax-class: " << (cfg.relax_class ? "yes" : "no")
              << "  backend: " << kernels::backend_name() << "\n"
              << "result: " << (out.refuted ? "REFUTED" : "NOT REFUTED")
              << "\n"
              << "halt: " << out.halt_reason
              << "  evaluations: " << out.evaluations;
    if (out.refuted)
        std::cout << " (counterexample at " << out.evaluations_at_found
                  << ")";
    std::cout << "  elapsed: " << out.elapsed_seconds << "s\n";
    if (out.graph.order() > 0) {
        std::cout << "n: " << out.graph.order()
                  << "  m: " << out.graph.edge_count() << "\n";
        if (out.report.defined) {
            std::cout << "lhs: " << out.report.lhs
                      << "  rhs: " << out.report.rhs
                      << "  score: " << out.report.score << "\n";
        }
        std::cout << "edges: " << serialize_edge_list(out.graph) << "\n";
    } else {
        std::cout << "no state with a defined score was seen\n";
    }
    return out.refuted ? kExitRefuted : kExitNotRefuted;
}

int verify_command(const std::string& path, const std::string& conjecture_id,
                   const std::string& range_name, bool as_json) {
    const Conjecture* conj = find_conjecture(conjecture_id);
    if (!conj) return fail("unknown conjecture '" + conjecture_id + "'");
    const std::optional<RangeDef> range = range_def_from_name(range_name);
    if (!range) return fail("unknown range definition '" + range_name + "'");

    std::ifstream in(path);
    if (!in) return fail("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();

    Graph g;
    try {
        g = parse_edge_list(buffer.str());
    } catch (const ParseError& e) {
        return fail(std::string("parse: ") + e.what());
    }

    ConjectureOptions copts;
    copts.range = *range;
    const ScoreReport report = score(*conj, g, copts);
    const bool class_ok = satisfies_class(g, conj->accept_class);
    const bool connected_ok = is_connected(g);
    const bool size_ok = g.order() >= conj->min_size;
    const bool refuted = is_counterexample(*conj, g, copts);

    if (as_json) {
        json doc{{"schema", 1},
                 {"mode", "verify"},
                 {"conjecture", conj->id},
                 {"statement", conj->statement},
                 {"file", path},
                 {"range", range_def_name(*range)},
                 {"graph", graph_json(g)},
                 {"report", report_json(report)},
                 {"checks",
                  json{{"class", class_ok},
                       {"connected", connected_ok},
                       {"min_size", size_ok}}},
                 {"refuted", refuted}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "conjecture: " << conj->id << " (" << conj->statement
                  << ")\n"
                  << "file: " << path << "\n"
                  << "n: " << g.order() << "  m: " << g.edge_count()
                  << "  range: " << range_def_name(*range) << "\n";
        if (report.defined) {
            std::cout << "lhs: " << report.lhs << "  rhs: " << report.rhs
                      << "  score: " << report.score << "\n";
        } else {
            std::cout << "score: undefined on this graph\n";
        }
        std::cout << "checks: class " << (class_ok ? "ok" : "FAILED")
                  << ", connected " << (connected_ok ? "ok" : "FAILED")
                  << ", min-size " << (size_ok ? "ok" : "FAILED") << "\n"
                  << "verdict: " << (refuted ? "REFUTED" : "HOLDS") << "\n";
    }
    return refuted ? kExitRefuted : kExitNotRefuted;
}

struct BenchJob {
    std::string conjecture_id;
    Algorithm algorithm;
    std::uint64_t seed;
};

int bench_threads(std::size_t jobs) {
    if (const char* env = std::getenv("REFUTE_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t fallback = hw ? hw : 1;
    return static_cast<int>(std::min(jobs, fallback));
}

int bench_command(std::vector<std::string> conjecture_ids,
                  std::vector<std::string> algorithm_names, int runs,
                  double budget, std::uint64_t seed0) {
    // default sweep mirrors the fast reproduction cells
    std::vector<std::pair<std::string, std::string>> pairs;
    if (conjecture_ids.empty() && algorithm_names.empty()) {
        pairs = {{"graffiti-29", "nmcs"},  {"graffiti-29", "gbfs"},
                 {"graffiti-29", "lnmcs"}, {"graffiti-30", "grave"},
                 {"graffiti-30", "rave"},  {"graffiti-301", "nmcs"},
                 {"graffiti-301", "gbfs"}, {"graffiti-139", "gbfs"},
                 {"graffiti-289", "gbfs"}, {"graffiti-289", "nrpa"},
                 {"graffiti-197", "nrpa"}, {"graffiti-197", "nmcs"},
                 {"graffiti-197", "gbfs"}, {"graffiti-197", "beam"}};
    } else {
        if (conjecture_ids.empty())
            for (const Conjecture& c : all_conjectures())
                conjecture_ids.push_back(c.id);
        if (algorithm_names.empty())
            for (Algorithm a : all_algorithms())
                algorithm_names.emplace_back(algorithm_name(a));
        for (const std::string& c : conjecture_ids)
            for (const std::string& a : algorithm_names)
                pairs.emplace_back(c, a);
    }

    std::vector<BenchJob> jobs;
    for (const auto& [cid, aname] : pairs) {
        if (!find_conjecture(cid)) return fail("unknown conjecture '" + cid + "'");
        const std::optional<Algorithm> algo = algorithm_from_name(aname);
        if (!algo) return fail("unknown algorithm '" + aname + "'");
        for (int r = 0; r < runs; ++r)
            jobs.push_back({cid, *algo, seed0 + static_cast<std::uint64_t>(r)});
    }

    std::vector<SearchOutcome> results(jobs.size());
    std::atomic<std::size_t> next{0};
    const int workers = bench_threads(jobs.size());
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const BenchJob& job = jobs[i];
            const Conjecture* conj = find_conjecture(job.conjecture_id);
            GameRules rules{conj->accept_class, conj->default_target,
                            conj->min_size};
            SearchParams params;
            params.budget_seconds = budget;
            results[i] = run_search(job.algorithm, *conj, rules, {}, params,
                                    job.seed);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::cout << "bench: " << jobs.size() << " runs, " << workers
              << " worker(s), budget " << budget << "s per run\n";
    std::size_t i = 0;
    while (i < jobs.size()) {
        const std::string cid = jobs[i].conjecture_id;
        const Algorithm algo = jobs[i].algorithm;
        int refuted_count = 0;
        double best_time = -1.0;
        for (; i < jobs.size() && jobs[i].conjecture_id == cid &&
               jobs[i].algorithm == algo;
             ++i) {
            const SearchOutcome& out = results[i];
            std::cout << cid << " " << algorithm_name(algo)
                      << " seed=" << jobs[i].seed << " "
                      << (out.refuted ? "refuted" : "not-refuted")
                      << " evals=" << out.evaluations << " time="
                      << out.elapsed_seconds << "s\n";
            if (out.refuted) {
                ++refuted_count;
                if (best_time < 0 || out.elapsed_seconds < best_time)
                    best_time = out.elapsed_seconds;
            }
        }
        std::cout << "summary " << cid << " " << algorithm_name(algo) << ": "
                  << refuted_count << "/" << runs << " refuted";
        if (refuted_count > 0) std::cout << ", fastest " << best_time << "s";
        std::cout << "\n";
    }
    return kExitRefuted;
}

int list_command() {
    for (const Conjecture& c : all_conjectures()) {
        std::cout << c.id << "\n  class: " << class_name(c.accept_class)
                  << "  min-size: " << c.min_size
                  << "  default-target: " << c.default_target << "\n  "
                  << c.statement << "\n";
    }
    return kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counter-example search for spectral graph conjectures"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    app.add_option("--conjecture", cfg.conjecture_id,
                   "conjecture id (see `refute list`)");
    app.add_option("--algorithm", cfg.algorithm_name,
                   "nmcs|lnmcs|nrpa|uct|rave|grave|gbfs|beam");
    app.add_option("--target", cfg.target, "construction size limit");
    app.add_option("--budget", cfg.budget, "time budget in seconds");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--range", cfg.range,
                   "spectrum range definition: diff|distinct-count");
    app.add_flag("--relax-class", cfg.relax_class,
                 "build in the unrestricted class, accept per conjecture");
    app.add_option("--output", cfg.output, "edges|dot|json");
    app.add_option("--max-evals", cfg.max_evals,
                   "stop after this many evaluations (0 = no cap)");
    app.add_option("--level", cfg.level, "nesting level (nmcs/lnmcs/nrpa)");
    app.add_option("--playouts", cfg.playouts, "lnmcs pre-score playouts");
    app.add_option("--ratio", cfg.ratio, "lnmcs pruning ratio");
    app.add_option("--iterations", cfg.iterations, "nrpa iterations per level");
    app.add_option("--alpha", cfg.alpha, "nrpa adaptation rate");
    app.add_option("--exploration", cfg.exploration, "uct/rave/grave constant");
    app.add_option("--grave-ref", cfg.grave_ref, "grave visit threshold");
    app.add_option("--width", cfg.width, "beam width");

    CLI::App* verify = app.add_subcommand("verify", "check a graph file");
    std::string verify_file;
    std::string verify_conjecture;
    std::string verify_range = "diff";
    bool verify_json = false;
    verify->add_option("file", verify_file, "edge-list file")->required();
    verify->add_option("--conjecture", verify_conjecture, "conjecture id")
        ->required();
    verify->add_option("--range", verify_range, "diff|distinct-count");
    verify->add_flag("--json", verify_json, "emit a JSON report");

    CLI::App* bench = app.add_subcommand("bench", "seeded reproduction sweep");
    std::vector<std::string> bench_conjectures;
    std::vector<std::string> bench_algorithms;
    int bench_runs = 3;
    double bench_budget = 60.0;
    std::uint64_t bench_seed = 1;
    bench->add_option("--conjecture", bench_conjectures,
                      "conjecture ids (default: reproduction set)");
    bench->add_option("--algorithm", bench_algorithms,
                      "algorithms (default: reproduction set)");
    bench->add_option("--runs", bench_runs, "seeded runs per pair");
    bench->add_option("--budget", bench_budget, "seconds per run");
    bench->add_option("--seed", bench_seed, "first seed");

    CLI::App* list = app.add_subcommand("list", "show the conjecture registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (verify->parsed())
            return verify_command(verify_file, verify_conjecture, verify_range,
                                  verify_json);
        if (bench->parsed())
            return bench_command(bench_conjectures, bench_algorithms,
                                 bench_runs, bench_budget, bench_seed);
        if (list->parsed()) return list_command();

        if (cfg.conjecture_id.empty() || cfg.algorithm_name.empty())
            return fail(
                "--conjecture and --algorithm are required (or use a "
                "subcommand; --help for usage)");
        return run_command(cfg);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}
