// matdom: matrix-domination solvers, verifier, benchmark runner and renderer.
//
// Exit codes: 0 success, 1 domain error, 2 usage error; `verify` exits 0 on
// an accepted certificate and 3 on a rejected one.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matdom/baselines.hpp"
#include "matdom/core.hpp"
#include "matdom/ga.hpp"
#include "matdom/harness.hpp"
#include "matdom/io.hpp"
#include "matdom/render.hpp"
#include "matdom/verify.hpp"
#include "matdom/woc.hpp"

namespace {

using namespace matdom;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(out_path, text);
    }
}

struct GenerateArgs {
    int n = 0;
    int m = 0; // 0: square
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    gen::GenSpec spec;
    spec.rows = args.n;
    spec.cols = args.m > 0 ? args.m : args.n;
    spec.density = args.density;
    spec.seed = args.seed;
    emit(io::instance_to_text(gen::random_instance(spec)), args.out);
    return 0;
}

struct SolveArgs {
    std::string in;
    int n = 0;
    std::string method = "ga";
    std::string model = "adjacency";
    int generations = 300;
    int population = 100;
    double mutation_rate = 0.2;
    double crossover_rate = 0.9;
    int tournament = 3;
    int elitism = 2;
    std::string repair = "on";
    int experts = 5;
    int aggregation_interval = 10;
    double elite_fraction = 0.2;
    double bias = 0.3;
    std::uint64_t seed = 0;
    long long budget = 0; // 0: use --generations directly
    std::string out;
    std::string history;
};

ga::GaConfig solve_ga_config(const SolveArgs& args, DominationModel model) {
    ga::GaConfig cfg;
    cfg.population_size = args.population;
    cfg.generations = args.generations;
    cfg.crossover_rate = args.crossover_rate;
    cfg.mutation_rate = args.mutation_rate;
    cfg.tournament_size = args.tournament;
    cfg.elitism_count = args.elitism;
    cfg.repair_enabled = args.repair == "on";
    cfg.model = model;
    cfg.seed = args.seed;
    return cfg;
}

void print_solve_summary(const SolveArgs& args, int n, const FitnessBreakdown& fit,
                         int dominators, int generations, long long evaluations,
                         std::int64_t wall_ms) {
    std::cout << "method=" << args.method << " n=" << n << " model=" << args.model
              << " best_fitness=" << fit.fitness << " best_influence=" << fit.influence
              << " best_penalty=" << fit.penalty << " dominators=" << dominators
              << " generations=" << generations << " evaluations=" << evaluations
              << " wall_ms=" << wall_ms << "\n";
}

int run_solve(const SolveArgs& args) {
    const DominationModel model = parse_model(args.model);
    const Instance board = args.in.empty() ? Instance::ones(args.n, args.n)
                                           : io::read_instance_file(args.in);

    if (!args.history.empty() && args.method != "ga" && args.method != "ga-woc") {
        std::cerr << "note: --history applies to ga and ga-woc only; ignored\n";
    }

    Placement best_placement;
    if (args.method == "greedy" || args.method == "exact") {
        const auto start = std::chrono::steady_clock::now();
        best_placement = args.method == "greedy"
                             ? baselines::greedy_dominate(board, model)
                             : baselines::exact_min_dominating(board, model);
        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        const FitnessBreakdown fit = fitness(board, best_placement, model);
        print_solve_summary(args, board.rows(), fit, best_placement.size(), 0, 0, wall);
    } else if (args.method == "ga") {
        ga::GaConfig cfg = solve_ga_config(args, model);
        if (args.budget > 0) {
            cfg.generations = bench::budget_generations(args.budget, cfg.population_size);
        }
        const ga::RunHistory h = ga::run(board.dims(), cfg);
        best_placement = ga::genome_placement(h.best.genome);
        print_solve_summary(args, board.rows(), h.best.fit,
                            ga::genome_size(h.best.genome),
                            h.records.back().generation, h.total_evaluations, h.wall_ms);
        if (!args.history.empty()) {
            io::write_text_file(args.history, ga::history_to_csv(h));
        }
    } else { // ga-woc
        woc::CrowdConfig cfg;
        cfg.experts = args.experts;
        cfg.aggregation_interval = args.aggregation_interval;
        cfg.elite_fraction = args.elite_fraction;
        cfg.bias = args.bias;
        cfg.master_seed = args.seed;
        cfg.ga = solve_ga_config(args, model);
        if (args.budget > 0) {
            cfg.ga.generations = bench::budget_generations_per_expert(
                args.budget, cfg.ga.population_size, cfg.experts);
        }
        const woc::CrowdResult res = woc::run_crowd(board.dims(), cfg);
        best_placement = ga::genome_placement(res.crowd.best.genome);
        print_solve_summary(args, board.rows(), res.crowd.best.fit,
                            ga::genome_size(res.crowd.best.genome),
                            res.crowd.records.back().generation,
                            res.crowd.total_evaluations, res.crowd.wall_ms);
        if (!args.history.empty()) {
            io::write_text_file(args.history,
                                woc::crowd_history_to_csv(res, cfg.aggregation_interval));
        }
    }

    if (args.out.empty()) {
        std::cout << io::placement_to_text(best_placement);
    } else {
        io::write_placement_file(args.out, best_placement);
    }
    return 0;
}

struct VerifyArgs {
    std::string in;
    std::string cert;
    int k = 0;
    std::string model = "line";
};

int run_verify(const VerifyArgs& args) {
    CertificateQuery query{io::read_instance_file(args.in), io::read_placement_file(args.cert),
                           args.k, parse_model(args.model)};
    const Verdict verdict = verify_certificate(query);
    if (verdict.accepted) {
        std::cout << "accepted\n";
        return 0;
    }
    std::cout << "rejected: " << verdict.reason << "\n";
    return 3;
}

struct BenchArgs {
    std::string spec_path;
    std::vector<int> sizes;
    std::vector<std::string> methods;
    std::vector<std::uint64_t> seeds;
    long long budget = 10000;
    std::string model = "adjacency";
    std::string out;
};

bench::BenchSpec load_bench_spec(const BenchArgs& args) {
    bench::BenchSpec spec;
    if (!args.spec_path.empty()) {
        const nlohmann::json j = nlohmann::json::parse(io::read_text_file(args.spec_path));
        spec.sizes = j.at("sizes").get<std::vector<int>>();
        spec.methods = j.at("methods").get<std::vector<std::string>>();
        spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        spec.evaluation_budget = j.value("budget", spec.evaluation_budget);
        spec.model = parse_model(j.value("model", "adjacency"));
        const std::string timing = j.value("timing", "real");
        if (timing != "real" && timing != "none") {
            throw ValidationError("spec timing must be \"real\" or \"none\"");
        }
        spec.measure_time = timing == "real";
        spec.ga.population_size = j.value("population", spec.ga.population_size);
        spec.ga.mutation_rate = j.value("mutation_rate", spec.ga.mutation_rate);
        spec.ga.crossover_rate = j.value("crossover_rate", spec.ga.crossover_rate);
        spec.ga.tournament_size = j.value("tournament", spec.ga.tournament_size);
        spec.ga.elitism_count = j.value("elitism", spec.ga.elitism_count);
        spec.crowd.experts = j.value("experts", spec.crowd.experts);
        spec.crowd.aggregation_interval =
            j.value("aggregation_interval", spec.crowd.aggregation_interval);
        spec.crowd.elite_fraction = j.value("elite_fraction", spec.crowd.elite_fraction);
        spec.crowd.bias = j.value("bias", spec.crowd.bias);
        spec.out_path = j.value("out", std::string{});
    } else {
        spec.sizes = args.sizes;
        spec.methods = args.methods;
        spec.seeds = args.seeds;
        spec.evaluation_budget = args.budget;
        spec.model = parse_model(args.model);
    }
    if (!args.out.empty()) {
        spec.out_path = args.out;
    }
    return spec;
}

int run_bench(const BenchArgs& args) {
    const bench::BenchSpec spec = load_bench_spec(args);
    const std::vector<bench::BenchRow> rows = bench::run_benchmark(spec);
    std::cout << bench::summary_to_text(bench::summarize(rows));
    if (!spec.out_path.empty()) {
        std::cout << "rows written to " << spec.out_path << "\n";
    }
    return 0;
}

struct RenderArgs {
    std::string in;
    std::string cert;
    std::string format = "svg";
    std::string model = "adjacency";
    bool coverage = false;
    bool raw = false;
    std::string out;
};

int run_render(const RenderArgs& args) {
    const Instance board = io::read_instance_file(args.in);
    const Placement placement =
        args.cert.empty() ? Placement{} : io::read_placement_file(args.cert);
    const DominationModel model = parse_model(args.model);
    std::string doc;
    if (args.format == "svg") {
        render::RenderSpec spec;
        spec.show_coverage = args.coverage;
        doc = render::render_svg(board, placement, model, spec);
    } else if (args.raw) {
        doc = render::render_raw(board, placement);
    } else {
        doc = render::render_ascii(board, placement, model);
    }
    emit(doc, args.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix domination toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* generate = app.add_subcommand("generate", "write a random instance");
    generate->add_option("--n", gen_args.n, "rows")->required()->check(CLI::PositiveNumber);
    generate->add_option("--m", gen_args.m, "columns (default: n)")->check(CLI::PositiveNumber);
    generate->add_option("--density", gen_args.density, "probability of a 1-entry")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen_args.seed, "generator seed");
    generate->add_option("--out", gen_args.out, "output path (default: stdout)");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    auto* solve_in = solve->add_option("--in", solve_args.in, "instance file");
    solve->add_option("--n", solve_args.n, "uniform n x n grid instead of --in")
        ->check(CLI::PositiveNumber)
        ->excludes(solve_in);
    solve->add_option("--method", solve_args.method, "greedy|exact|ga|ga-woc")
        ->required()
        ->check(CLI::IsMember({"greedy", "exact", "ga", "ga-woc"}));
    solve->add_option("--model", solve_args.model, "line|adjacency (default adjacency)")
        ->check(CLI::IsMember({"line", "adjacency"}));
    solve->add_option("--generations", solve_args.generations, "generations per run");
    solve->add_option("--population", solve_args.population, "population size");
    solve->add_option("--mutation-rate", solve_args.mutation_rate, "per-individual rate")
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--crossover-rate", solve_args.crossover_rate, "crossover probability")
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--tournament", solve_args.tournament, "tournament size");
    solve->add_option("--elitism", solve_args.elitism, "elite copies per generation");
    solve->add_option("--repair", solve_args.repair, "constraining function on|off")
        ->check(CLI::IsMember({"on", "off"}));
    solve->add_option("--experts", solve_args.experts, "crowd expert count");
    solve->add_option("--aggregation-interval", solve_args.aggregation_interval,
                      "generations between consensus rebuilds");
    solve->add_option("--elite-fraction", solve_args.elite_fraction,
                      "share of each population feeding the consensus");
    solve->add_option("--bias", solve_args.bias, "consensus bias in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--seed", solve_args.seed, "run seed (master seed for ga-woc)");
    solve->add_option("--budget", solve_args.budget,
                      "evaluation budget; derives generations when set");
    solve->add_option("--out", solve_args.out, "best-placement output path");
    solve->add_option("--history", solve_args.history, "per-generation CSV path");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("--in", verify_args.in, "instance file")->required();
    verify->add_option("--cert", verify_args.cert, "placement file")->required();
    verify->add_option("--k", verify_args.k, "dominator bound K")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--model", verify_args.model, "line|adjacency (default line)")
        ->check(CLI::IsMember({"line", "adjacency"}));

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark campaign");
    auto* bench_spec = bench_cmd->add_option("--spec", bench_args.spec_path, "JSON spec file");
    bench_cmd->add_option("--sizes", bench_args.sizes, "grid sizes (comma-separated)")
        ->delimiter(',')
        ->excludes(bench_spec);
    bench_cmd->add_option("--methods", bench_args.methods, "methods (comma-separated)")
        ->delimiter(',')
        ->excludes(bench_spec);
    bench_cmd->add_option("--seeds", bench_args.seeds, "seeds (comma-separated)")
        ->delimiter(',')
        ->excludes(bench_spec);
    bench_cmd->add_option("--budget", bench_args.budget, "evaluations per heuristic run")
        ->excludes(bench_spec);
    bench_cmd->add_option("--model", bench_args.model, "line|adjacency")
        ->check(CLI::IsMember({"line", "adjacency"}))
        ->excludes(bench_spec);
    bench_cmd->add_option("--out", bench_args.out, "CSV output path");

    RenderArgs render_args;
    CLI::App* render_cmd = app.add_subcommand("render", "render an instance and placement");
    render_cmd->add_option("--in", render_args.in, "instance file")->required();
    render_cmd->add_option("--cert", render_args.cert, "placement file (default: empty)");
    render_cmd->add_option("--format", render_args.format, "svg|ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("--model", render_args.model, "line|adjacency")
        ->check(CLI::IsMember({"line", "adjacency"}));
    auto* cover_flag =
        render_cmd->add_flag("--coverage", render_args.coverage, "shade dominated cells");
    render_cmd->add_flag("--raw", render_args.raw, "plain 0/1 solution dump (ascii only)")
        ->excludes(cover_flag);
    render_cmd->add_option("--out", render_args.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (solve->parsed() && solve_args.in.empty() && solve_args.n == 0) {
            throw CLI::RequiredError("solve needs --in or --n");
        }
        if (bench_cmd->parsed() && bench_args.spec_path.empty() &&
            (bench_args.sizes.empty() || bench_args.methods.empty() ||
             bench_args.seeds.empty())) {
            throw CLI::RequiredError("bench needs --spec or --sizes/--methods/--seeds");
        }
        if (render_cmd->parsed() && render_args.raw && render_args.format != "ascii") {
            throw CLI::ValidationError("--raw requires --format ascii");
        }

        if (generate->parsed()) {
            return run_generate(gen_args);
        }
        if (solve->parsed()) {
            return run_solve(solve_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_args);
        }
        if (render_cmd->parsed()) {
            return run_render(render_args);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
