// Command-line front end: instance generation, solving, verification,
// benchmarking, and SVG plotting.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tetherplan/bench.hpp"
#include "tetherplan/errors.hpp"
#include "tetherplan/generator.hpp"
#include "tetherplan/solution.hpp"
#include "tetherplan/svg.hpp"

namespace {

using tetherplan::Error;
using tetherplan::Instance;
using tetherplan::Rat;

constexpr std::size_t kOracleSizeLimit = 60;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tetherplan::ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw tetherplan::ParseError("cannot write file: " + path);
    out << bytes;
    if (!out) throw tetherplan::ParseError("write failed: " + path);
}

void emit_error(const std::string& code, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    std::cerr << j.dump() << "\n";
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t v = std::stoull(item);
        if (v == 0) throw tetherplan::InvalidConfig("bench size must be >= 1");
        sizes.push_back(v);
    }
    if (sizes.empty()) throw tetherplan::InvalidConfig("no bench sizes given");
    return sizes;
}

int run(int argc, char** argv) {
    CLI::App app{"corridor-following trajectory planner"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::size_t gen_n = 1;
    std::string gen_alpha = "1", gen_budget = "1", gen_out;
    std::uint64_t gen_seed = 0;
    std::int64_t dur_lo = 1, dur_hi = 8;
    gen->add_option("--n", gen_n, "number of segments")->required();
    gen->add_option("--alpha", gen_alpha, "leader speed (exact rational)");
    gen->add_option("--budget", gen_budget, "vertical budget (exact rational)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->add_option("--dur-lo", dur_lo, "minimum segment duration");
    gen->add_option("--dur-hi", dur_hi, "maximum segment duration");

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string solve_in, solve_out, solve_mode = "linear";
    solve->add_option("--in", solve_in, "instance file")->required();
    solve->add_option("--mode", solve_mode, "linear|bruteforce")
        ->check(CLI::IsMember({"linear", "bruteforce"}));
    solve->add_option("--out", solve_out, "output solution file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a solution record");
    std::string ver_in, ver_sol;
    bool ver_oracle = false;
    verify->add_option("--in", ver_in, "instance file")->required();
    verify->add_option("--solution", ver_sol, "solution file")->required();
    verify->add_flag("--oracle", ver_oracle,
                     "also check slope and link count against the oracles");

    // bench
    auto* bench = app.add_subcommand("bench", "time the solvers");
    std::string bench_sizes, bench_out;
    std::size_t bench_repeats = 3;
    std::uint64_t bench_seed = 0;
    bench->add_option("--sizes", bench_sizes, "comma-separated sizes")
        ->required();
    bench->add_option("--repeats", bench_repeats, "repetitions per size");
    bench->add_option("--seed", bench_seed, "instance stream seed");
    bench->add_option("--out", bench_out, "output CSV file")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "render an instance as SVG");
    std::string plot_in, plot_sol, plot_out;
    plot->add_option("--in", plot_in, "instance file")->required();
    plot->add_option("--solution", plot_sol, "solution file (optional)");
    plot->add_option("--out", plot_out, "output SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        tetherplan::GenConfig cfg;
        cfg.n_segments = gen_n;
        cfg.alpha = Rat::parse(gen_alpha);
        cfg.vertical_budget = Rat::parse(gen_budget);
        cfg.seed = gen_seed;
        cfg.duration_range = {Rat(dur_lo), Rat(dur_hi)};
        Instance inst = tetherplan::gen_instance(cfg);
        write_file(gen_out, tetherplan::serialize_instance(inst));
        return 0;
    }

    if (solve->parsed()) {
        Instance inst = tetherplan::parse_instance(read_file(solve_in));
        auto method = solve_mode == "bruteforce"
                          ? tetherplan::SlopeSolution::Method::bruteforce
                          : tetherplan::SlopeSolution::Method::linear;
        tetherplan::SolutionRecord rec = tetherplan::solve_instance(inst, method);
        write_file(solve_out, tetherplan::serialize_solution(rec));
        return 0;
    }

    if (verify->parsed()) {
        Instance inst = tetherplan::parse_instance(read_file(ver_in));
        tetherplan::SolutionRecord rec =
            tetherplan::parse_solution(read_file(ver_sol));
        if (ver_oracle && inst.segments() > kOracleSizeLimit)
            throw tetherplan::InvalidConfig(
                "--oracle is limited to instances with at most " +
                std::to_string(kOracleSizeLimit) + " segments");
        tetherplan::VerifyReport rep =
            tetherplan::verify_solution(inst, rec, ver_oracle);
        if (rep.ok) {
            std::cout << "ok\n";
            return 0;
        }
        for (const std::string& f : rep.failures)
            std::cout << "fail: " << f << "\n";
        return 1;
    }

    if (bench->parsed()) {
        tetherplan::BenchReport rep = tetherplan::run_bench(
            parse_sizes(bench_sizes), bench_repeats, bench_seed);
        write_file(bench_out, rep.to_csv());
        return 0;
    }

    if (plot->parsed()) {
        Instance inst = tetherplan::parse_instance(read_file(plot_in));
        std::optional<tetherplan::BetaPath> path;
        if (!plot_sol.empty())
            path = tetherplan::parse_solution(read_file(plot_sol)).path;
        write_file(plot_out, tetherplan::render_svg(inst, path));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tetherplan::VerifyError& e) {
        emit_error(e.code(), e.what());
        return 1;
    } catch (const Error& e) {
        emit_error(e.code(), e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 2;
    }
}
