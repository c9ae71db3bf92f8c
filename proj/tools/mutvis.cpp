#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mutvis/generator.hpp"
#include "mutvis/io.hpp"

namespace {

using namespace mutvis;

// exit codes: 0 ok, 1 verification failed, 2 crossing/not-crossing mismatch,
// 3 parse error, 4 invalid instance, 5 generation failure
int code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError:
        return 3;
    case ErrorCode::CrossingInstance:
    case ErrorCode::NotCrossing:
        return 2;
    case ErrorCode::GenerationFailed:
        return 5;
    case ErrorCode::CountMismatch:
        return 4;
    default:
        return 4;
    }
}

void print_error(const Error& e) {
    std::cerr << "{\"error\": \"" << error_code_name(e.code()) << "\", \"message\": \""
              << e.what() << "\"}\n";
}

int cmd_solve(const std::string& in, const std::string& out) {
    Instance inst = load_instance(in);
    if (is_crossing(inst))
        throw Error(ErrorCode::CrossingInstance,
                    "S and T cross; no synchronized schedule exists (see `mutvis analyze`)");
    Solution sol = solve(inst);
    write_file(out, serialize_solution(sol, inst.polygon.size()));
    std::cout << "solved: " << sol.trajectories.size() << " robots, "
              << sol.schedule.sweeps.size() - 1 << " steps\n";
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path, int samples) {
    Instance inst = load_instance(inst_path);
    SolutionFile sol = load_solution(sol_path);
    if (sol.n != inst.robot_count() ||
        static_cast<int>(sol.trajectories.size()) != inst.robot_count())
        throw Error(ErrorCode::CountMismatch, "solution robot count differs from instance");
    VerificationReport rep = verify(inst, sol.trajectories, samples);
    if (rep.ok()) {
        std::cout << "verified: paths and visibility ok\n";
        return 0;
    }
    std::cerr << serialize_report(rep);
    return 1;
}

int cmd_gen(int vertices, int robots, std::uint64_t seed, const std::string& out) {
    if (const char* env = std::getenv("MUTVIS_SEED")) seed = std::strtoull(env, nullptr, 10);
    Instance inst = generate_instance(vertices, robots, seed);
    write_file(out, serialize_instance(inst));
    std::cout << "generated: m=" << inst.polygon.size() << " n=" << inst.robot_count()
              << " seed=" << seed << "\n";
    return 0;
}

int cmd_render(const std::string& inst_path, const std::string& sol_path,
               const std::string& out) {
    Instance inst = load_instance(inst_path);
    if (sol_path.empty()) {
        write_file(out, render_svg(inst, nullptr));
        return 0;
    }
    SolutionFile file = load_solution(sol_path);
    Solution sol;
    sol.schedule.sweeps = file.sweeps;
    sol.schedule.case_tags = file.case_tags;
    sol.trajectories = file.trajectories;
    write_file(out, render_svg(inst, &sol));
    return 0;
}

int cmd_analyze(const std::string& in, int angular_steps, const std::string& out) {
    Instance inst = load_instance(in);
    CrossingDecomposition dec = decompose(inst);
    RotatingLineOutcome outcome = rotating_line_run(inst, angular_steps);
    write_file(out, serialize_analysis(dec, outcome));
    if (std::holds_alternative<RunStuck>(outcome))
        std::cout << "analysis: rotating-line strategy got stuck\n";
    else
        std::cout << "analysis: rotating-line strategy completed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutvis: shortest paths for mutually visible robots in a simple polygon"};
    app.require_subcommand(1);

    std::string in, out, sol_path;
    int samples = 10, vertices = 12, robots = 4, angular_steps = 64;
    std::uint64_t seed = 1;

    auto* solve_cmd = app.add_subcommand("solve", "compute a synchronized schedule");
    solve_cmd->add_option("input", in, "instance JSON")->required();
    solve_cmd->add_option("output", out, "solution JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a solution");
    verify_cmd->add_option("instance", in, "instance JSON")->required();
    verify_cmd->add_option("solution", sol_path, "solution JSON")->required();
    verify_cmd->add_option("--samples", samples, "samples per step (default 10)");

    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--vertices,-m", vertices, "polygon vertices (>= 4)");
    gen_cmd->add_option("--robots,-n", robots, "robot count (>= 1)");
    gen_cmd->add_option("--seed,-s", seed, "RNG seed (env MUTVIS_SEED overrides)");
    gen_cmd->add_option("output", out, "output instance JSON")->required();

    auto* render_cmd = app.add_subcommand("render", "render instance (and solution) as SVG");
    render_cmd->add_option("instance", in, "instance JSON")->required();
    render_cmd->add_option("output", out, "output SVG")->required();
    render_cmd->add_option("--solution", sol_path, "solution JSON to overlay");

    auto* analyze_cmd = app.add_subcommand("analyze", "crossing-case analysis");
    analyze_cmd->add_option("input", in, "instance JSON")->required();
    analyze_cmd->add_option("output", out, "output analysis JSON")->required();
    analyze_cmd->add_option("--angular-steps", angular_steps, "rotating line steps (>= 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(in, out);
        if (verify_cmd->parsed()) return cmd_verify(in, sol_path, samples);
        if (gen_cmd->parsed()) return cmd_gen(vertices, robots, seed, out);
        if (render_cmd->parsed()) return cmd_render(in, sol_path, out);
        if (analyze_cmd->parsed()) return cmd_analyze(in, angular_steps, out);
    } catch (const Error& e) {
        print_error(e);
        return code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"Internal\", \"message\": \"" << e.what() << "\"}\n";
        return 4;
    }
    return 0;
}
