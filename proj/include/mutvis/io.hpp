#pragma once

#include <optional>
#include <string>

#include "mutvis/crossing.hpp"
#include "mutvis/scheduler.hpp"
#include "mutvis/verifier.hpp"

namespace mutvis {

/// Instance JSON: {polygon: [[x,y],...], S: {a:[x,y], b:[x,y]}, T: {...},
/// robots: [{start:[x,y], target:[x,y]}, ...]}. Rationals are written as
/// integers when possible, otherwise "p/q" strings; decimals are accepted
/// on input. All parse errors throw ParseError.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

/// Solution JSON: {sweeps: [{a:[x,y], b:[x,y]},...], case_tags: ["Init",...],
/// trajectories: [[[x,y],...],...], meta: {steps, n, m}}.
struct SolutionFile {
    std::vector<Segment> sweeps;
    std::vector<CaseTag> case_tags;
    std::vector<Trajectory> trajectories;
    int steps = 0;
    int n = 0;
    int m = 0;
};

SolutionFile parse_solution(const std::string& json_text);
SolutionFile load_solution(const std::string& path);
std::string serialize_solution(const Solution& sol, int polygon_size);
std::string serialize_report(const VerificationReport& report);
std::string serialize_analysis(const CrossingDecomposition& dec,
                               const RotatingLineOutcome& outcome);

/// SVG 1.1 scene: polygon outline, S and T highlighted, per-robot
/// trajectory polylines, dashed sweeps; 1000x1000 viewbox, aspect preserved.
std::string render_svg(const Instance& inst, const Solution* sol);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace mutvis
