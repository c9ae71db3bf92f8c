#include "mutvis/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mutvis {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) {
        auto num = boost::multiprecision::numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return num.convert_to<std::int64_t>();
    }
    return rational_to_string(r);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_float()) {
        std::ostringstream ss;
        ss.precision(17);
        ss << j.get<double>();
        return rational_from_string(ss.str());
    }
    throw Error(ErrorCode::ParseError, "expected a number or rational string");
}

json point_to_json(const Point& p) { return json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorCode::ParseError, "point must be a [x, y] pair");
    return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

json segment_to_json(const Segment& s) {
    return json{{"a", point_to_json(s.a)}, {"b", point_to_json(s.b)}};
}

Segment segment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw Error(ErrorCode::ParseError, "segment must be {a, b}");
    return Segment{point_from_json(j.at("a")), point_from_json(j.at("b"))};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
    return j;
}

CaseTag case_tag_from_string(const std::string& s) {
    if (s == "Init") return CaseTag::Init;
    if (s == "A") return CaseTag::A;
    if (s == "B") return CaseTag::B;
    if (s == "C") return CaseTag::C;
    if (s == "D") return CaseTag::D;
    throw Error(ErrorCode::ParseError, "unknown case tag: " + s);
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json j = parse_json(json_text);
    try {
        if (!j.is_object() || !j.contains("polygon") || !j.contains("S") ||
            !j.contains("T") || !j.contains("robots"))
            throw Error(ErrorCode::ParseError,
                        "instance needs polygon, S, T and robots fields");
        std::vector<Point> ring;
        for (const auto& p : j.at("polygon")) ring.push_back(point_from_json(p));
        Segment S = segment_from_json(j.at("S"));
        Segment T = segment_from_json(j.at("T"));
        std::vector<Robot> robots;
        for (const auto& r : j.at("robots")) {
            if (!r.is_object() || !r.contains("start") || !r.contains("target"))
                throw Error(ErrorCode::ParseError, "robot must be {start, target}");
            robots.push_back(
                Robot{point_from_json(r.at("start")), point_from_json(r.at("target"))});
        }
        return make_instance(SimplePolygon::validate(ring), S, T, std::move(robots));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string serialize_instance(const Instance& inst) {
    json j;
    j["polygon"] = json::array();
    for (const Point& p : inst.polygon.vertices()) j["polygon"].push_back(point_to_json(p));
    j["S"] = segment_to_json(inst.S);
    j["T"] = segment_to_json(inst.T);
    j["robots"] = json::array();
    for (int i = 0; i < inst.robot_count(); ++i)
        j["robots"].push_back(json{{"start", point_to_json(inst.starts[i])},
                                   {"target", point_to_json(inst.targets[i])}});
    return j.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& json_text) {
    json j = parse_json(json_text);
    try {
        SolutionFile f;
        for (const auto& s : j.at("sweeps")) f.sweeps.push_back(segment_from_json(s));
        for (const auto& t : j.at("case_tags"))
            f.case_tags.push_back(case_tag_from_string(t.get<std::string>()));
        int idx = 0;
        for (const auto& tr : j.at("trajectories")) {
            Trajectory traj;
            traj.robot_index = idx++;
            for (const auto& p : tr) traj.waypoints.push_back(point_from_json(p));
            f.trajectories.push_back(std::move(traj));
        }
        const auto& meta = j.at("meta");
        f.steps = meta.at("steps").get<int>();
        f.n = meta.at("n").get<int>();
        f.m = meta.at("m").get<int>();
        return f;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

SolutionFile load_solution(const std::string& path) { return parse_solution(read_file(path)); }

std::string serialize_solution(const Solution& sol, int polygon_size) {
    json j;
    j["sweeps"] = json::array();
    for (const Segment& s : sol.schedule.sweeps) j["sweeps"].push_back(segment_to_json(s));
    j["case_tags"] = json::array();
    for (CaseTag t : sol.schedule.case_tags) j["case_tags"].push_back(case_tag_name(t));
    j["trajectories"] = json::array();
    for (const Trajectory& tr : sol.trajectories) {
        json w = json::array();
        for (const Point& p : tr.waypoints) w.push_back(point_to_json(p));
        j["trajectories"].push_back(std::move(w));
    }
    j["meta"] = json{{"steps", static_cast<int>(sol.schedule.sweeps.size()) - 1},
                     {"n", static_cast<int>(sol.trajectories.size())},
                     {"m", polygon_size}};
    return j.dump(2) + "\n";
}

std::string serialize_report(const VerificationReport& report) {
    json j;
    j["paths_ok"] = report.paths_ok;
    j["visibility_ok"] = report.visibility_ok;
    j["samples_per_step"] = report.samples_per_step;
    j["ok"] = report.ok();
    if (report.first_violation) {
        const auto& v = *report.first_violation;
        j["first_violation"] = json{{"time", rational_to_json(v.time)},
                                    {"i", v.i},
                                    {"j", v.j},
                                    {"witness", segment_to_json(v.witness)}};
    }
    return j.dump(2) + "\n";
}

std::string serialize_analysis(const CrossingDecomposition& dec,
                               const RotatingLineOutcome& outcome) {
    json j;
    j["q"] = point_to_json(dec.q);
    j["regions"] = json::array();
    for (const auto& r : dec.regions) {
        json verts = json::array();
        for (const Point& p : r.boundary.vertices()) verts.push_back(point_to_json(p));
        j["regions"].push_back(json{{"arm1", segment_to_json(r.arm1)},
                                    {"arm2", segment_to_json(r.arm2)},
                                    {"vertices", std::move(verts)}});
    }
    j["partition"] = dec.partition;
    if (const auto* stuck = std::get_if<RunStuck>(&outcome)) {
        j["outcome"] = json{{"status", "stuck"},
                            {"angle", stuck->angle},
                            {"witness", json::array({stuck->witness.first,
                                                     stuck->witness.second})}};
    } else {
        j["outcome"] = json{{"status", "completed"}};
    }
    return j.dump(2) + "\n";
}

namespace {

struct SvgMapper {
    double minx, miny, scale, height;

    std::pair<double, double> map(const Point& p) const {
        double x = (to_double(p.x) - minx) * scale;
        double y = height - (to_double(p.y) - miny) * scale;
        return {x, y};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string points_attr(const SvgMapper& m, const std::vector<Point>& pts) {
    std::string s;
    for (const Point& p : pts) {
        auto [x, y] = m.map(p);
        if (!s.empty()) s += " ";
        s += fmt(x) + "," + fmt(y);
    }
    return s;
}

const char* kColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                         "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_svg(const Instance& inst, const Solution* sol) {
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Point& p : inst.polygon.vertices()) {
        minx = std::min(minx, to_double(p.x));
        maxx = std::max(maxx, to_double(p.x));
        miny = std::min(miny, to_double(p.y));
        maxy = std::max(maxy, to_double(p.y));
    }
    double span = std::max(maxx - minx, maxy - miny);
    if (span <= 0) span = 1;
    SvgMapper m{minx, miny, 1000.0 / span, (maxy - miny) * 1000.0 / span};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"-20 -20 1040 " << fmt(m.height + 40) << "\">\n";
    svg << "<polygon points=\"" << points_attr(m, inst.polygon.vertices())
        << "\" fill=\"#f5f2ea\" stroke=\"#333333\" stroke-width=\"2\"/>\n";

    auto line = [&](const Segment& s, const char* color, const char* extra) {
        auto [x1, y1] = m.map(s.a);
        auto [x2, y2] = m.map(s.b);
        svg << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color << "\" stroke-width=\"3\""
            << extra << "/>\n";
    };
    line(inst.S, "#0066cc", " class=\"segment-S\"");
    line(inst.T, "#cc0066", " class=\"segment-T\"");

    if (sol) {
        for (const Segment& s : sol->schedule.sweeps) {
            if (s.degenerate()) continue;
            line(s, "#999999", " stroke-dasharray=\"8,6\" class=\"sweep\"");
        }
        for (size_t i = 0; i < sol->trajectories.size(); ++i) {
            svg << "<polyline class=\"trajectory\" points=\""
                << points_attr(m, sol->trajectories[i].waypoints) << "\" fill=\"none\" stroke=\""
                << kColors[i % 8] << "\" stroke-width=\"2\"/>\n";
        }
    }
    for (int i = 0; i < inst.robot_count(); ++i) {
        auto [sx, sy] = m.map(inst.starts[i]);
        auto [tx, ty] = m.map(inst.targets[i]);
        svg << "<circle class=\"start\" cx=\"" << fmt(sx) << "\" cy=\"" << fmt(sy)
            << "\" r=\"6\" fill=\"" << kColors[i % 8] << "\"/>\n";
        svg << "<rect class=\"target\" x=\"" << fmt(tx - 5) << "\" y=\"" << fmt(ty - 5)
            << "\" width=\"10\" height=\"10\" fill=\"" << kColors[i % 8] << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot open for writing: " + path);
    out << content;
    if (!out) throw Error(ErrorCode::ParseError, "write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mutvis
