// tropsand command line: exact minimal tropical series through points on the
// unit square, sandpile cross-validation, statistical experiments, rendering.
//
// Exit codes: 0 success, 1 input error, 2 internal/solver error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropsand/curve.hpp"
#include "tropsand/errors.hpp"
#include "tropsand/experiment.hpp"
#include "tropsand/json_io.hpp"
#include "tropsand/render.hpp"
#include "tropsand/sandpile.hpp"
#include "tropsand/solver.hpp"

namespace fs = std::filesystem;
using namespace tropsand;

namespace {

std::vector<RPoint> parse_points_text(const std::string& text) {
    std::vector<RPoint> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        auto p = parse_point(token);
        if (!p)
            throw InputError("bad point '" + token +
                             "': expected exact rationals like 1/3,1/2 (decimals rejected)");
        out.push_back(*p);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ';' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::vector<RPoint> gather_points(const std::string& inline_points,
                                  const std::string& points_file) {
    std::string text = inline_points;
    if (!points_file.empty()) {
        if (!text.empty()) text += ";";
        std::string file_text = read_file(points_file);
        for (std::string::size_type k = 0; k < file_text.size(); ++k) {
            if (file_text[k] == '#') {
                while (k < file_text.size() && file_text[k] != '\n') ++k;
                if (k >= file_text.size()) break;
            }
            text.push_back(file_text[k]);
        }
    }
    return parse_points_text(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropical series solver with sandpile cross-validation"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "minimal series through points -> JSON (+SVG)");
    std::string solve_points, solve_points_file, solve_out_dir, solve_format = "json";
    int solve_max_passes = 0;
    bool solve_verbose = false;
    solve_cmd->add_option("--points", solve_points, "inline points 'x,y;x,y' as exact rationals");
    solve_cmd->add_option("--points-file", solve_points_file, "file with one point per line");
    solve_cmd->add_option("--out-dir", solve_out_dir, "write series.json (and curve.svg) here");
    solve_cmd->add_option("--format", solve_format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    solve_cmd->add_option("--max-passes", solve_max_passes, "sweep limit (0 = default)");
    solve_cmd->add_flag("--verbose", solve_verbose, "emit solve trace JSON to stderr");

    // sandpile
    auto* sand_cmd = app.add_subcommand("sandpile", "relax 3+points state -> PGM + reports");
    std::string sand_points, sand_points_file, sand_out_dir = ".";
    int sand_s = 64;
    sand_cmd->add_option("--s", sand_s, "lattice scale")->required();
    sand_cmd->add_option("--points", sand_points, "lattice points x/s,y/s");
    sand_cmd->add_option("--points-file", sand_points_file, "file with one point per line");
    sand_cmd->add_option("--out-dir", sand_out_dir, "output directory");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "sandpile vs exact curve deviation report");
    std::string cmp_points, cmp_points_file, cmp_out_dir;
    int cmp_s = 64, cmp_radius = 3, cmp_max_passes = 0;
    cmp_cmd->add_option("--s", cmp_s, "lattice scale")->required();
    cmp_cmd->add_option("--points", cmp_points, "lattice points x/s,y/s");
    cmp_cmd->add_option("--points-file", cmp_points_file, "file with one point per line");
    cmp_cmd->add_option("--radius", cmp_radius, "coverage cell radius");
    cmp_cmd->add_option("--max-passes", cmp_max_passes, "sweep limit (0 = default)");
    cmp_cmd->add_option("--out-dir", cmp_out_dir, "write report here instead of stdout");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "seeded sweep -> CSV + aggregate JSON");
    std::string exp_config, exp_out_dir = ".";
    int exp_jobs = 0;
    uint64_t exp_seed = 0;
    bool exp_seed_set = false, exp_timings = false, exp_diagnostics = false;
    exp_cmd->add_option("--config", exp_config, "key = value config file")->required();
    exp_cmd->add_option("--out-dir", exp_out_dir, "output directory");
    exp_cmd->add_option("--jobs", exp_jobs, "worker threads (overrides config)");
    exp_cmd->add_option("--seed", exp_seed, "base seed (overrides config)")
        ->trigger_on_parse(); // value recorded below
    exp_cmd->callback([&] { exp_seed_set = exp_cmd->count("--seed") > 0; });
    exp_cmd->add_flag("--timings", exp_timings, "include wall-clock ms in the CSV");
    exp_cmd->add_flag("--diagnostics", exp_diagnostics, "also write diagnostics.json");

    // render
    auto* render_cmd = app.add_subcommand("render", "series JSON -> SVG");
    std::string render_in, render_out, render_points, render_coloring = "none";
    int render_canvas = 512;
    render_cmd->add_option("--series", render_in, "series JSON file")->required();
    render_cmd->add_option("--out", render_out, "output SVG file (default stdout)");
    render_cmd->add_option("--points", render_points, "marker points");
    render_cmd->add_option("--canvas", render_canvas, "canvas size in px (>= 64)");
    render_cmd->add_option("--coloring", render_coloring, "none | hash | genus")
        ->check(CLI::IsMember({"none", "hash", "genus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve_cmd) {
            const auto points = gather_points(solve_points, solve_points_file);
            SolveResult res = solve_min_series(points, solve_max_passes);
            if (solve_verbose) std::cerr << solve_trace_to_json(res.trace);
            const std::string series_json = series_to_json(res.series);
            if (solve_out_dir.empty()) {
                if (solve_format == "svg")
                    std::cout << render_svg(res.series, points);
                else
                    std::cout << series_json;
            } else {
                fs::create_directories(solve_out_dir);
                write_file(fs::path(solve_out_dir) / "series.json", series_json);
                if (solve_format == "svg")
                    write_file(fs::path(solve_out_dir) / "curve.svg",
                               render_svg(res.series, points));
            }
        } else if (*sand_cmd) {
            const auto points = gather_points(sand_points, sand_points_file);
            SandpileGrid stable = relax(tropical_state(sand_s, points));
            fs::create_directories(sand_out_dir);
            write_file(fs::path(sand_out_dir) / "grains.pgm", to_pgm(stable));
            const auto bytes = topplings_bytes_le(stable);
            write_file(fs::path(sand_out_dir) / "topplings.u32",
                       std::string(bytes.begin(), bytes.end()));
            SolveResult res = solve_min_series(points);
            write_file(fs::path(sand_out_dir) / "deviation.json",
                       deviation_report_to_json(compare_with_exact(res.series, stable)));
        } else if (*cmp_cmd) {
            const auto points = gather_points(cmp_points, cmp_points_file);
            SandpileGrid stable = relax(tropical_state(cmp_s, points));
            SolveResult res = solve_min_series(points, cmp_max_passes);
            const std::string report =
                deviation_report_to_json(compare_with_exact(res.series, stable, cmp_radius));
            if (cmp_out_dir.empty()) {
                std::cout << report;
            } else {
                fs::create_directories(cmp_out_dir);
                write_file(fs::path(cmp_out_dir) / "deviation.json", report);
            }
        } else if (*exp_cmd) {
            SweepConfig cfg = parse_sweep_config(read_file(exp_config));
            if (exp_jobs > 0) cfg.jobs = exp_jobs;
            if (exp_seed_set) cfg.base_seed = exp_seed;
            SweepResult res = sweep(cfg);
            fs::create_directories(exp_out_dir);
            write_file(fs::path(exp_out_dir) / "trials.csv",
                       records_to_csv(res.records, exp_timings));
            write_file(fs::path(exp_out_dir) / "aggregates.json",
                       aggregates_to_json(res.aggregates));
            if (exp_diagnostics)
                write_file(fs::path(exp_out_dir) / "diagnostics.json",
                           diagnostics_to_json(discussion_diagnostics(res.records)));
        } else if (*render_cmd) {
            TropicalSeries f = series_from_json(read_file(render_in));
            f = canonicalize(f);
            RenderSpec spec;
            spec.canvas_px = render_canvas;
            if (render_coloring == "hash")
                spec.coloring = RenderSpec::FaceColoring::ExponentHash;
            else if (render_coloring == "genus")
                spec.coloring = RenderSpec::FaceColoring::GenusHighlight;
            const auto points = parse_points_text(render_points);
            const std::string svg = render_svg(f, points, spec);
            if (render_out.empty())
                std::cout << svg;
            else
                write_file(render_out, svg);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
