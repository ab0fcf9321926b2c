#include "tropsand/json_io.hpp"

#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

#include "tropsand/errors.hpp"
#include "tropsand/rng.hpp"

namespace tropsand {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dec12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string series_to_json(const TropicalSeries& f) {
    ordered_json j;
    j["omega"] = "unit-square";
    j["monomials"] = ordered_json::array();
    for (const auto& [e, c] : f.monomials()) {
        ordered_json m;
        m["i"] = e.i;
        m["j"] = e.j;
        m["c"] = c.to_fraction_string();
        j["monomials"].push_back(std::move(m));
    }
    return j.dump(2) + "\n";
}

TropicalSeries series_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("omega") || !j.contains("monomials"))
        throw InputError("series JSON: expected {omega, monomials}");
    if (j["omega"] != "unit-square")
        throw InputError("series JSON: only the unit square domain is supported");
    if (!j["monomials"].is_array()) throw InputError("series JSON: monomials must be an array");
    TropicalSeries f;
    for (const auto& m : j["monomials"]) {
        if (!m.is_object() || !m.contains("i") || !m.contains("j") || !m.contains("c") ||
            !m["i"].is_number_integer() || !m["j"].is_number_integer() || !m["c"].is_string())
            throw InputError("series JSON: monomial must be {i:int, j:int, c:string}");
        const Exponent e{m["i"].get<int>(), m["j"].get<int>()};
        if (f.contains(e)) throw InputError("series JSON: duplicate exponent pair");
        auto c = Rational::parse(m["c"].get<std::string>());
        if (!c) throw InputError("series JSON: bad coefficient '" + m["c"].get<std::string>() + "'");
        f.set(e, *c);
    }
    return f;
}

std::string curve_graph_to_json(const CurveGraph& g) {
    ordered_json j;
    j["schema"] = "tropsand-curve-graph-v1";
    j["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices) {
        ordered_json jv;
        jv["x"] = v.p.x.to_fraction_string();
        jv["y"] = v.p.y.to_fraction_string();
        jv["on_boundary"] = v.on_boundary;
        jv["marked"] = v.marked;
        jv["at_curve_vertex"] = v.at_curve_vertex;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) j["edges"].push_back(ordered_json::array({e.u, e.v}));
    return j.dump(2) + "\n";
}

std::string deviation_report_to_json(const DeviationReport& rep) {
    ordered_json j;
    j["schema"] = "tropsand-deviation-report-v1";
    j["s"] = rep.s;
    j["radius"] = rep.radius;
    j["deviation_cells"] = rep.deviation_cells;
    j["curve_cells"] = rep.curve_cells;
    j["sup_norm_gap"] = rep.sup_norm_gap;
    j["sup_norm_gap_exact"] = rep.sup_norm_gap_exact.to_fraction_string();
    j["coverage_deviation_to_curve"] = rep.coverage_deviation_to_curve;
    j["coverage_curve_to_deviation"] = rep.coverage_curve_to_deviation;
    return j.dump(2) + "\n";
}

std::string solve_trace_to_json(const SolveTrace& trace) {
    ordered_json j;
    j["schema"] = "tropsand-solve-trace-v1";
    j["passes"] = trace.passes;
    j["total_shrinks"] = trace.total_shrinks;
    j["shrinks"] = ordered_json::array();
    for (const auto& ev : trace.log) {
        ordered_json je;
        je["point"] = ev.point_index;
        je["raised_i"] = ev.raised.i;
        je["raised_j"] = ev.raised.j;
        je["amount"] = ev.amount.to_fraction_string();
        j["shrinks"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

std::string diagnostics_to_json(const DiagnosticsReport& rep) {
    ordered_json j;
    j["schema"] = "tropsand-diagnostics-v1";
    j["trials"] = rep.trials;
    j["identity_residuals"] = ordered_json::array();
    for (const auto& entry : rep.identity_residuals) {
        ordered_json je;
        je["i"] = entry.base.i;
        je["j"] = entry.base.j;
        je["residual"] = entry.residual;
        je["residual_exact"] = entry.residual_exact;
        j["identity_residuals"].push_back(std::move(je));
    }
    j["mean_c00_over_degree"] = rep.mean_c00_over_degree;
    j["mean_c00_over_sqrt_n"] = rep.mean_c00_over_sqrt_n;
    return j.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<TrialRecord>& records, bool with_timings) {
    std::string out = "# schema: tropsand-trials-v1\n";
    out += "s,n,seed,degree,genus,c00,c01,c10,c11,c00_exact,c01_exact,c10_exact,c11_exact,"
           "shrinks,ms\n";
    for (const TrialRecord& r : records) {
        if (r.failed) {
            out += std::to_string(r.s) + "," + std::to_string(r.n) + "," +
                   std::to_string(r.seed) + ",,,,,,,,,,,,\n";
            continue;
        }
        out += std::to_string(r.s) + "," + std::to_string(r.n) + "," + std::to_string(r.seed) +
               "," + std::to_string(r.degree) + "," + std::to_string(r.genus) + "," +
               dec12(r.c00.to_double()) + "," + dec12(r.c01.to_double()) + "," +
               dec12(r.c10.to_double()) + "," + dec12(r.c11.to_double()) + "," +
               r.c00.to_fraction_string() + "," + r.c01.to_fraction_string() + "," +
               r.c10.to_fraction_string() + "," + r.c11.to_fraction_string() + "," +
               std::to_string(r.shrinks) + "," + (with_timings ? dec12(r.ms) : "0") + "\n";
    }
    return out;
}

std::string aggregates_to_json(const std::vector<AggregateStats>& aggregates) {
    ordered_json j;
    j["schema"] = "tropsand-aggregates-v1";
    j["rng"] = kRngAlgorithm;
    j["alphas"] = AggregateStats::kAlphas;
    j["cells"] = ordered_json::array();
    for (const AggregateStats& a : aggregates) {
        ordered_json jc;
        jc["s"] = a.s;
        jc["n"] = a.n;
        jc["trials"] = a.trials;
        jc["failures"] = a.failures;
        jc["degree_min"] = a.degree_min;
        jc["degree_mean"] = a.degree_mean;
        jc["degree_sd"] = a.degree_sd;
        jc["genus_mean"] = a.genus_mean;
        jc["genus_eq_n_rate"] = a.genus_eq_n_rate;
        jc["generic_tree_rate"] = a.generic_tree_rate;
        jc["genus_eq_n_given_tree_rate"] = a.genus_eq_n_given_tree_rate;
        jc["c00_mean"] = a.c00_mean.to_double();
        jc["c01_mean"] = a.c01_mean.to_double();
        jc["c10_mean"] = a.c10_mean.to_double();
        jc["c11_mean"] = a.c11_mean.to_double();
        jc["c00_mean_exact"] = a.c00_mean.to_fraction_string();
        jc["c01_mean_exact"] = a.c01_mean.to_fraction_string();
        jc["c10_mean_exact"] = a.c10_mean.to_fraction_string();
        jc["c11_mean_exact"] = a.c11_mean.to_fraction_string();
        jc["c00_sd"] = a.c00_sd;
        jc["c01_sd"] = a.c01_sd;
        jc["c10_sd"] = a.c10_sd;
        jc["c11_sd"] = a.c11_sd;
        jc["residual"] = a.residual;
        jc["residual_exact"] = a.residual_exact.to_fraction_string();
        jc["residual_over_sqrt_n"] = a.residual_over_sqrt_n;
        jc["degree_mean_norm"] = a.degree_mean_norm;
        jc["degree_min_norm"] = a.degree_min_norm;
        jc["c00_mean_norm"] = a.c00_mean_norm;
        jc["sd_c00_over_n"] = a.sd_c00_over_n;
        jc["mean_shrinks"] = a.mean_shrinks;
        jc["mean_ms"] = a.mean_ms;
        j["cells"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

} // namespace tropsand
