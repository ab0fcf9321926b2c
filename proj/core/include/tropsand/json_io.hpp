#pragma once

/// Serialization: the series interchange JSON, report JSONs, and trial CSV.
/// Coefficients travel as exact "numerator/denominator" strings.

#include <string>
#include <vector>

#include "tropsand/curve.hpp"
#include "tropsand/experiment.hpp"
#include "tropsand/sandpile.hpp"
#include "tropsand/series.hpp"
#include "tropsand/solver.hpp"

namespace tropsand {

/// {"omega":"unit-square","monomials":[{"i":..,"j":..,"c":"num/den"},...]}
/// with monomials in (i,j) order; byte-deterministic.
std::string series_to_json(const TropicalSeries& f);

/// Parses the interchange format; throws InputError on malformed input.
TropicalSeries series_from_json(const std::string& text);

std::string curve_graph_to_json(const CurveGraph& g);
std::string deviation_report_to_json(const DeviationReport& rep);
std::string solve_trace_to_json(const SolveTrace& trace);
std::string diagnostics_to_json(const DiagnosticsReport& rep);

/// Header line, then one row per record:
/// s,n,seed,degree,genus,c00,c01,c10,c11,c00_exact,c01_exact,c10_exact,
/// c11_exact,shrinks,ms. Decimals use 12 significant digits. The ms column
/// is written as 0 unless with_timings is set, keeping default output
/// byte-deterministic.
std::string records_to_csv(const std::vector<TrialRecord>& records, bool with_timings = false);

std::string aggregates_to_json(const std::vector<AggregateStats>& aggregates);

} // namespace tropsand
