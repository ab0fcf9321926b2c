#pragma once

/// Seeded statistical experiments: sample lattice points, solve, extract
/// invariants, aggregate. Every number a sweep produces is a pure function of
/// (grid, trials, base_seed); worker-pool scheduling cannot change results
/// because records are reduced in trial-index order.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropsand/rational.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

struct TrialConfig {
    int s = 64;
    int n = 16;
    uint64_t seed = 0;
    int max_passes = 0;  // <= 0: solver default
};

struct TrialRecord {
    int s = 0;
    int n = 0;
    uint64_t seed = 0;
    int degree = 0;
    int genus = 0;
    bool generic_tree = false;
    Rational c00, c01, c10, c11;  // canonical coefficients, active or not
    /// Canonical coefficients for |i|,|j| <= 2, for the identity diagnostics.
    std::map<Exponent, Rational> extended;
    long shrinks = 0;
    int passes = 0;
    double ms = 0.0;
    bool failed = false;
    std::string error;
};

struct AggregateStats {
    int s = 0;
    int n = 0;
    size_t trials = 0;
    size_t failures = 0;

    int degree_min = 0;
    double degree_mean = 0.0;
    double degree_sd = 0.0;

    double genus_mean = 0.0;
    double genus_eq_n_rate = 0.0;
    double generic_tree_rate = 0.0;
    double genus_eq_n_given_tree_rate = 1.0;

    Rational c00_mean, c01_mean, c10_mean, c11_mean; // exact
    double c00_sd = 0.0, c01_sd = 0.0, c10_sd = 0.0, c11_sd = 0.0;

    Rational residual_exact;       // c00_mean + c11_mean - c10_mean - c01_mean
    double residual = 0.0;
    double residual_over_sqrt_n = 0.0;

    /// Normalizations at alpha in {0.45, 0.5, 0.55}; the scaling exponent is
    /// not pinned by theory, so all three are reported.
    static constexpr std::array<double, 3> kAlphas{0.45, 0.5, 0.55};
    std::array<double, 3> degree_mean_norm{};
    std::array<double, 3> degree_min_norm{};
    std::array<double, 3> c00_mean_norm{};
    double sd_c00_over_n = 0.0;

    double mean_shrinks = 0.0;
    double mean_ms = 0.0;
};

/// n distinct lattice points with coordinates in [1, s-1]/s, uniform without
/// replacement, deterministic per seed.
std::vector<RPoint> sample_points(int s, int n, uint64_t seed);

/// Samples, solves, extracts invariants. Solver non-termination propagates
/// as NonTerminationError with the seed in the message.
TrialRecord run_trial(const TrialConfig& cfg);

/// Exact means over rationals; SDs and normalizations in double at the end.
AggregateStats aggregate(const std::vector<TrialRecord>& records, int s, int n);

struct SweepConfig {
    std::vector<int> s_values;
    std::vector<int> n_values;
    int trials = 1;
    uint64_t base_seed = 0;
    int jobs = 1;
    int max_passes = 0;
};

struct SweepResult {
    std::vector<TrialRecord> records;       // trial-index order within cells
    std::vector<AggregateStats> aggregates; // one per (s, n) cell
};

/// Runs every (s, n, trial) combination with seeds derived by mix_trial_seed.
/// Failed trials are recorded and the sweep continues.
SweepResult sweep(const SweepConfig& cfg);

/// Diagnostics around the coefficient mean identity: residuals of
/// mean(c_ij) + mean(c_i+1,j+1) - mean(c_i+1,j) - mean(c_i,j+1) over
/// (i,j) in {-1,0,1}^2, and the per-trial c00/degree ratio. Report only.
struct DiagnosticsReport {
    struct IdentityEntry {
        Exponent base;
        double residual;
        std::string residual_exact;
    };
    std::vector<IdentityEntry> identity_residuals;
    double mean_c00_over_degree = 0.0;
    double mean_c00_over_sqrt_n = 0.0;
    size_t trials = 0;
};

DiagnosticsReport discussion_diagnostics(const std::vector<TrialRecord>& records);

/// Parses the experiment config text format: "key = value" lines, '#'
/// comments. Keys: s, n (comma lists), trials, seed, jobs, max_passes.
/// Unknown keys are errors.
SweepConfig parse_sweep_config(const std::string& text);

} // namespace tropsand
