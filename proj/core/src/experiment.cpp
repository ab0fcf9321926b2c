#include "tropsand/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "tropsand/arrangement.hpp"
#include "tropsand/curve.hpp"
#include "tropsand/errors.hpp"
#include "tropsand/rng.hpp"
#include "tropsand/solver.hpp"

namespace tropsand {

std::vector<RPoint> sample_points(int s, int n, uint64_t seed) {
    if (s < 4) throw InputError("sample_points: s must be >= 4");
    const long side = s - 1;
    const long total = side * side;
    if (n < 0 || n > total) throw InputError("sample_points: n exceeds available lattice points");

    std::mt19937_64 rng(seed);
    std::vector<long> idx(total);
    for (long k = 0; k < total; ++k) idx[k] = k;
    std::vector<RPoint> out;
    out.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        const long pick = k + static_cast<long>(uniform_below(rng, static_cast<uint64_t>(total - k)));
        std::swap(idx[k], idx[pick]);
        const long x = 1 + idx[k] / side;
        const long y = 1 + idx[k] % side;
        out.push_back(RPoint{Rational(x, s), Rational(y, s)});
    }
    return out;
}

TrialRecord run_trial(const TrialConfig& cfg) {
    TrialRecord rec;
    rec.s = cfg.s;
    rec.n = cfg.n;
    rec.seed = cfg.seed;

    const std::vector<RPoint> points = sample_points(cfg.s, cfg.n, cfg.seed);
    const auto t0 = std::chrono::steady_clock::now();

    SolveResult solved;
    try {
        solved = solve_min_series(points, cfg.max_passes);
    } catch (NonTerminationError& e) {
        throw NonTerminationError("seed " + std::to_string(cfg.seed) + ": " + e.what(),
                                  std::move(e.partial), std::move(e.trace));
    }

    const TropicalSeries& f = solved.series;
    rec.degree = degree(f);
    rec.genus = genus(f);
    rec.generic_tree = cfg.n > 0 && is_generic_tree(f, points);
    rec.shrinks = solved.trace.total_shrinks;
    rec.passes = solved.trace.passes;

    std::map<RPoint, Rational> values;
    for (const Face& face : build_faces(f))
        for (const RPoint& v : face.poly.pts) values.emplace(v, face.mono.value_at(v));
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j)
            rec.extended.emplace(Exponent{i, j}, canonical_coefficient_cached(values, i, j));
    rec.c00 = rec.extended.at({0, 0});
    rec.c01 = rec.extended.at({0, 1});
    rec.c10 = rec.extended.at({1, 0});
    rec.c11 = rec.extended.at({1, 1});

    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    return rec;
}

AggregateStats aggregate(const std::vector<TrialRecord>& records, int s, int n) {
    AggregateStats agg;
    agg.s = s;
    agg.n = n;

    std::vector<const TrialRecord*> ok;
    for (const TrialRecord& r : records) {
        if (r.s != s || r.n != n) continue;
        ++agg.trials;
        if (r.failed) {
            ++agg.failures;
            continue;
        }
        ok.push_back(&r);
    }
    if (ok.empty()) throw InputError("aggregate: no successful records for cell");
    const double m = static_cast<double>(ok.size());

    agg.degree_min = ok.front()->degree;
    double deg_sum = 0, deg_sq = 0, genus_sum = 0, shrink_sum = 0, ms_sum = 0;
    size_t genus_eq = 0, tree = 0, genus_eq_and_tree = 0;
    Rational c00s, c01s, c10s, c11s, c00sq, c01sq, c10sq, c11sq;
    for (const TrialRecord* r : ok) {
        agg.degree_min = std::min(agg.degree_min, r->degree);
        deg_sum += r->degree;
        deg_sq += static_cast<double>(r->degree) * r->degree;
        genus_sum += r->genus;
        if (r->genus == n) ++genus_eq;
        if (r->generic_tree) {
            ++tree;
            if (r->genus == n) ++genus_eq_and_tree;
        }
        shrink_sum += static_cast<double>(r->shrinks);
        ms_sum += r->ms;
        c00s += r->c00; c01s += r->c01; c10s += r->c10; c11s += r->c11;
        c00sq += r->c00 * r->c00; c01sq += r->c01 * r->c01;
        c10sq += r->c10 * r->c10; c11sq += r->c11 * r->c11;
    }

    const Rational cnt(static_cast<long>(ok.size()));
    agg.c00_mean = c00s / cnt;
    agg.c01_mean = c01s / cnt;
    agg.c10_mean = c10s / cnt;
    agg.c11_mean = c11s / cnt;

    auto sd = [&](const Rational& sum, const Rational& sumsq) {
        const Rational var = sumsq / cnt - (sum / cnt) * (sum / cnt);
        return var.is_negative() ? 0.0 : std::sqrt(var.to_double());
    };
    agg.c00_sd = sd(c00s, c00sq);
    agg.c01_sd = sd(c01s, c01sq);
    agg.c10_sd = sd(c10s, c10sq);
    agg.c11_sd = sd(c11s, c11sq);

    agg.degree_mean = deg_sum / m;
    const double deg_var = deg_sq / m - agg.degree_mean * agg.degree_mean;
    agg.degree_sd = deg_var > 0 ? std::sqrt(deg_var) : 0.0;
    agg.genus_mean = genus_sum / m;
    agg.genus_eq_n_rate = static_cast<double>(genus_eq) / m;
    agg.generic_tree_rate = static_cast<double>(tree) / m;
    agg.genus_eq_n_given_tree_rate =
        tree == 0 ? 1.0 : static_cast<double>(genus_eq_and_tree) / static_cast<double>(tree);

    agg.residual_exact = agg.c00_mean + agg.c11_mean - agg.c10_mean - agg.c01_mean;
    agg.residual = agg.residual_exact.to_double();
    agg.residual_over_sqrt_n = n > 0 ? agg.residual / std::sqrt(static_cast<double>(n)) : agg.residual;

    for (size_t a = 0; a < AggregateStats::kAlphas.size(); ++a) {
        const double na = n > 0 ? std::pow(static_cast<double>(n), AggregateStats::kAlphas[a]) : 1.0;
        agg.degree_mean_norm[a] = agg.degree_mean / na;
        agg.degree_min_norm[a] = static_cast<double>(agg.degree_min) / na;
        agg.c00_mean_norm[a] = agg.c00_mean.to_double() / na;
    }
    agg.sd_c00_over_n = n > 0 ? agg.c00_sd / static_cast<double>(n) : agg.c00_sd;
    agg.mean_shrinks = shrink_sum / m;
    agg.mean_ms = ms_sum / m;
    return agg;
}

SweepResult sweep(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw InputError("sweep: trials must be >= 1");
    if (cfg.s_values.empty() || cfg.n_values.empty())
        throw InputError("sweep: empty grid");

    struct Task {
        int s, n;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int s : cfg.s_values)
        for (int n : cfg.n_values)
            for (int t = 0; t < cfg.trials; ++t)
                tasks.push_back(Task{s, n,
                                     mix_trial_seed(cfg.base_seed, static_cast<uint64_t>(s),
                                                    static_cast<uint64_t>(n),
                                                    static_cast<uint64_t>(t))});

    SweepResult result;
    result.records.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const Task& t = tasks[k];
            TrialConfig tc{t.s, t.n, t.seed, cfg.max_passes};
            try {
                result.records[k] = run_trial(tc);
            } catch (const Error& e) {
                TrialRecord rec;
                rec.s = t.s;
                rec.n = t.n;
                rec.seed = t.seed;
                rec.failed = true;
                rec.error = e.what();
                result.records[k] = std::move(rec);
            }
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (int s : cfg.s_values)
        for (int n : cfg.n_values) result.aggregates.push_back(aggregate(result.records, s, n));
    return result;
}

DiagnosticsReport discussion_diagnostics(const std::vector<TrialRecord>& records) {
    DiagnosticsReport rep;
    std::map<Exponent, Rational> sums;
    size_t count = 0;
    double ratio_sum = 0;
    size_t ratio_count = 0;
    double c00_over_sqrt_n_sum = 0;
    for (const TrialRecord& r : records) {
        if (r.failed) continue;
        ++count;
        for (const auto& [e, c] : r.extended) {
            auto [it, fresh] = sums.emplace(e, c);
            if (!fresh) it->second += c;
        }
        if (r.degree > 0) {
            ratio_sum += r.c00.to_double() / r.degree;
            ++ratio_count;
        }
        if (r.n > 0) c00_over_sqrt_n_sum += r.c00.to_double() / std::sqrt(static_cast<double>(r.n));
    }
    rep.trials = count;
    if (count == 0) return rep;

    const Rational cnt(static_cast<long>(count));
    auto mean = [&](Exponent e) -> Rational {
        auto it = sums.find(e);
        if (it == sums.end()) throw InputError("discussion_diagnostics: records lack extended coefficients");
        return it->second / cnt;
    };
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const Rational res = mean({i, j}) + mean({i + 1, j + 1}) -
                                 mean({i + 1, j}) - mean({i, j + 1});
            rep.identity_residuals.push_back(
                DiagnosticsReport::IdentityEntry{{i, j}, res.to_double(), res.to_fraction_string()});
        }
    }
    rep.mean_c00_over_degree = ratio_count > 0 ? ratio_sum / static_cast<double>(ratio_count) : 0.0;
    rep.mean_c00_over_sqrt_n = count > 0 ? c00_over_sqrt_n_sum / static_cast<double>(count) : 0.0;
    return rep;
}

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    bool have_s = false, have_n = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string v) {
        const char* ws = " \t\r";
        const size_t a = v.find_first_not_of(ws);
        if (a == std::string::npos) return std::string();
        const size_t b = v.find_last_not_of(ws);
        return v.substr(a, b - a + 1);
    };
    auto parse_int_list = [&](const std::string& v) {
        std::vector<int> out;
        std::istringstream items(v);
        std::string item;
        while (std::getline(items, item, ',')) {
            item = trim(item);
            if (item.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty list item");
            out.push_back(std::stoi(item));
        }
        if (out.empty()) throw InputError("config line " + std::to_string(lineno) + ": empty list");
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw InputError("config line " + std::to_string(lineno) + ": missing value");
        try {
            if (key == "s") {
                cfg.s_values = parse_int_list(value);
                have_s = true;
            } else if (key == "n") {
                cfg.n_values = parse_int_list(value);
                have_n = true;
            } else if (key == "trials") {
                cfg.trials = std::stoi(value);
            } else if (key == "seed") {
                cfg.base_seed = std::stoull(value);
            } else if (key == "jobs") {
                cfg.jobs = std::stoi(value);
            } else if (key == "max_passes") {
                cfg.max_passes = std::stoi(value);
            } else {
                throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw InputError("config line " + std::to_string(lineno) + ": bad number '" + value + "'");
        } catch (const std::out_of_range&) {
            throw InputError("config line " + std::to_string(lineno) + ": number out of range");
        }
    }
    if (!have_s || !have_n) throw InputError("config: keys 's' and 'n' are required");
    return cfg;
}

} // namespace tropsand
