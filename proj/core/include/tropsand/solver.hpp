#pragma once

/// Computes the pointwise-minimal valid series whose curve passes through a
/// given point set, starting from the zero series.
///
/// A single step at an off-curve point p raises the coefficient of the unique
/// minimal monomial at p until a competitor ties, where competitors are taken
/// at their canonical coefficients. Enumeration is finite: a competitor with
/// exponent norm q satisfies value(p) >= dist(p, boundary) * q, so exponents
/// beyond ceil((f(p) + t_cap) / dist) cannot matter once a raise of t_cap is
/// known feasible. After the raise, every enumerated competitor is inserted
/// at its canonical coefficient and empty faces are pruned; the window is
/// enlarged until it provably covers every exponent that could still cut in
/// (see max_slope_ratio).

#include <utility>
#include <vector>

#include "tropsand/arrangement.hpp"
#include "tropsand/errors.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

struct ShrinkOutcome {
    Exponent raised_exponent{};
    Rational raise_amount;                  // 0 iff p was already on the curve
    std::vector<Exponent> new_competitors;  // monomials that became active at p
};

struct SolveTrace {
    struct Event {
        size_t point_index;
        Exponent raised;
        Rational amount;
    };
    int passes = 0;
    long total_shrinks = 0;
    std::vector<Event> log;
};

struct SolveResult {
    TropicalSeries series;
    SolveTrace trace;
};

/// Solver gave up after max_passes sweeps; carries the partial state.
struct NonTerminationError : Error {
    NonTerminationError(std::string msg, TropicalSeries partial_, SolveTrace trace_)
        : Error(std::move(msg)), partial(std::move(partial_)), trace(std::move(trace_)) {}
    TropicalSeries partial;
    SolveTrace trace;
};

/// The brute-force oracle could not certify a result within its caps.
struct OracleFailure : Error {
    using Error::Error;
};

/// Smallest window radius D such that every exponent with Euclidean norm > D
/// is provably irrelevant given a known-feasible raise t_cap at p.
long competitor_bound(const TropicalSeries& f, const RPoint& p, const Rational& t_cap);

/// One face-shrink at p. Returns the new canonical series (pointwise-minimal
/// among valid series >= f whose curve passes through p) and the step report.
/// f must be canonical and valid; p must be interior.
std::pair<TropicalSeries, ShrinkOutcome> shrink_step(const TropicalSeries& f, const RPoint& p);

/// Cyclic sweeps of shrink_step over `points` starting from the zero series,
/// skipping points already on the curve, until a sweep changes nothing.
/// max_passes <= 0 selects the default 10*|points| + 100.
SolveResult solve_min_series(const std::vector<RPoint>& points, int max_passes = 0);

/// Test oracle: discrete coordinate ascent over monomials of degree <=
/// degree_cap with coefficients on a step grid. Raises the unique minimal
/// monomial at each point by one step until every point has a near-tie
/// (gap < step). Shares no code with the exact path above.
TropicalSeries brute_force_min_series(const std::vector<RPoint>& points, int degree_cap,
                                      const Rational& step);

} // namespace tropsand
