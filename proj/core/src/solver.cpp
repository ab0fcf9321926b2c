#include "tropsand/solver.hpp"

#include <algorithm>
#include <set>

namespace tropsand {

namespace {

void require_interior(const RPoint& p) {
    if (!p.in_unit_square_interior())
        throw BoundaryPointError("point must lie strictly inside the unit square");
}

struct SolverState {
    TropicalSeries f;
    std::vector<Face> faces;
    std::map<RPoint, Rational> vertex_values;

    void rebuild_values() {
        vertex_values.clear();
        for (const Face& face : faces)
            for (const RPoint& v : face.poly.pts)
                vertex_values.emplace(v, face.mono.value_at(v));
    }

    static SolverState from(const TropicalSeries& f) {
        SolverState st;
        st.f = f;
        st.faces = build_faces(f);
        st.rebuild_values();
        return st;
    }
};

// Shrink at p, mutating the state. Returns the outcome. Precondition: the
// state holds a canonical valid series and p is interior and off the curve.
ShrinkOutcome shrink_in_state(SolverState& st, const RPoint& p) {
    const Rational fp = evaluate(st.f, p);
    const auto mins = min_monomials(st.f, p);
    if (mins.size() >= 2) return ShrinkOutcome{*mins.begin(), Rational(0), {}};
    const Exponent raised = *mins.begin();
    const Rational dist = p.boundary_distance();

    // Ring scan of competitors at canonical coefficients. The stop rule uses
    // the norm lower bound: unscanned exponents have sup-norm > R, hence
    // t >= dist * (R+1) - f(p) > best_t once R >= ceil((f(p)+best_t)/dist).
    struct Candidate {
        Exponent e;
        Rational coeff;
    };
    std::vector<Candidate> scanned;
    bool have_best = false;
    Rational best_t;
    std::set<Exponent> best_set;
    long ring = 0;

    auto scan_exponent = [&](int i, int j) {
        Exponent e{i, j};
        if (e == raised) return;
        Rational coeff = canonical_coefficient_cached(st.vertex_values, i, j);
        Rational t = coeff + Rational(i) * p.x + Rational(j) * p.y - fp;
        if (!have_best || t < best_t) {
            best_t = t;
            best_set.clear();
            best_set.insert(e);
            have_best = true;
        } else if (t == best_t) {
            best_set.insert(e);
        }
        scanned.push_back(Candidate{e, std::move(coeff)});
    };
    auto scan_ring = [&](long r) {
        for (long i = -r; i <= r; ++i) {
            for (long j = -r; j <= r; ++j) {
                if (std::max(std::labs(i), std::labs(j)) != r) continue;
                scan_exponent(static_cast<int>(i), static_cast<int>(j));
            }
        }
    };

    for (;;) {
        ++ring;
        scan_ring(ring);
        if (!have_best) continue;
        const long needed = ((fp + best_t) / dist).ceil_long();
        if (ring >= needed) break;
    }

    if (best_t.is_zero())
        throw InternalError(
            "shrink_step: degenerate touch, the minimal series through the point "
            "is not attained");

    // Candidate series: raise, then offer every scanned competitor at its
    // canonical coefficient; pruning keeps exactly the positive-area ones.
    // Enlarge the window until it provably covers all exponents that could
    // still cut below the result.
    for (;;) {
        TropicalSeries cand = st.f;
        cand.set(raised, *st.f.coefficient(raised) + best_t);
        for (const Candidate& c : scanned)
            if (!cand.contains(c.e)) cand.set(c.e, c.coeff);
        std::vector<Face> faces = build_faces(cand);
        std::optional<Rational> ratio = max_slope_ratio(faces);
        if (ratio && Rational(ring) >= *ratio) {
            st.f = prune_to_canonical(cand, faces);
            st.faces = std::move(faces);
            st.rebuild_values();
            break;
        }
        long target = ratio ? std::max(ring + 1, ratio->ceil_long()) : ring + 1;
        while (ring < target) scan_ring(++ring);
    }

    ShrinkOutcome out;
    out.raised_exponent = raised;
    out.raise_amount = best_t;
    out.new_competitors.assign(best_set.begin(), best_set.end());
    return out;
}

// The point-by-point sweep can fail to terminate: two points may alternately
// break each other's tie, with raise amounts shrinking in an exact geometric
// progression (the composite operator converges only in the limit). When the
// recent event log shows three identical (point, exponent) cycles whose
// amounts share one exact rational ratio r < 1, the remaining tail sums to
// amount * r / (1 - r) per event; apply it in one step. The jumped state is
// accepted only if it is a valid series with every target point exactly on
// its curve, which also makes it the least fixpoint (iterates never exceed
// the minimal solution, and any valid fixpoint bounds it from above).
bool try_zeno_jump(SolverState& st, const std::vector<RPoint>& points,
                   const std::vector<SolveTrace::Event>& log) {
    const size_t n = log.size();
    for (size_t period = 2; period <= 16 && 3 * period <= n; ++period) {
        const size_t base = n - 3 * period;
        bool same = true;
        for (size_t i = 0; i < 2 * period && same; ++i)
            same = log[base + i].point_index == log[base + period + i].point_index &&
                   log[base + i].raised == log[base + period + i].raised;
        if (!same) continue;

        const Rational r = log[base + period].amount / log[base].amount;
        if (!r.is_positive() || !(r < Rational(1))) continue;
        bool geometric = true;
        for (size_t i = 0; i < period && geometric; ++i)
            geometric = log[base + period + i].amount == log[base + i].amount * r &&
                        log[base + 2 * period + i].amount == log[base + period + i].amount * r;
        if (!geometric) continue;

        const Rational factor = r / (Rational(1) - r);
        TropicalSeries jumped = st.f;
        bool applicable = true;
        for (size_t i = 0; i < period && applicable; ++i) {
            const auto& ev = log[base + 2 * period + i];
            const Rational* c = jumped.coefficient(ev.raised);
            if (!c)
                applicable = false;
            else
                jumped.set(ev.raised, *c + ev.amount * factor);
        }
        if (!applicable) continue;

        TropicalSeries canon;
        try {
            canon = canonicalize(jumped);
        } catch (const InvalidSeriesError&) {
            continue;
        }
        bool all_on = true;
        for (const RPoint& p : points)
            if (!is_on_curve(canon, p)) { all_on = false; break; }
        if (!all_on) continue;

        st.f = std::move(canon);
        st.faces = build_faces(st.f);
        st.rebuild_values();
        return true;
    }
    return false;
}

} // namespace

long competitor_bound(const TropicalSeries& f, const RPoint& p, const Rational& t_cap) {
    require_interior(p);
    if (t_cap.is_negative()) throw InputError("competitor_bound: negative t_cap");
    const Rational bound = (evaluate(f, p) + t_cap) / p.boundary_distance();
    const long d = bound.ceil_long();
    return d < 1 ? 1 : d;
}

std::pair<TropicalSeries, ShrinkOutcome> shrink_step(const TropicalSeries& f, const RPoint& p) {
    require_interior(p);
    SolverState st = SolverState::from(f);
    ShrinkOutcome out = shrink_in_state(st, p);
    return {std::move(st.f), std::move(out)};
}

SolveResult solve_min_series(const std::vector<RPoint>& points, int max_passes) {
    for (const RPoint& p : points) require_interior(p);
    {
        std::set<RPoint> uniq(points.begin(), points.end());
        if (uniq.size() != points.size())
            throw InputError("solve_min_series: duplicate points");
    }
    if (max_passes <= 0) max_passes = 10 * static_cast<int>(points.size()) + 100;

    SolveResult res;
    res.series = TropicalSeries::zero();
    if (points.empty()) return res;

    SolverState st = SolverState::from(res.series);
    for (;;) {
        if (res.trace.passes >= max_passes)
            throw NonTerminationError("solve_min_series: max_passes exceeded",
                                      std::move(st.f), std::move(res.trace));
        ++res.trace.passes;
        bool changed = false;
        for (size_t idx = 0; idx < points.size(); ++idx) {
            if (is_on_curve(st.f, points[idx])) continue;
            ShrinkOutcome out = shrink_in_state(st, points[idx]);
            ++res.trace.total_shrinks;
            res.trace.log.push_back(SolveTrace::Event{idx, out.raised_exponent,
                                                      out.raise_amount});
            changed = true;
        }
        if (!changed) break;
        if (try_zeno_jump(st, points, res.trace.log)) break;
    }
    res.series = std::move(st.f);
    return res;
}

TropicalSeries brute_force_min_series(const std::vector<RPoint>& points, int degree_cap,
                                      const Rational& step) {
    if (points.size() > 3) throw InputError("brute_force_min_series: at most 3 points");
    if (degree_cap < 1 || degree_cap > 2)
        throw InputError("brute_force_min_series: degree cap must be 1 or 2");
    if (!step.is_positive()) throw InputError("brute_force_min_series: step must be positive");
    for (const RPoint& p : points) require_interior(p);

    // Coefficients for the zero function: c_ij = max over the square of
    // (-i*x - j*y), separable over the corners.
    std::vector<Monomial> monos;
    for (int i = -degree_cap; i <= degree_cap; ++i) {
        for (int j = -degree_cap; j <= degree_cap; ++j) {
            if (std::abs(i) + std::abs(j) > degree_cap) continue;
            Rational c = Rational(std::max(0, -i)) + Rational(std::max(0, -j));
            monos.push_back(Monomial{{i, j}, std::move(c)});
        }
    }
    const Rational cap(4);

    auto gap_and_argmin = [&](const RPoint& p) {
        size_t arg = 0;
        bool first = true;
        Rational best, second;
        bool have_second = false;
        for (size_t k = 0; k < monos.size(); ++k) {
            Rational v = monos[k].value_at(p);
            if (first || v < best) {
                if (!first) { second = best; have_second = true; }
                best = v;
                arg = k;
                first = false;
            } else if (!have_second || v < second) {
                second = v;
                have_second = true;
            }
        }
        return std::make_pair(second - best, arg);
    };

    for (;;) {
        bool raised = false;
        for (const RPoint& p : points) {
            auto [gap, arg] = gap_and_argmin(p);
            if (gap < step) continue;
            monos[arg].c += step;
            if (monos[arg].c > cap)
                throw OracleFailure("brute_force_min_series: coefficient exceeded cap");
            raised = true;
        }
        if (!raised) break;
    }

    TropicalSeries out;
    for (const Monomial& m : monos) out.set(m.e, m.c);
    return out;
}

} // namespace tropsand
