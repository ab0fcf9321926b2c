#include "tropsand/series.hpp"

#include "tropsand/errors.hpp"

namespace tropsand {

TropicalSeries TropicalSeries::zero() {
    TropicalSeries f;
    f.set({0, 0}, Rational(0));
    return f;
}

Rational evaluate(const TropicalSeries& f, const RPoint& p) {
    if (f.empty()) throw InvalidSeriesError("evaluate: series has no monomials");
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.monomials()) {
        Rational v = Monomial{e, c}.value_at(p);
        if (first || v < best) {
            best = std::move(v);
            first = false;
        }
    }
    return best;
}

std::set<Exponent> min_monomials(const TropicalSeries& f, const RPoint& p) {
    if (f.empty()) throw InvalidSeriesError("min_monomials: series has no monomials");
    Rational best = evaluate(f, p);
    std::set<Exponent> out;
    for (const auto& [e, c] : f.monomials()) {
        if (Monomial{e, c}.value_at(p) == best) out.insert(e);
    }
    return out;
}

bool is_on_curve(const TropicalSeries& f, const RPoint& p) {
    return min_monomials(f, p).size() >= 2;
}

int degree(const TropicalSeries& f) {
    int d = 0;
    for (const auto& [e, c] : f.monomials()) {
        int t = (e.i < 0 ? -e.i : e.i) + (e.j < 0 ? -e.j : e.j);
        if (t > d) d = t;
    }
    return d;
}

} // namespace tropsand
