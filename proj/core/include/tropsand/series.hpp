#pragma once

/// Min-plus series over the unit square.
///
/// A series is a finite map (i,j) -> c_ij representing
///     f(x,y) = min over monomials of (c_ij + i*x + j*y)
/// restricted to Omega = [0,1]^2. Valid series satisfy f >= 0 on Omega and
/// f = 0 on the boundary; the locus where two or more monomials tie is the
/// tropical curve of f.

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "tropsand/rational.hpp"

namespace tropsand {

struct Exponent {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Monomial {
    Exponent e;
    Rational c;

    /// Value c + i*x + j*y at a point.
    Rational value_at(const RPoint& p) const {
        return c + Rational(e.i) * p.x + Rational(e.j) * p.y;
    }
};

class TropicalSeries {
public:
    TropicalSeries() = default;

    /// The identically-zero series {(0,0) -> 0}.
    static TropicalSeries zero();

    void set(Exponent e, Rational c) { monomials_.insert_or_assign(e, std::move(c)); }
    void erase(Exponent e) { monomials_.erase(e); }
    bool contains(Exponent e) const { return monomials_.count(e) != 0; }
    const Rational* coefficient(Exponent e) const {
        auto it = monomials_.find(e);
        return it == monomials_.end() ? nullptr : &it->second;
    }

    bool empty() const { return monomials_.empty(); }
    size_t size() const { return monomials_.size(); }

    /// Deterministic (i,j)-ordered view.
    const std::map<Exponent, Rational>& monomials() const { return monomials_; }

    friend bool operator==(const TropicalSeries& a, const TropicalSeries& b) {
        return a.monomials_ == b.monomials_;
    }

private:
    std::map<Exponent, Rational> monomials_;
};

/// Exact min over all monomials at p. Throws InvalidSeriesError when empty.
Rational evaluate(const TropicalSeries& f, const RPoint& p);

/// All exponent pairs attaining evaluate(f, p); exact tie detection.
std::set<Exponent> min_monomials(const TropicalSeries& f, const RPoint& p);

/// True iff at least two monomials tie at p. Requires canonical f and interior p.
bool is_on_curve(const TropicalSeries& f, const RPoint& p);

/// max |i|+|j| over stored monomials; 0 for the zero series.
int degree(const TropicalSeries& f);

} // namespace tropsand
