#pragma once

/// Exact arbitrary-precision rational scalar and 2D point.
///
/// Every geometric predicate in this project is decided over these types;
/// no floating point enters any comparison. Backed by GMP's mpq_class,
/// which keeps values canonical (reduced, positive denominator).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropsand {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize_checked(); }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "num", "-num" or "num/den". Decimal notation is rejected.
    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// Exact "num/den" form, denominator always present ("0/1", "1/3", "-2/5").
    std::string to_fraction_string() const;
    /// "num" when the value is integral, "num/den" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Smallest integer >= value.
    long ceil_long() const;

private:
    void canonicalize_checked();
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Exact point in the plane. Interior-point arguments require 0 < x,y < 1.
struct RPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
    friend std::strong_ordering operator<=>(const RPoint& a, const RPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    bool in_unit_square() const {
        return !x.is_negative() && !y.is_negative() && x <= Rational(1) && y <= Rational(1);
    }
    bool in_unit_square_interior() const {
        return x.is_positive() && y.is_positive() && x < Rational(1) && y < Rational(1);
    }
    /// Euclidean distance to the boundary of the unit square; equals the
    /// smallest of the four coordinate distances. Meaningful for interior points.
    Rational boundary_distance() const;
};

/// Parses "x,y" where each coordinate is "num" or "num/den".
std::optional<RPoint> parse_point(std::string_view text);

} // namespace tropsand
