#pragma once

/// Exact planar primitives: convex polygon clipping with edge provenance,
/// shoelace areas, and segment predicates. All decisions are rational.

#include <optional>
#include <vector>

#include "tropsand/rational.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

/// What produced a polygon edge: one of the four square sides, or the
/// bisector against another monomial (the face neighbor across that edge).
struct EdgeLabel {
    enum class Kind { SquareSide, Bisector };
    Kind kind = Kind::SquareSide;
    int side = 0;          // 0 bottom, 1 right, 2 top, 3 left (when SquareSide)
    Exponent other{};      // competing exponent (when Bisector)

    static EdgeLabel square_side(int s) { return {Kind::SquareSide, s, {}}; }
    static EdgeLabel bisector(Exponent e) { return {Kind::Bisector, 0, e}; }

    friend bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
        if (a.kind != b.kind) return false;
        return a.kind == Kind::SquareSide ? a.side == b.side : a.other == b.other;
    }
};

/// Convex polygon, counterclockwise; labels[k] describes edge pts[k] -> pts[k+1].
struct LabeledPolygon {
    std::vector<RPoint> pts;
    std::vector<EdgeLabel> labels;

    size_t size() const { return pts.size(); }
    bool degenerate() const { return pts.size() < 3; }
};

/// [0,1]^2 with its four side labels.
LabeledPolygon unit_square_polygon();

/// Clips to the closed half-plane {a*x + b*y <= rhs}; edges created on the
/// cut line carry `cut_label`. Result may be degenerate (fewer than 3 points).
LabeledPolygon clip_half_plane(const LabeledPolygon& poly, const Rational& a,
                               const Rational& b, const Rational& rhs,
                               const EdgeLabel& cut_label);

/// Twice the signed area (shoelace); positive for counterclockwise.
Rational polygon_area2(const std::vector<RPoint>& pts);

/// Cross product (b-a) x (c-a); sign is the orientation predicate.
Rational orient(const RPoint& a, const RPoint& b, const RPoint& c);

/// p lies on the closed segment [a,b].
bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b);

/// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const RPoint& a, const RPoint& b, const RPoint& c, const RPoint& d);

/// Closed segment [a,b] meets the closed box [x0,x1] x [y0,y1].
bool segment_intersects_box(const RPoint& a, const RPoint& b,
                            const Rational& x0, const Rational& x1,
                            const Rational& y0, const Rational& y1);

} // namespace tropsand
