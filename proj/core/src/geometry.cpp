#include "tropsand/geometry.hpp"

#include "tropsand/errors.hpp"

namespace tropsand {

LabeledPolygon unit_square_polygon() {
    LabeledPolygon sq;
    const Rational z(0), u(1);
    sq.pts = {RPoint{z, z}, RPoint{u, z}, RPoint{u, u}, RPoint{z, u}};
    sq.labels = {EdgeLabel::square_side(0), EdgeLabel::square_side(1),
                 EdgeLabel::square_side(2), EdgeLabel::square_side(3)};
    return sq;
}

namespace {

// Removes zero-length edges and merges consecutive collinear edges that came
// from the same constraint. Wrap-around handled by running to fixpoint on the
// (short) vertex list.
void normalize_polygon(LabeledPolygon& poly) {
    // Drop consecutive duplicate points (zero-length edges).
    LabeledPolygon out;
    size_t n = poly.pts.size();
    for (size_t k = 0; k < n; ++k) {
        const RPoint& p = poly.pts[k];
        if (!out.pts.empty() && out.pts.back() == p) {
            // Merged vertex keeps the later outgoing edge; the zero-length
            // edge's label vanishes.
            out.labels.back() = poly.labels[k];
            continue;
        }
        out.pts.push_back(p);
        out.labels.push_back(poly.labels[k]);
    }
    while (out.pts.size() > 1 && out.pts.front() == out.pts.back()) {
        out.pts.pop_back();
        out.labels.pop_back();
    }
    // Merge same-label collinear consecutive edges (drops the middle vertex).
    bool changed = true;
    while (changed && out.pts.size() >= 3) {
        changed = false;
        size_t m = out.pts.size();
        for (size_t k = 0; k < m; ++k) {
            size_t prev = (k + m - 1) % m;
            const RPoint& a = out.pts[prev];
            const RPoint& b = out.pts[k];
            const RPoint& c = out.pts[(k + 1) % m];
            if (out.labels[prev] == out.labels[k] && orient(a, b, c).is_zero()) {
                out.pts.erase(out.pts.begin() + static_cast<long>(k));
                out.labels.erase(out.labels.begin() + static_cast<long>(k));
                changed = true;
                break;
            }
        }
    }
    poly = std::move(out);
}

} // namespace

LabeledPolygon clip_half_plane(const LabeledPolygon& poly, const Rational& a,
                               const Rational& b, const Rational& rhs,
                               const EdgeLabel& cut_label) {
    const size_t n = poly.pts.size();
    if (n == 0) return {};

    std::vector<Rational> slack(n); // rhs - (a*x + b*y), >= 0 means inside
    for (size_t k = 0; k < n; ++k)
        slack[k] = rhs - a * poly.pts[k].x - b * poly.pts[k].y;

    // Emitted vertices paired with the label of the edge arriving at them.
    std::vector<RPoint> pts;
    std::vector<EdgeLabel> in_labels;
    pts.reserve(n + 2);
    in_labels.reserve(n + 2);

    for (size_t k = 0; k < n; ++k) {
        size_t k2 = (k + 1) % n;
        const RPoint& A = poly.pts[k];
        const RPoint& B = poly.pts[k2];
        const EdgeLabel& L = poly.labels[k];
        const bool a_in = !slack[k].is_negative();
        const bool b_in = !slack[k2].is_negative();
        if (a_in && b_in) {
            pts.push_back(B);
            in_labels.push_back(L);
        } else if (a_in && !b_in) {
            Rational t = slack[k] / (slack[k] - slack[k2]);
            pts.push_back(RPoint{A.x + t * (B.x - A.x), A.y + t * (B.y - A.y)});
            in_labels.push_back(L);
        } else if (!a_in && b_in) {
            Rational t = slack[k] / (slack[k] - slack[k2]);
            pts.push_back(RPoint{A.x + t * (B.x - A.x), A.y + t * (B.y - A.y)});
            in_labels.push_back(cut_label); // travelled along the cut line
            pts.push_back(B);
            in_labels.push_back(L);
        }
    }

    LabeledPolygon out;
    out.pts = std::move(pts);
    // Convert arriving-edge labels to departing-edge labels.
    size_t m = out.pts.size();
    out.labels.resize(m);
    for (size_t k = 0; k < m; ++k) out.labels[k] = in_labels[(k + 1) % m];
    normalize_polygon(out);
    return out;
}

Rational polygon_area2(const std::vector<RPoint>& pts) {
    Rational s(0);
    size_t n = pts.size();
    for (size_t k = 0; k < n; ++k) {
        size_t k2 = (k + 1) % n;
        s += pts[k].x * pts[k2].y - pts[k2].x * pts[k].y;
    }
    return s;
}

Rational orient(const RPoint& a, const RPoint& b, const RPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b) {
    if (!orient(a, b, p).is_zero()) return false;
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
           min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool segments_intersect(const RPoint& a, const RPoint& b, const RPoint& c, const RPoint& d) {
    const int o1 = orient(a, b, c).sign();
    const int o2 = orient(a, b, d).sign();
    const int o3 = orient(c, d, a).sign();
    const int o4 = orient(c, d, b).sign();
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

bool segment_intersects_box(const RPoint& a, const RPoint& b,
                            const Rational& x0, const Rational& x1,
                            const Rational& y0, const Rational& y1) {
    auto inside = [&](const RPoint& p) {
        return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
    };
    if (inside(a) || inside(b)) return true;
    const RPoint c00{x0, y0}, c10{x1, y0}, c11{x1, y1}, c01{x0, y1};
    return segments_intersect(a, b, c00, c10) || segments_intersect(a, b, c10, c11) ||
           segments_intersect(a, b, c11, c01) || segments_intersect(a, b, c01, c00);
}

} // namespace tropsand
