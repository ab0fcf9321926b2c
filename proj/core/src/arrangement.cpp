#include "tropsand/arrangement.hpp"

#include <algorithm>

#include "tropsand/errors.hpp"

namespace tropsand {

namespace {

// Face of `mono` = square ∩ {mono <= other} over all other monomials.
// Returns a degenerate polygon when the face has empty interior.
LabeledPolygon clip_face(const TropicalSeries& f, const Monomial& mono) {
    LabeledPolygon poly = unit_square_polygon();
    for (const auto& [e, c] : f.monomials()) {
        if (e == mono.e) continue;
        // mono <= other  <=>  di*x + dj*y <= dc
        const Rational di(mono.e.i - e.i);
        const Rational dj(mono.e.j - e.j);
        const Rational dc = c - mono.c;
        // Corner prescreen: slack = dc - di*cx - dj*cy at the four corners.
        // An affine function's range over the square is spanned by its corner
        // values, so all-nonnegative means the cut is redundant and
        // all-nonpositive means the face has no interior.
        const Rational s10 = dc - di;
        const Rational s11 = s10 - dj;
        const Rational s01 = dc - dj;
        const bool any_neg = dc.is_negative() || s10.is_negative() ||
                             s11.is_negative() || s01.is_negative();
        if (!any_neg) continue;
        const bool any_pos = dc.is_positive() || s10.is_positive() ||
                             s11.is_positive() || s01.is_positive();
        if (!any_pos) return {};
        poly = clip_half_plane(poly, di, dj, dc, EdgeLabel::bisector(e));
        if (poly.degenerate()) return {};
    }
    if (poly.degenerate() || !polygon_area2(poly.pts).is_positive()) return {};
    return poly;
}

bool on_square_boundary_side(const RPoint& a, const RPoint& b) {
    const Rational z(0), u(1);
    return (a.x == z && b.x == z) || (a.x == u && b.x == u) ||
           (a.y == z && b.y == z) || (a.y == u && b.y == u);
}

} // namespace

std::vector<Face> build_faces(const TropicalSeries& f) {
    if (f.empty()) throw InvalidSeriesError("build_faces: series has no monomials");
    std::vector<Face> faces;
    faces.reserve(f.size());
    for (const auto& [e, c] : f.monomials()) {
        Monomial mono{e, c};
        LabeledPolygon poly = clip_face(f, mono);
        if (!poly.degenerate()) faces.push_back(Face{std::move(mono), std::move(poly)});
    }
    return faces;
}

TropicalSeries prune_to_canonical(const TropicalSeries& f, const std::vector<Face>& faces) {
    (void)f;
    TropicalSeries out;
    for (const Face& face : faces) out.set(face.mono.e, face.mono.c);
    return out;
}

TropicalSeries canonicalize(const TropicalSeries& f) {
    if (!boundary_zero_check(f))
        throw InvalidSeriesError("canonicalize: series is not >= 0 with zero boundary");
    return prune_to_canonical(f, build_faces(f));
}

FaceArrangement build_arrangement(const TropicalSeries& f) {
    FaceArrangement arr;
    arr.faces = build_faces(f);

    for (const Face& face : arr.faces) {
        for (const RPoint& v : face.poly.pts)
            arr.cell_vertex_values.emplace(v, face.mono.value_at(v));
    }

    // Raw interior segments with the face that produced each.
    struct RawSeg {
        RPoint a, b;
        Exponent owner;
    };
    std::vector<RawSeg> raw;
    std::set<RPoint> endpoints;
    for (const Face& face : arr.faces) {
        const size_t n = face.poly.size();
        for (size_t k = 0; k < n; ++k) {
            if (face.poly.labels[k].kind != EdgeLabel::Kind::Bisector) continue;
            const RPoint& a = face.poly.pts[k];
            const RPoint& b = face.poly.pts[(k + 1) % n];
            if (on_square_boundary_side(a, b)) continue;
            raw.push_back(RawSeg{a, b, face.mono.e});
            endpoints.insert(a);
            endpoints.insert(b);
        }
    }

    // Split every raw segment at any endpoint lying in its interior, then
    // merge the two per-side copies of each piece.
    std::map<std::pair<RPoint, RPoint>, std::vector<Exponent>> pieces;
    for (const RawSeg& seg : raw) {
        std::vector<std::pair<Rational, RPoint>> cuts;
        const Rational dx = seg.b.x - seg.a.x;
        const Rational dy = seg.b.y - seg.a.y;
        for (const RPoint& p : endpoints) {
            if (p == seg.a || p == seg.b) continue;
            if (!point_on_segment(p, seg.a, seg.b)) continue;
            cuts.emplace_back(dx * (p.x - seg.a.x) + dy * (p.y - seg.a.y), p);
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        RPoint prev = seg.a;
        auto emit = [&](const RPoint& q) {
            auto key = prev < q ? std::make_pair(prev, q) : std::make_pair(q, prev);
            pieces[key].push_back(seg.owner);
            prev = q;
        };
        for (const auto& [t, p] : cuts) emit(p);
        emit(seg.b);
    }

    for (const auto& [key, owners] : pieces) {
        if (owners.size() != 2 || owners[0] == owners[1])
            throw InternalError("build_arrangement: curve piece without two distinct owners");
        arr.curve_edges.push_back(CurveEdge{key.first, key.second, owners[0], owners[1]});
    }

    std::set<RPoint> interior;
    for (const CurveEdge& e : arr.curve_edges) {
        if (e.a.in_unit_square_interior()) interior.insert(e.a);
        if (e.b.in_unit_square_interior()) interior.insert(e.b);
    }
    arr.curve_vertices.assign(interior.begin(), interior.end());
    return arr;
}

bool boundary_zero_check(const TropicalSeries& f) {
    if (f.empty()) return false;

    // Restriction to each side is a lower envelope of lines (slope, intercept)
    // in the edge parameter t in [0,1]. It is identically zero iff it is zero
    // at both endpoints and at every pairwise crossing inside.
    for (int side = 0; side < 4; ++side) {
        std::map<int, Rational> lines; // slope -> least intercept
        for (const auto& [e, c] : f.monomials()) {
            int slope;
            Rational intercept;
            switch (side) {
                case 0: slope = e.i; intercept = c; break;                  // y = 0
                case 1: slope = e.j; intercept = c + Rational(e.i); break;  // x = 1
                case 2: slope = e.i; intercept = c + Rational(e.j); break;  // y = 1
                default: slope = e.j; intercept = c; break;                 // x = 0
            }
            auto it = lines.find(slope);
            if (it == lines.end())
                lines.emplace(slope, std::move(intercept));
            else if (intercept < it->second)
                it->second = std::move(intercept);
        }
        auto envelope = [&](const Rational& t) {
            bool first = true;
            Rational best;
            for (const auto& [s, b] : lines) {
                Rational v = b + Rational(s) * t;
                if (first || v < best) { best = std::move(v); first = false; }
            }
            return best;
        };
        if (!envelope(Rational(0)).is_zero()) return false;
        if (!envelope(Rational(1)).is_zero()) return false;
        for (auto it1 = lines.begin(); it1 != lines.end(); ++it1) {
            for (auto it2 = std::next(it1); it2 != lines.end(); ++it2) {
                Rational t = (it2->second - it1->second) / Rational(it1->first - it2->first);
                if (t.is_positive() && t < Rational(1) && !envelope(t).is_zero()) return false;
            }
        }
    }

    // f >= 0 everywhere: f is linear on each face, so its minimum over the
    // square is attained at a face corner.
    for (const Face& face : build_faces(f)) {
        for (const RPoint& v : face.poly.pts)
            if (face.mono.value_at(v).is_negative()) return false;
    }
    return true;
}

Rational canonical_coefficient_cached(const std::map<RPoint, Rational>& vertex_values,
                                      int i, int j) {
    if (vertex_values.empty())
        throw InvalidSeriesError("canonical_coefficient: no cell vertices");
    bool first = true;
    Rational best;
    for (const auto& [v, fv] : vertex_values) {
        Rational cand = fv - Rational(i) * v.x - Rational(j) * v.y;
        if (first || cand > best) { best = std::move(cand); first = false; }
    }
    return best;
}

Rational canonical_coefficient(const TropicalSeries& f, int i, int j) {
    std::map<RPoint, Rational> values;
    for (const Face& face : build_faces(f)) {
        for (const RPoint& v : face.poly.pts) values.emplace(v, face.mono.value_at(v));
    }
    return canonical_coefficient_cached(values, i, j);
}

std::optional<Rational> max_slope_ratio(const std::vector<Face>& faces) {
    Rational best(0);
    for (const Face& face : faces) {
        const size_t n = face.poly.size();
        // Distance branches d0 = y, d1 = 1-x, d2 = 1-y, d3 = x; the value/d
        // ratio is linear-fractional on the face, so its maximum sits at a
        // vertex, except along a boundary edge where value and distance both
        // vanish and the limit is the inward slope of the face monomial.
        for (int branch = 0; branch < 4; ++branch) {
            auto dist = [&](const RPoint& p) -> Rational {
                switch (branch) {
                    case 0: return p.y;
                    case 1: return Rational(1) - p.x;
                    case 2: return Rational(1) - p.y;
                    default: return p.x;
                }
            };
            const int normal_slope = branch == 0 ? face.mono.e.j
                                   : branch == 1 ? -face.mono.e.i
                                   : branch == 2 ? -face.mono.e.j
                                                 : face.mono.e.i;
            for (size_t k = 0; k < n; ++k) {
                const RPoint& a = face.poly.pts[k];
                const Rational da = dist(a);
                const Rational la = face.mono.value_at(a);
                if (da.is_zero()) {
                    if (la.is_positive()) return std::nullopt; // unbounded ratio
                    const RPoint& b = face.poly.pts[(k + 1) % n];
                    if (dist(b).is_zero() && face.mono.value_at(b).is_zero() &&
                        la.is_zero() && Rational(normal_slope) > best)
                        best = Rational(normal_slope);
                } else {
                    Rational cand = la / da;
                    if (cand > best) best = std::move(cand);
                }
            }
        }
    }
    return best;
}

} // namespace tropsand
