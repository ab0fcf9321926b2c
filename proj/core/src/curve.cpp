#include "tropsand/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropsand/errors.hpp"

namespace tropsand {

int genus(const TropicalSeries& f) {
    int g = 0;
    for (const Face& face : build_faces(f)) {
        bool interior = true;
        for (const RPoint& v : face.poly.pts) {
            if (!v.in_unit_square_interior()) { interior = false; break; }
        }
        // Vertices strictly inside a convex region keep the whole polygon inside.
        if (interior) ++g;
    }
    return g;
}

CurveGraph curve_graph(const TropicalSeries& f, const std::vector<RPoint>& marked) {
    FaceArrangement arr = build_arrangement(f);

    std::set<RPoint> marks(marked.begin(), marked.end());
    std::set<RPoint> skeleton_vertices;
    for (const CurveEdge& e : arr.curve_edges) {
        skeleton_vertices.insert(e.a);
        skeleton_vertices.insert(e.b);
    }

    for (const RPoint& p : marks) {
        bool on = skeleton_vertices.count(p) != 0;
        for (const CurveEdge& e : arr.curve_edges) {
            if (on) break;
            on = point_on_segment(p, e.a, e.b);
        }
        if (!on) throw InputError("curve_graph: marked point not on the curve");
    }

    // Split curve edges at marked points lying in their interiors.
    std::vector<std::pair<RPoint, RPoint>> segs;
    for (const CurveEdge& e : arr.curve_edges) {
        std::vector<std::pair<Rational, RPoint>> cuts;
        const Rational dx = e.b.x - e.a.x;
        const Rational dy = e.b.y - e.a.y;
        for (const RPoint& p : marks) {
            if (p == e.a || p == e.b) continue;
            if (!point_on_segment(p, e.a, e.b)) continue;
            cuts.emplace_back(dx * (p.x - e.a.x) + dy * (p.y - e.a.y), p);
        }
        std::sort(cuts.begin(), cuts.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        RPoint prev = e.a;
        for (const auto& [t, p] : cuts) {
            segs.emplace_back(prev, p);
            prev = p;
        }
        segs.emplace_back(prev, e.b);
    }

    CurveGraph g;
    std::map<RPoint, size_t> index;
    auto vertex_id = [&](const RPoint& p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        CurveGraph::Vertex v;
        v.p = p;
        v.on_boundary = !p.in_unit_square_interior();
        v.marked = marks.count(p) != 0;
        v.at_curve_vertex = v.marked && skeleton_vertices.count(p) != 0;
        g.vertices.push_back(std::move(v));
        index.emplace(p, g.vertices.size() - 1);
        return g.vertices.size() - 1;
    };
    for (const auto& [a, b] : segs)
        g.edges.push_back(CurveGraph::Edge{vertex_id(a), vertex_id(b)});
    return g;
}

bool is_generic_tree(const TropicalSeries& f, const std::vector<RPoint>& marked) {
    CurveGraph g = curve_graph(f, marked);

    // Removing boundary endpoints and marked points as separators leaves open
    // and half-open edges; only edges with both endpoints surviving can join
    // components or close cycles, and fully open edges are isolated arcs.
    const size_t n = g.vertices.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto removed = [&](size_t v) {
        return g.vertices[v].on_boundary || g.vertices[v].marked;
    };

    size_t open_edges = 0;
    for (const auto& e : g.edges) {
        const bool ru = removed(e.u);
        const bool rv = removed(e.v);
        if (ru && rv) { ++open_edges; continue; }
        if (ru || rv) continue;
        size_t a = find(e.u), b = find(e.v);
        if (a == b) return false; // cycle
        parent[a] = b;
    }

    size_t components = open_edges;
    for (size_t v = 0; v < n; ++v)
        if (!removed(v) && find(v) == v) ++components;
    return components == 1;
}

long euler_characteristic(const TropicalSeries& f) {
    std::vector<Face> faces = build_faces(f);

    std::set<RPoint> vertices;
    for (const Face& face : faces)
        for (const RPoint& v : face.poly.pts) vertices.insert(v);

    std::set<std::pair<RPoint, RPoint>> edges;
    for (const Face& face : faces) {
        const size_t n = face.poly.size();
        for (size_t k = 0; k < n; ++k) {
            const RPoint& a = face.poly.pts[k];
            const RPoint& b = face.poly.pts[(k + 1) % n];
            std::vector<std::pair<Rational, RPoint>> cuts;
            const Rational dx = b.x - a.x;
            const Rational dy = b.y - a.y;
            for (const RPoint& p : vertices) {
                if (p == a || p == b) continue;
                if (!point_on_segment(p, a, b)) continue;
                cuts.emplace_back(dx * (p.x - a.x) + dy * (p.y - a.y), p);
            }
            std::sort(cuts.begin(), cuts.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            RPoint prev = a;
            auto emit = [&](const RPoint& q) {
                edges.insert(prev < q ? std::make_pair(prev, q) : std::make_pair(q, prev));
                prev = q;
            };
            for (const auto& [t, p] : cuts) emit(p);
            emit(b);
        }
    }

    const long v_count = static_cast<long>(vertices.size());
    const long e_count = static_cast<long>(edges.size());
    const long f_count = static_cast<long>(faces.size()) + 1; // outer face
    return v_count - e_count + f_count;
}

} // namespace tropsand
