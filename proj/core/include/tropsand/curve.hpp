#pragma once

/// Curve invariants: genus, the 1-skeleton graph with marked points, and the
/// tree criterion that characterizes generic point configurations.

#include <vector>

#include "tropsand/arrangement.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

/// Number of faces whose closed polygon avoids the square boundary.
/// Precondition: f canonical.
int genus(const TropicalSeries& f);

struct CurveGraph {
    struct Vertex {
        RPoint p;
        bool on_boundary = false;      // endpoint on the square boundary
        bool marked = false;           // member of the marked point set
        bool at_curve_vertex = false;  // marked point coinciding with a curve
                                       // vertex (non-generic position)
    };
    struct Edge {
        size_t u, v;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

/// 1-skeleton of the curve with the marked points inserted as vertices
/// (splitting the edges they lie on). Throws InputError if a marked point is
/// not on the curve.
CurveGraph curve_graph(const TropicalSeries& f, const std::vector<RPoint>& marked);

/// True iff the curve minus the marked points and the boundary is connected
/// and acyclic (a tree). This holds exactly for generic configurations, and
/// then the genus equals the number of marked points.
bool is_generic_tree(const TropicalSeries& f, const std::vector<RPoint>& marked);

/// V - E + F of the subdivision including the outer face; 2 for every
/// canonical series. Exposed for consistency checking.
long euler_characteristic(const TropicalSeries& f);

} // namespace tropsand
