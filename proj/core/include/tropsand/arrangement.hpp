#pragma once

/// The polygonal subdivision of the unit square induced by a min-plus series.
///
/// Each monomial's face is the region where it is minimal, computed by exact
/// half-plane clipping of the square against every other monomial. The
/// tropical curve is the union of common face boundaries.

#include <map>
#include <optional>
#include <vector>

#include "tropsand/geometry.hpp"
#include "tropsand/series.hpp"

namespace tropsand {

struct Face {
    Monomial mono;
    LabeledPolygon poly; // counterclockwise, positive area for kept faces
};

/// Interior curve segment together with the two faces it separates.
struct CurveEdge {
    RPoint a, b;
    Exponent left, right;
};

struct FaceArrangement {
    std::vector<Face> faces;
    /// Every face-polygon corner with the exact series value there.
    std::map<RPoint, Rational> cell_vertex_values;
    /// Interior 1-skeleton of the curve, split at all incident vertices and deduped.
    std::vector<CurveEdge> curve_edges;
    /// Curve-edge endpoints strictly inside the square.
    std::vector<RPoint> curve_vertices;
};

/// Faces of all stored monomials; empty-interior faces are dropped.
/// Works for non-canonical series (used by canonicalize itself).
std::vector<Face> build_faces(const TropicalSeries& f);

/// Full arrangement with curve extraction. Precondition: f canonical.
FaceArrangement build_arrangement(const TropicalSeries& f);

/// Removes every monomial whose face has empty interior. The function is
/// unchanged pointwise. Throws InvalidSeriesError unless f >= 0 on the square
/// and f = 0 on its boundary.
TropicalSeries canonicalize(const TropicalSeries& f);

/// canonicalize without the validity check, reusing already-built faces.
/// Callers must guarantee validity by other means.
TropicalSeries prune_to_canonical(const TropicalSeries& f, const std::vector<Face>& faces);

/// True iff f restricted to each boundary edge is identically zero and
/// f >= 0 at every arrangement vertex (hence on all of the square).
bool boundary_zero_check(const TropicalSeries& f);

/// Smallest coefficient for exponent (i,j) that keeps the monomial >= f on
/// the square: max over the square of (f - i*x - j*y). Attained at a cell
/// vertex. Adding (i,j) at this coefficient leaves f pointwise unchanged.
Rational canonical_coefficient(const TropicalSeries& f, int i, int j);

/// Same, over precomputed cell-vertex values.
Rational canonical_coefficient_cached(const std::map<RPoint, Rational>& vertex_values,
                                      int i, int j);

/// sup over the square of f(u) / dist(u, boundary), exact; nullopt when the
/// ratio is unbounded (series positive somewhere on the boundary). For a
/// valid series this is the largest inward slope at the boundary, and no
/// monomial with Euclidean exponent norm above it can cut below f anywhere.
std::optional<Rational> max_slope_ratio(const std::vector<Face>& faces);

} // namespace tropsand
