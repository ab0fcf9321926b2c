#pragma once

/// Deterministic SVG rendering of curves, face subdivisions, and marked points.

#include <string>
#include <vector>

#include "tropsand/series.hpp"

namespace tropsand {

struct RenderSpec {
    enum class FaceColoring { None, ExponentHash, GenusHighlight };

    int canvas_px = 512;  // >= 64
    double stroke_width = 1.5;
    FaceColoring coloring = FaceColoring::None;
    double marker_radius = 4.0;
};

/// SVG 1.1 document, byte-deterministic for fixed inputs. Precondition: f
/// canonical. Draws the square, the curve edges, optional face fills, and
/// markers at the given points.
std::string render_svg(const TropicalSeries& f, const std::vector<RPoint>& points,
                       const RenderSpec& spec = {});

} // namespace tropsand
