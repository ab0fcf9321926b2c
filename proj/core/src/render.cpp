#include "tropsand/render.hpp"

#include <cstdio>

#include "tropsand/arrangement.hpp"
#include "tropsand/errors.hpp"
#include "tropsand/rng.hpp"

namespace tropsand {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string face_fill_color(Exponent e) {
    // Stable pseudo-random pastel per exponent.
    const uint64_t h = splitmix64((static_cast<uint64_t>(static_cast<uint32_t>(e.i)) << 32) ^
                                  static_cast<uint32_t>(e.j));
    const int r = 160 + static_cast<int>(h % 80);
    const int g = 160 + static_cast<int>((h >> 8) % 80);
    const int b = 160 + static_cast<int>((h >> 16) % 80);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string render_svg(const TropicalSeries& f, const std::vector<RPoint>& points,
                       const RenderSpec& spec) {
    if (spec.canvas_px < 64) throw InputError("render_svg: canvas must be at least 64 px");

    const double margin = spec.canvas_px * 0.04;
    const double side = spec.canvas_px - 2 * margin;
    auto px = [&](const Rational& x) { return margin + x.to_double() * side; };
    auto py = [&](const Rational& y) { return margin + (1.0 - y.to_double()) * side; };

    const FaceArrangement arr = build_arrangement(f);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.canvas_px) + "\" height=\"" + std::to_string(spec.canvas_px) +
           "\" viewBox=\"0 0 " + std::to_string(spec.canvas_px) + " " +
           std::to_string(spec.canvas_px) + "\">\n";

    if (spec.coloring != RenderSpec::FaceColoring::None) {
        for (const Face& face : arr.faces) {
            std::string fill;
            if (spec.coloring == RenderSpec::FaceColoring::ExponentHash) {
                fill = face_fill_color(face.mono.e);
            } else {
                bool interior = true;
                for (const RPoint& v : face.poly.pts)
                    if (!v.in_unit_square_interior()) { interior = false; break; }
                fill = interior ? "#f4c55f" : "#eeeeee";
            }
            svg += "  <polygon class=\"face\" fill=\"" + fill + "\" points=\"";
            for (size_t k = 0; k < face.poly.pts.size(); ++k) {
                if (k) svg += " ";
                svg += fmt(px(face.poly.pts[k].x)) + "," + fmt(py(face.poly.pts[k].y));
            }
            svg += "\"/>\n";
        }
    }

    svg += "  <rect class=\"omega\" x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) +
           "\" width=\"" + fmt(side) + "\" height=\"" + fmt(side) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + fmt(spec.stroke_width) +
           "\"/>\n";

    for (const CurveEdge& e : arr.curve_edges) {
        svg += "  <line class=\"curve-edge\" x1=\"" + fmt(px(e.a.x)) + "\" y1=\"" +
               fmt(py(e.a.y)) + "\" x2=\"" + fmt(px(e.b.x)) + "\" y2=\"" + fmt(py(e.b.y)) +
               "\" stroke=\"#b03030\" stroke-width=\"" + fmt(spec.stroke_width) +
               "\" stroke-linecap=\"round\"/>\n";
    }

    for (const RPoint& p : points) {
        svg += "  <circle class=\"marked-point\" cx=\"" + fmt(px(p.x)) + "\" cy=\"" +
               fmt(py(p.y)) + "\" r=\"" + fmt(spec.marker_radius) +
               "\" fill=\"#1f5fbf\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace tropsand
