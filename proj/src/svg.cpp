#include <algorithm>
#include <cstdio>
#include <string>

#include "rightangle/error.hpp"
#include "rightangle/io.hpp"

namespace rightangle {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* dash_array(StrokeStyle style) {
    switch (style) {
        case StrokeStyle::dashed: return " stroke-dasharray=\"8 5\"";
        case StrokeStyle::dotted: return " stroke-dasharray=\"2 4\"";
        case StrokeStyle::solid: return "";
    }
    return "";
}

}  // namespace

std::string svg_document(const Configuration& s, const SvgOptions& options) {
    double lo_x = s[0].x, hi_x = s[0].x, lo_y = s[0].y, hi_y = s[0].y;
    for (const Point& p : s) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double inner = options.width_px - 2.0 * options.margin_px;
    const double scale = inner / span;
    const double height = (hi_y - lo_y) * scale + 2.0 * options.margin_px;

    // SVG y grows downwards.
    auto sx = [&](double x) { return options.margin_px + (x - lo_x) * scale; };
    auto sy = [&](double y) { return height - options.margin_px - (y - lo_y) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(options.width_px) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
           num(options.width_px) + " " + num(height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const PolylineSpec& chain : options.chains) {
        std::string pts;
        for (std::size_t i : chain.indices) {
            if (i >= s.size()) {
                throw Error(ErrorCode::InvalidParams, "chain index " + std::to_string(i) +
                                                          " out of range");
            }
            if (!pts.empty()) pts += ' ';
            pts += num(sx(s[i].x)) + "," + num(sy(s[i].y));
        }
        out += "  <polyline points=\"" + pts + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"" +
               dash_array(chain.style) + "/>\n";
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += "  <circle cx=\"" + num(sx(s[i].x)) + "\" cy=\"" + num(sy(s[i].y)) + "\" r=\"" +
               num(options.point_radius_px) + "\" fill=\"black\"/>\n";
        if (options.labels) {
            out += "  <text x=\"" + num(sx(s[i].x) + options.point_radius_px + 3.0) + "\" y=\"" +
                   num(sy(s[i].y) - options.point_radius_px - 2.0) +
                   "\" font-family=\"serif\" font-size=\"14\">P<tspan baseline-shift=\"sub\" "
                   "font-size=\"10\">" +
                   std::to_string(i) + "</tspan></text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

void render_svg(const Configuration& s, const std::filesystem::path& path, const SvgOptions& options) {
    write_file(path, svg_document(s, options));
}

}  // namespace rightangle
