#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rightangle/geometry.hpp"

namespace rightangle {

/// Points file contents. Text files hold one "x y" pair per line with '#'
/// comments; JSON documents hold {"n", "k"?, "points": [[x, y], ...], "metadata"?}.
struct PointsDocument {
    Configuration points;
    std::optional<std::size_t> k;
};

PointsDocument parse_points(std::string_view text);
PointsDocument read_points_document(const std::filesystem::path& path);
Configuration load_points(const std::filesystem::path& path);

/// Shortest round-trip decimal for each coordinate; ".json" paths get the
/// structured document.
std::string format_points_text(const Configuration& s);
std::string format_points_json(const Configuration& s, std::optional<std::size_t> k = std::nullopt);
void save_points(const Configuration& s, const std::filesystem::path& path,
                 std::optional<std::size_t> k = std::nullopt);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

enum class StrokeStyle { solid, dashed, dotted };

struct PolylineSpec {
    std::vector<std::size_t> indices;
    StrokeStyle style = StrokeStyle::dashed;
};

struct SvgOptions {
    double width_px = 640.0;
    double margin_px = 40.0;
    double point_radius_px = 4.0;
    bool labels = true;
    std::vector<PolylineSpec> chains;
};

std::string svg_document(const Configuration& s, const SvgOptions& options = {});
void render_svg(const Configuration& s, const std::filesystem::path& path,
                const SvgOptions& options = {});

}  // namespace rightangle
