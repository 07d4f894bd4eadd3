#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rightangle/error.hpp"
#include "rightangle/io.hpp"

namespace rightangle {

namespace {

using Json = nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_coordinate(std::string_view token, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad coordinate '" +
                                               std::string(token) + "'");
    }
    return v;
}

std::string shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

PointsDocument parse_json(std::string_view text) {
    try {
        const Json doc = Json::parse(text);
        std::vector<Point> pts;
        for (const Json& p : doc.at("points")) {
            if (!p.is_array() || p.size() != 2) {
                throw Error(ErrorCode::ParseError, "each point must be an [x, y] pair");
            }
            pts.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        if (doc.contains("n") && doc.at("n").get<std::size_t>() != pts.size()) {
            throw Error(ErrorCode::ParseError, "declared n does not match the point count");
        }
        std::optional<std::size_t> k;
        if (doc.contains("k") && !doc.at("k").is_null()) k = doc.at("k").get<std::size_t>();
        try {
            return {Configuration(std::move(pts)), k};
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("malformed points document: ") + ex.what());
    }
}

PointsDocument parse_text(std::string_view text) {
    std::vector<Point> pts;
    std::map<std::pair<double, double>, std::size_t> seen;  // point -> line
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto gap = line.find_first_of(" \t");
        if (gap == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                                   ": expected two coordinates");
        }
        const std::string_view xs = line.substr(0, gap);
        const std::string_view ys = trim(line.substr(gap));
        if (ys.find_first_of(" \t") != std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                                   ": expected exactly two coordinates");
        }
        const Point p{parse_coordinate(xs, line_no), parse_coordinate(ys, line_no)};
        const auto [it, fresh] = seen.try_emplace({p.x, p.y}, line_no);
        if (!fresh) {
            throw Error(ErrorCode::ParseError, "duplicate point on lines " +
                                                   std::to_string(it->second) + " and " +
                                                   std::to_string(line_no));
        }
        pts.push_back(p);
    }
    if (pts.empty()) throw Error(ErrorCode::ParseError, "no points found");
    return {Configuration(std::move(pts)), std::nullopt};
}

}  // namespace

PointsDocument parse_points(std::string_view text) {
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') return parse_json(text);
    return parse_text(text);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

PointsDocument read_points_document(const std::filesystem::path& path) {
    return parse_points(read_file(path));
}

Configuration load_points(const std::filesystem::path& path) {
    return read_points_document(path).points;
}

std::string format_points_text(const Configuration& s) {
    std::string out;
    for (const Point& p : s) out += shortest(p.x) + " " + shortest(p.y) + "\n";
    return out;
}

std::string format_points_json(const Configuration& s, std::optional<std::size_t> k) {
    Json pts = Json::array();
    for (const Point& p : s) pts.push_back({p.x, p.y});
    Json doc{{"n", s.size()}, {"points", pts}, {"metadata", Json::object()}};
    if (k) doc["k"] = *k;
    return doc.dump(2) + "\n";
}

void save_points(const Configuration& s, const std::filesystem::path& path,
                 std::optional<std::size_t> k) {
    write_file(path, path.extension() == ".json" ? format_points_json(s, k) : format_points_text(s));
}

}  // namespace rightangle
