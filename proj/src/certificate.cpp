#include "rightangle/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "angle_table.hpp"
#include "rightangle/error.hpp"

namespace rightangle {

namespace {

using Json = nlohmann::json;

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string describe_angle(std::size_t a, std::size_t b, std::size_t c) {
    return "angle P" + std::to_string(a) + " P" + std::to_string(b) + " P" + std::to_string(c);
}

SubsetIndices covered_subset(const CertificateEntry& e, const SubsetIndices& extra) {
    SubsetIndices s{e.a, e.b, e.c};
    s.insert(s.end(), extra.begin(), extra.end());
    std::sort(s.begin(), s.end());
    return s;
}

void check_shape(const Configuration& s, const Certificate& cert) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::ShapeError, what); };
    if (cert.n != s.size()) {
        fail("certificate is for n=" + std::to_string(cert.n) + " but configuration has " +
             std::to_string(s.size()) + " points");
    }
    if (cert.k < 3 || cert.k > cert.n) fail("certificate k must satisfy 3 <= k <= n");
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const CertificateEntry& e = cert.entries[i];
        const std::string where = "entry " + std::to_string(i) + ": ";
        if (e.a >= cert.n || e.b >= cert.n || e.c >= cert.n) fail(where + "index out of range");
        if (e.a == e.b || e.b == e.c || e.a == e.c) fail(where + "angle indices repeat");
        if (!std::isfinite(e.deviation_deg)) fail(where + "deviation is not finite");
        if (e.extras.empty()) fail(where + "covers no subsets");
        for (const SubsetIndices& extra : e.extras) {
            if (extra.size() != cert.k - 3) {
                fail(where + "each group needs " + std::to_string(cert.k - 3) + " extra indices");
            }
            const SubsetIndices full = covered_subset(e, extra);
            if (full.back() >= cert.n) fail(where + "extra index out of range");
            if (std::adjacent_find(full.begin(), full.end()) != full.end()) {
                fail(where + "extra index repeats an angle index");
            }
        }
    }
}

}  // namespace

Certificate generate_certificate(const Configuration& s, std::size_t k, std::uint64_t budget) {
    const std::vector<SubsetArgmin> argmins = all_subset_argmins(s, k, budget);

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> slot;
    Certificate cert;
    cert.n = s.size();
    cert.k = k;
    for (const SubsetArgmin& sa : argmins) {
        const DeviationReport& r = sa.angle;
        const auto key = std::make_tuple(r.a, r.b, r.c);
        auto [it, inserted] = slot.try_emplace(key, cert.entries.size());
        if (inserted) cert.entries.push_back({r.a, r.b, r.c, r.deviation_deg, {}});
        SubsetIndices extra;
        for (std::size_t i : sa.subset) {
            if (i != r.a && i != r.b && i != r.c) extra.push_back(i);
        }
        cert.entries[it->second].extras.push_back(std::move(extra));
        cert.bound_deg = std::max(cert.bound_deg, r.deviation_deg);
    }
    std::sort(cert.entries.begin(), cert.entries.end(),
              [](const CertificateEntry& l, const CertificateEntry& r) {
                  return std::tie(l.deviation_deg, l.b, l.a, l.c) <
                         std::tie(r.deviation_deg, r.b, r.a, r.c);
              });
    return cert;
}

VerifyReport verify_certificate(const Configuration& s, const Certificate& cert, double tol_deg) {
    check_shape(s, cert);
    VerifyReport report;
    auto fail = [&report](CertificateCheck check, std::string message,
                          std::vector<std::size_t> offending) {
        report.pass = false;
        report.failed_check = check;
        report.message = std::move(message);
        report.offending = std::move(offending);
        return report;
    };

    // (1) stated deviations
    std::vector<double> recomputed(cert.entries.size());
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const CertificateEntry& e = cert.entries[i];
        recomputed[i] = deviation(s[e.a], s[e.b], s[e.c]);
        if (!(std::abs(recomputed[i] - e.deviation_deg) <= tol_deg)) {
            char buf[128];
            std::snprintf(buf, sizeof buf, ": stated %.6f, recomputed %.6f", e.deviation_deg,
                          recomputed[i]);
            return fail(CertificateCheck::entry_deviation, describe_angle(e.a, e.b, e.c) + buf,
                        {e.a, e.b, e.c});
        }
    }

    // (2) exact cover
    std::map<SubsetIndices, std::size_t> owner;
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        for (const SubsetIndices& extra : cert.entries[i].extras) {
            SubsetIndices subset = covered_subset(cert.entries[i], extra);
            if (!owner.emplace(subset, i).second) {
                return fail(CertificateCheck::exact_cover,
                            "subset {" + join(subset) + "} is covered more than once", subset);
            }
        }
    }
    std::optional<SubsetIndices> missing;
    for_each_subset(cert.n, cert.k, [&](std::span<const std::size_t> subset) {
        if (missing) return;
        SubsetIndices key(subset.begin(), subset.end());
        if (!owner.contains(key)) missing = std::move(key);
    });
    if (missing) {
        return fail(CertificateCheck::exact_cover, "subset {" + join(*missing) + "} is not covered",
                    *missing);
    }

    // (3) the listed angle attains each subset's minimum deviation
    const detail::AngleTable table(s.points());
    for (const auto& [subset, entry] : owner) {
        const DeviationReport best = detail::subset_min(table, subset);
        if (!(recomputed[entry] - best.deviation_deg <= tol_deg)) {
            const CertificateEntry& e = cert.entries[entry];
            char buf[160];
            std::snprintf(buf, sizeof buf, " (%.6f) but minimum is %.6f at", recomputed[entry],
                          best.deviation_deg);
            return fail(CertificateCheck::subset_argmin,
                        "subset {" + join(subset) + "} lists " + describe_angle(e.a, e.b, e.c) +
                            buf + " " + describe_angle(best.a, best.b, best.c),
                        subset);
        }
    }

    // (4) bound equals the largest listed deviation
    double largest = 0.0;
    for (const CertificateEntry& e : cert.entries) largest = std::max(largest, e.deviation_deg);
    if (!(std::abs(cert.bound_deg - largest) <= tol_deg)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "bound %.6f differs from largest listed deviation %.6f",
                      cert.bound_deg, largest);
        return fail(CertificateCheck::bound, buf, {});
    }

    report.pass = true;
    report.message = "all " + std::to_string(owner.size()) + " subsets covered";
    return report;
}

std::string certificate_to_json(const Certificate& cert) {
    Json entries = Json::array();
    for (const CertificateEntry& e : cert.entries) {
        Json j{{"angle", {e.a, e.b, e.c}}, {"deviation_deg", e.deviation_deg}};
        if (cert.k == 4) {
            std::vector<std::size_t> fourth;
            for (const SubsetIndices& x : e.extras) fourth.push_back(x.front());
            j["fourth_points"] = fourth;
        } else {
            j["extra_points"] = e.extras;
        }
        entries.push_back(std::move(j));
    }
    Json doc{{"n", cert.n}, {"k", cert.k}, {"bound_deg", cert.bound_deg}, {"entries", entries}};
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
    try {
        const Json doc = Json::parse(text);
        Certificate cert;
        cert.n = doc.at("n").get<std::size_t>();
        cert.k = doc.at("k").get<std::size_t>();
        cert.bound_deg = doc.at("bound_deg").get<double>();
        for (const Json& j : doc.at("entries")) {
            const auto angle = j.at("angle").get<std::vector<std::size_t>>();
            if (angle.size() != 3) throw Error(ErrorCode::ShapeError, "angle needs three indices");
            CertificateEntry e{angle[0], angle[1], angle[2], j.at("deviation_deg").get<double>(), {}};
            if (j.contains("fourth_points")) {
                if (cert.k != 4) throw Error(ErrorCode::ShapeError, "fourth_points requires k = 4");
                for (std::size_t d : j.at("fourth_points").get<std::vector<std::size_t>>()) {
                    e.extras.push_back({d});
                }
            } else {
                e.extras = j.at("extra_points").get<std::vector<SubsetIndices>>();
            }
            cert.entries.push_back(std::move(e));
        }
        return cert;
    } catch (const Json::exception& ex) {
        throw Error(ErrorCode::ShapeError, std::string("malformed certificate: ") + ex.what());
    }
}

std::string render_table(const Certificate& cert) {
    std::vector<std::string> cells;
    for (const CertificateEntry& e : cert.entries) {
        char head[96];
        std::snprintf(head, sizeof head, "<P%zu P%zu P%zu  %8.4f deg  ", e.a, e.b, e.c,
                      e.deviation_deg);
        std::string rest;
        for (std::size_t i = 0; i < e.extras.size(); ++i) {
            if (i) rest += ", ";
            if (cert.k == 4) {
                rest += std::to_string(e.extras[i].front());
            } else {
                rest += "{" + join(e.extras[i], ",") + "}";
            }
        }
        cells.push_back(std::string(head) + rest);
    }
    std::size_t width = 0;
    for (const std::string& c : cells) width = std::max(width, c.size());

    std::ostringstream out;
    char title[128];
    std::snprintf(title, sizeof title, "n=%zu k=%zu bound=%.4f deg, %zu angles\n", cert.n, cert.k,
                  cert.bound_deg, cert.entries.size());
    out << title;
    const std::size_t rows = (cells.size() + 1) / 2;
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line = cells[r];
        if (r + rows < cells.size()) {
            line.resize(width, ' ');
            line += " | " + cells[r + rows];
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace rightangle
