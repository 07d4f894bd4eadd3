#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rightangle/geometry.hpp"
#include "rightangle/scorer.hpp"

namespace rightangle {

/// One near-right angle a-b-c (vertex b) and the k-subsets it settles: each
/// element of `extras` holds the k-3 further indices completing one subset.
struct CertificateEntry {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    double deviation_deg = 0.0;
    std::vector<SubsetIndices> extras;
};

/// Grouped list of near-right angles covering every k-subset exactly once.
/// For k = 4 this is the "angle / deviation / fourth points" table layout.
struct Certificate {
    std::size_t n = 0;
    std::size_t k = 0;
    double bound_deg = 0.0;
    std::vector<CertificateEntry> entries;
};

inline constexpr double kDefaultVerifyTolerance = 0.0005;

Certificate generate_certificate(const Configuration& s, std::size_t k,
                                 std::uint64_t budget = kDefaultBudget);

enum class CertificateCheck {
    none = 0,
    entry_deviation = 1,
    exact_cover = 2,
    subset_argmin = 3,
    bound = 4,
};

struct VerifyReport {
    bool pass = false;
    CertificateCheck failed_check = CertificateCheck::none;
    std::string message;
    std::vector<std::size_t> offending;  // entry angle (a, b, c) or subset indices
};

/// Checks, in order and failing fast: stated deviations, exact cover of all
/// C(n,k) subsets, per-subset argmin agreement, and the bound. Throws
/// Error(ShapeError) if the certificate is malformed for `s`.
VerifyReport verify_certificate(const Configuration& s, const Certificate& cert,
                                double tol_deg = kDefaultVerifyTolerance);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

/// Two-column human-readable table, one entry per half-row.
std::string render_table(const Certificate& cert);

}  // namespace rightangle
