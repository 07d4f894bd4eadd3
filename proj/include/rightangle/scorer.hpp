#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rightangle/geometry.hpp"

namespace rightangle {

/// Sorted, distinct indices into a Configuration.
using SubsetIndices = std::vector<std::size_t>;

/// One vertex-labelled angle a-b-c (vertex b, endpoints stored with a < c).
struct DeviationReport {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    double angle_deg = 0.0;
    double deviation_deg = 0.0;
};

/// Strict total order used for every argmin: smaller deviation first, then
/// lexicographically smaller (b, a, c).
bool precedes(const DeviationReport& lhs, const DeviationReport& rhs) noexcept;

struct GammaResult {
    double gamma_deg = 0.0;
    double delta_deg = 90.0;  // 90 - gamma_deg
    SubsetIndices witness;
    DeviationReport argmin_angle;
    std::uint64_t subsets_examined = 0;
    std::uint64_t subsets_pruned = 0;
};

enum class ScoreMode { oracle, pruned };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ScoreOptions {
    ScoreMode mode = ScoreMode::pruned;
    std::uint64_t budget = kDefaultBudget;
};

struct SubsetArgmin {
    SubsetIndices subset;
    DeviationReport angle;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Minimum-deviation angle among the 3*C(k,3) angles of `subset`.
DeviationReport subset_min_deviation(const Configuration& s, std::span<const std::size_t> subset);

/// gamma(S,k): max over k-subsets of the subset's minimum deviation. The
/// witness is the lexicographically first subset attaining the maximum; both
/// modes agree exactly on value, witness and argmin angle.
GammaResult gamma(const Configuration& s, std::size_t k, const ScoreOptions& options = {});

/// Argmin angle for every k-subset, in lexicographic subset order.
std::vector<SubsetArgmin> all_subset_argmins(const Configuration& s, std::size_t k,
                                             std::uint64_t budget = kDefaultBudget);

/// Calls fn(span<const size_t>) for every k-subset of {0..n-1} in
/// lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace rightangle
