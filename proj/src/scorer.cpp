#include "rightangle/scorer.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "angle_table.hpp"
#include "rightangle/error.hpp"

namespace rightangle {

namespace {

void validate_k(const Configuration& s, std::size_t k, std::uint64_t budget) {
    if (k < 3 || k > s.size()) {
        throw Error(ErrorCode::InvalidK, "k=" + std::to_string(k) + " must satisfy 3 <= k <= n=" +
                                             std::to_string(s.size()));
    }
    const std::uint64_t count = binomial(s.size(), k);
    if (count > budget) {
        throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(s.size()) + "," +
                                                   std::to_string(k) + ")=" +
                                                   std::to_string(count) + " exceeds budget " +
                                                   std::to_string(budget));
    }
}

GammaResult finish(GammaResult r) {
    r.delta_deg = 90.0 - r.gamma_deg;
    return r;
}

GammaResult gamma_oracle(const detail::AngleTable& table, std::size_t k) {
    GammaResult best;
    bool have = false;
    for_each_subset(table.size(), k, [&](std::span<const std::size_t> subset) {
        ++best.subsets_examined;
        const DeviationReport m = detail::subset_min(table, subset);
        if (!have || m.deviation_deg > best.gamma_deg) {
            best.gamma_deg = m.deviation_deg;
            best.witness.assign(subset.begin(), subset.end());
            best.argmin_angle = m;
            have = true;
        }
    });
    return best;
}

/// Depth-first extension in lexicographic order. The running minimum of a
/// partial subset only decreases as points are added, so a branch whose
/// minimum is already <= the incumbent cannot yield a strictly better subset.
class PrunedSearch {
public:
    PrunedSearch(const detail::AngleTable& table, std::size_t k)
        : table_(table), n_(table.size()), k_(k), chosen_(k), partial_(k + 1) {}

    GammaResult run() {
        partial_[0] = {};
        partial_[0].deviation_deg = std::numeric_limits<double>::infinity();
        extend(0, 0);
        return result_;
    }

private:
    void extend(std::size_t depth, std::size_t first) {
        for (std::size_t q = first; q + (k_ - depth) <= n_; ++q) {
            chosen_[depth] = q;
            DeviationReport m = partial_[depth];
            add_angles(depth, q, m);
            if (have_ && m.deviation_deg <= result_.gamma_deg) {
                ++result_.subsets_pruned;
                continue;
            }
            if (depth + 1 == k_) {
                ++result_.subsets_examined;
                result_.gamma_deg = m.deviation_deg;
                result_.witness.assign(chosen_.begin(), chosen_.end());
                result_.argmin_angle = m;
                have_ = true;
            } else {
                partial_[depth + 1] = m;
                extend(depth + 1, q + 1);
            }
        }
    }

    // Fold in every angle that involves the new point q.
    void add_angles(std::size_t depth, std::size_t q, DeviationReport& m) const {
        for (std::size_t i = 0; i < depth; ++i) {
            for (std::size_t j = i + 1; j < depth; ++j) {
                take(table_.report(chosen_[i], q, chosen_[j]), m);
                take(table_.report(q, chosen_[i], chosen_[j]), m);
                take(table_.report(q, chosen_[j], chosen_[i]), m);
            }
        }
    }

    static void take(const DeviationReport& r, DeviationReport& m) {
        if (precedes(r, m)) m = r;
    }

    const detail::AngleTable& table_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> chosen_;
    std::vector<DeviationReport> partial_;
    GammaResult result_;
    bool have_ = false;
};

}  // namespace

bool precedes(const DeviationReport& lhs, const DeviationReport& rhs) noexcept {
    if (lhs.deviation_deg != rhs.deviation_deg) return lhs.deviation_deg < rhs.deviation_deg;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    return lhs.c < rhs.c;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; split the division to avoid overflow.
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t factor = (n - k + i) / (i / g);
        r /= g;
        if (r > kMax / factor) return kMax;
        r *= factor;
    }
    return r;
}

DeviationReport subset_min_deviation(const Configuration& s, std::span<const std::size_t> subset) {
    if (subset.size() < 3) {
        throw Error(ErrorCode::SubsetTooSmall, "subset needs at least three points");
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= s.size()) {
            throw Error(ErrorCode::DegenerateInput, "subset index " + std::to_string(subset[i]) +
                                                        " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (subset[i] == subset[j]) {
                throw Error(ErrorCode::DegenerateInput, "repeated subset index " +
                                                            std::to_string(subset[i]));
            }
        }
    }
    DeviationReport best{};
    bool have = false;
    for (std::size_t b : subset) {
        for (std::size_t a : subset) {
            for (std::size_t c : subset) {
                if (a == b || c == b || a >= c) continue;
                const double ang = angle_at(s[a], s[b], s[c]);
                const DeviationReport r{a, b, c, ang, std::abs(ang - 90.0)};
                if (!have || precedes(r, best)) {
                    best = r;
                    have = true;
                }
            }
        }
    }
    return best;
}

GammaResult gamma(const Configuration& s, std::size_t k, const ScoreOptions& options) {
    validate_k(s, k, options.budget);
    const detail::AngleTable table(s.points());
    if (options.mode == ScoreMode::oracle) return finish(gamma_oracle(table, k));
    return finish(PrunedSearch(table, k).run());
}

std::vector<SubsetArgmin> all_subset_argmins(const Configuration& s, std::size_t k,
                                             std::uint64_t budget) {
    validate_k(s, k, budget);
    const detail::AngleTable table(s.points());
    std::vector<SubsetArgmin> out;
    out.reserve(binomial(s.size(), k));
    for_each_subset(s.size(), k, [&](std::span<const std::size_t> subset) {
        out.push_back({SubsetIndices(subset.begin(), subset.end()), detail::subset_min(table, subset)});
    });
    return out;
}

}  // namespace rightangle
