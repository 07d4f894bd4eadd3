#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "angle_table.hpp"
#include "rightangle/error.hpp"
#include "rightangle/optimizer.hpp"

namespace rightangle {

namespace {

constexpr int kMaxRedraws = 64;

// Portable draws on top of mt19937_64 so a seed gives the same chain with
// any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct Cell {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    Point point() const { return {static_cast<double>(x), static_cast<double>(y)}; }
};

void validate(const AnnealParams& p) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidParams, what); };
    if (p.k < 3 || p.k > p.n) fail("need 3 <= k <= n");
    if (p.grid < 1) fail("grid side must be positive");
    if (static_cast<double>(p.n) > static_cast<double>(p.grid) * static_cast<double>(p.grid)) {
        fail("n exceeds the number of lattice cells");
    }
    if (!(p.t_initial > 0.0)) fail("initial temperature must be positive");
    if (!(p.cooling > 0.0 && p.cooling < 1.0)) fail("cooling must lie in (0, 1)");
    if (!(p.relocate_prob >= 0.0 && p.relocate_prob <= 1.0)) fail("relocate_prob must lie in [0, 1]");
    if (p.local_radius < 1) fail("local_radius must be >= 1");
    if (binomial(p.n, p.k) > p.budget) {
        throw Error(ErrorCode::BudgetExceeded, "C(n,k) exceeds the enumeration budget");
    }
}

class Chain {
public:
    explicit Chain(const AnnealParams& p) : p_(p), rng_(p.seed), cells_(initial_cells()),
                                            table_(to_points(cells_)) {
        containing_.resize(p_.n);
        for_each_subset(p_.n, p_.k, [&](std::span<const std::size_t> subset) {
            const std::size_t id = mins_.size();
            subsets_.insert(subsets_.end(), subset.begin(), subset.end());
            mins_.push_back(detail::subset_min(table_, subset).deviation_deg);
            for (std::size_t i : subset) containing_[i].push_back(id);
        });
        excluding_.resize(p_.n);
        for (std::size_t i = 0; i < p_.n; ++i) {
            std::vector<bool> in(mins_.size(), false);
            for (std::size_t id : containing_[i]) in[id] = true;
            for (std::size_t id = 0; id < mins_.size(); ++id) {
                if (!in[id]) excluding_[i].push_back(id);
            }
        }
        candidate_.resize(mins_.size());
    }

    AnnealResult run() {
        double current = *std::max_element(mins_.begin(), mins_.end());
        double best = current;
        std::vector<Cell> best_cells = cells_;
        double temperature = p_.t_initial;

        std::vector<TraceRecord> trace;
        trace.push_back({0, temperature, current, best});
        std::uint64_t accepted = 0;
        std::uint64_t skipped = 0;

        for (std::uint64_t iter = 1; iter <= p_.iterations; ++iter) {
            const std::size_t moved = rng_.below(p_.n);
            const std::optional<Cell> target = propose(moved);
            if (!target) {
                ++skipped;
            } else {
                table_.set_point(moved, target->point());
                const double proposed = evaluate(moved);
                const bool accept = proposed <= current ||
                                    rng_.unit() < std::exp((current - proposed) / temperature);
                if (accept) {
                    ++accepted;
                    cells_[moved] = *target;
                    for (std::size_t i = 0; i < containing_[moved].size(); ++i) {
                        mins_[containing_[moved][i]] = candidate_[i];
                    }
                    current = proposed;
                    if (current < best) {
                        best = current;
                        best_cells = cells_;
                    }
                } else {
                    table_.set_point(moved, cells_[moved].point());
                }
            }
            if (p_.check_invariants) check_invariants();
            if ((p_.trace_every != 0 && iter % p_.trace_every == 0) || iter == p_.iterations) {
                trace.push_back({iter, temperature, current, best});
            }
            temperature *= p_.cooling;
        }

        Configuration best_config(to_points(best_cells));
        GammaResult scored = gamma(best_config, p_.k, {ScoreMode::pruned, p_.budget});
        return {std::move(best_config), std::move(scored), std::move(trace), accepted, skipped};
    }

private:
    static std::vector<Point> to_points(const std::vector<Cell>& cells) {
        std::vector<Point> pts;
        pts.reserve(cells.size());
        for (const Cell& c : cells) pts.push_back(c.point());
        return pts;
    }

    bool occupied(const Cell& c) const {
        return std::find(cells_.begin(), cells_.end(), c) != cells_.end();
    }

    Cell uniform_cell() {
        const auto side = static_cast<std::uint64_t>(p_.grid);
        return {static_cast<std::int64_t>(rng_.below(side)) + 1,
                static_cast<std::int64_t>(rng_.below(side)) + 1};
    }

    std::vector<Cell> initial_cells() {
        std::vector<Cell> cells;
        cells.reserve(p_.n);
        while (cells.size() < p_.n) {
            const Cell c = uniform_cell();
            if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
        }
        return cells;
    }

    std::optional<Cell> propose(std::size_t moved) {
        if (rng_.unit() < p_.relocate_prob) {
            for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
                const Cell c = uniform_cell();
                if (!occupied(c)) return c;
            }
            return std::nullopt;
        }
        const auto span = static_cast<std::uint64_t>(2 * p_.local_radius + 1);
        const Cell from = cells_[moved];
        for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
            const Cell c{from.x + static_cast<std::int64_t>(rng_.below(span)) - p_.local_radius,
                         from.y + static_cast<std::int64_t>(rng_.below(span)) - p_.local_radius};
            if (c.x < 1 || c.y < 1 || c.x > p_.grid || c.y > p_.grid) continue;
            if (!occupied(c)) return c;
        }
        return std::nullopt;
    }

    // Only subsets containing the moved point change; the rest keep their
    // cached minima.
    double evaluate(std::size_t moved) {
        double g = 0.0;
        const auto& ids = containing_[moved];
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::span<const std::size_t> subset(subsets_.data() + ids[i] * p_.k, p_.k);
            candidate_[i] = detail::subset_min(table_, subset).deviation_deg;
            g = std::max(g, candidate_[i]);
        }
        for (std::size_t id : excluding_[moved]) g = std::max(g, mins_[id]);
        return g;
    }

    void check_invariants() const {
        for (const Cell& c : cells_) {
            if (c.x < 1 || c.y < 1 || c.x > p_.grid || c.y > p_.grid) {
                throw std::logic_error("annealing point left the lattice");
            }
        }
        Configuration(to_points(cells_));  // throws on duplicates
    }

    const AnnealParams& p_;
    Rng rng_;
    std::vector<Cell> cells_;
    detail::AngleTable table_;
    std::vector<std::size_t> subsets_;  // flattened, k indices per subset
    std::vector<double> mins_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::vector<std::size_t>> excluding_;
    std::vector<double> candidate_;
};

}  // namespace

AnnealResult anneal(const AnnealParams& p) {
    validate(p);
    return Chain(p).run();
}

std::vector<AnnealResult> anneal_seeds(const AnnealParams& p, std::size_t seeds,
                                       std::size_t threads) {
    validate(p);
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(seeds, 1));

    std::vector<std::optional<AnnealResult>> slots(seeds);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < seeds; i = next++) {
            AnnealParams local = p;
            local.seed = p.seed + i;
            slots[i] = Chain(local).run();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<AnnealResult> out;
    out.reserve(seeds);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace rightangle
