#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rightangle/geometry.hpp"
#include "rightangle/scorer.hpp"

namespace rightangle {

enum class Monotone { increasing, decreasing };

/// Longest strictly monotone subsequence in O(n log n). Among equally long
/// answers the lexicographically smallest index sequence is returned.
std::vector<std::size_t> longest_monotone_subsequence(std::span<const double> values,
                                                      Monotone direction);

struct MonotoneWitness {
    SubsetIndices subset;
    double guaranteed_deviation_deg = 0.0;  // gap width, or half of it for the centred fallback
    double measured_deviation_deg = 0.0;    // scored on the original configuration
    double rotation_deg = 0.0;
    Monotone direction = Monotone::increasing;
};

/// Direction-gap rotation followed by a k-term monotone run in y.
/// Requires n >= (k-1)^2 + 1.
MonotoneWitness monotone_witness(const Configuration& s, std::size_t k);

struct BinChainWitness {
    SubsetIndices subset;             // sorted
    std::vector<std::size_t> chain;   // same points in increasing x
    std::size_t bin = 0;
    std::size_t bin_count = 0;
};

/// Bin index of the segment from `left` to `right` (left.x < right.x): its
/// directed angle in [-90, 90) is split into m half-open bins of width 180/m.
std::size_t direction_bin(const Point& left, const Point& right, std::size_t m);

/// Label-scan pigeonhole: k points, consecutive in x-order, whose
/// consecutive segments share one direction bin. Requires distinct x
/// coordinates and n >= (k-1)^m + 1.
BinChainWitness bin_chain_witness(const Configuration& s, std::size_t k, std::size_t m);

/// Rotation (degrees) that centres the widest direction gap on `target_deg`.
double gap_rotation(const Configuration& s, double target_deg);

}  // namespace rightangle
