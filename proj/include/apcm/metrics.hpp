#pragma once

// External validation measures: Rand measure, success rate and the mean
// distance between true centres and final representatives.

#include "apcm/core.hpp"

namespace apcm {

/// Ground-truth cluster centres, one per row.
struct TruthCenters {
    Matrix centers;
};

/// Percentage of point pairs on which the two partitions agree (both together
/// or both apart). Throws ContractViolation for N < 2 or mismatched lengths.
double rand_measure(std::span<const std::size_t> labels, std::span<const std::size_t> truth);

/// Each predicted cluster maps to the class it overlaps most (ties toward the
/// lower class index, several clusters may share a class); returns the
/// percentage of points whose mapped class equals their true class.
double success_rate(std::span<const std::size_t> labels, std::span<const std::size_t> truth);

/// With at least as many representatives as true centres: mean over true
/// centres of the distance to the nearest representative. With fewer: mean
/// over representatives of the distance to the nearest true centre.
double mean_center_distance(const Matrix& theta, const TruthCenters& truth);

/// True centres for a data set: generator means when recorded, otherwise the
/// per-class empirical means. Empty when the set has no truth.
std::optional<TruthCenters> truth_centers(const DataSet& data);

/// Fills rm, sr and md when the data set carries ground truth.
void evaluate(ClusteringReport& report, const DataSet& data);

}  // namespace apcm
