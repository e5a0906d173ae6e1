#pragma once

// Seeded generators for the synthetic experiments. Truth classes follow
// component order; uniform noise, when present, is one extra class after the
// Gaussian components. `centers` holds the component means.

#include <cstdint>
#include <optional>

#include "apcm/core.hpp"

namespace apcm {

struct GaussianComponent {
    std::vector<double> mean;
    std::vector<double> variance;  // diagonal of the covariance, >= 0
    std::size_t count = 0;
};

struct SyntheticSpec {
    std::vector<GaussianComponent> components;
    std::size_t noise_count = 0;
    /// Defaults to the bounding box of the Gaussian samples.
    std::optional<BoundingBox> noise_box;
    std::uint64_t seed = 42;
    std::string name = "mixture";
};

/// Throws ContractViolation on inconsistent dimensions, negative variances,
/// an inverted noise box, or an empty result.
DataSet gen_gaussian_mixture(const SyntheticSpec& spec);

/// The 17 fixed points of the two-cluster toy set (12 points, then 5).
DataSet gen_experiment1();

/// Three 2-D clusters, covariance 0.4 I, 500/300/300 points.
DataSet gen_experiment2(std::uint64_t seed);

/// Three 2-D clusters with covariances 10 I, 20 I, 1 I and 1000/1000/100
/// points, plus 200 uniform noise points. N = 2300.
DataSet gen_experiment3(std::uint64_t seed);

/// 1-D: 50 points around 28 (variance 100) and 50 around 67 (variance 121).
DataSet gen_fig4(std::uint64_t seed);

/// `count` points from N(0, sigma^2 I) in `dim` dimensions.
DataSet gen_single_gaussian(std::size_t count, std::size_t dim, double sigma, std::uint64_t seed);

/// Generator by name: experiment1, experiment2, experiment3, fig4.
/// Throws std::invalid_argument for unknown names.
DataSet generate_named(const std::string& name, std::uint64_t seed);

}  // namespace apcm
