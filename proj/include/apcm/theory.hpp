#pragma once

// Numerical checks of the analytical properties of the adaptive scheme.

#include <cstdint>

#include "apcm/apcm.hpp"
#include "apcm/core.hpp"

namespace apcm {

// ---- l1 / l2 relation of a cluster's deviations --------------------------

struct DeviationBounds {
    double eta_sq;       // (mean deviation)^2
    double gamma_prime;  // mean squared deviation
    bool holds;          // eta_sq <= gamma_prime <= n * eta_sq, 1e-12 relative slack
};

/// Requires at least one deviation.
DeviationBounds check_deviation_bounds(std::span<const double> deviations);

/// APCM observer: after every iteration, checks each cluster's deviations
/// about its own mean. Copies share the tally.
class DeviationAuditor {
public:
    struct Tally {
        std::size_t checks = 0;
        std::size_t violations = 0;
    };

    DeviationAuditor();
    void operator()(const ApcmIteration& it) const;
    const Tally& tally() const { return *tally_; }

private:
    std::shared_ptr<Tally> tally_;
};

// ---- equal-compatibility locus of two clusters ----------------------------

struct Sphere {
    std::vector<double> center;
    double radius = 0.0;
};

struct Locus {
    Sphere sphere;
    /// Index (0 or 1) of the cluster with the smaller eta; its
    /// compatibility dominates inside the sphere.
    std::size_t inner = 1;
};

/// Points where u_1 = u_2 for two clusters with eta_1 != eta_2. With
/// k = eta_big / eta_small, the locus is the sphere centred at
/// (k theta_small - theta_big) / (k - 1) with radius sqrt(k) / (k - 1) times
/// ||theta_1 - theta_2||. Throws ContractViolation when eta_1 == eta_2 (the
/// locus is then a hyperplane) or an eta is not positive.
Locus locus_sphere(std::span<const double> theta1, std::span<const double> theta2, double eta1, double eta2);

/// ||x - theta_1||^2 / eta_1 - ||x - theta_2||^2 / eta_2: positive exactly
/// where u_2(x) > u_1(x), independent of eta_hat / alpha.
double compatibility_gap(std::span<const double> x, std::span<const double> theta1,
                         std::span<const double> theta2, double eta1, double eta2);

/// Independent of locus_sphere: bisects the sign change of
/// compatibility_gap along the ray from `origin` in `direction` (unit
/// length), searching t in [0, t_max]. `origin` must lie strictly on the
/// inner side. Returns the boundary distance from `origin`.
double boundary_along_ray(std::span<const double> origin, std::span<const double> direction, double t_max,
                          std::span<const double> theta1, std::span<const double> theta2, double eta1, double eta2);

// ---- continuous-limit fixed point ---------------------------------------

struct FixedPointTrace {
    std::vector<std::vector<double>> trajectory;  // theta(0), theta(1), ...
    double contraction_est = 0.0;
};

/// Iterates theta <- sum w_i x_i / sum w_i, w_i = exp(-||x_i - theta||^2 / gamma),
/// over n_samples draws from N(0, sigma^2 I). contraction_est is the mean of
/// ||theta(t+1)|| / ||theta(t)|| over the first three steps (0 if theta
/// starts at 0). The default start is sigma e_1.
FixedPointTrace empirical_fixed_point(double sigma, double gamma, std::size_t n_samples, std::size_t n_iters,
                                      std::uint64_t seed, std::size_t dim = 2,
                                      std::optional<std::vector<double>> start = std::nullopt);

/// 2 sigma^2 / (2 sigma^2 + gamma): the derivative of the update at 0.
double expected_contraction(double sigma, double gamma);

// ---- one-dimensional cost landscape --------------------------------------

/// J(theta) = -eta_hat (eta_hat / alpha) sum_i exp(-(alpha / eta_hat) d_i^2 / eta_hat),
/// i.e. a single cluster with eta = eta_hat. Requires 1-D data.
std::vector<double> cost_landscape_1d(const DataSet& data, double eta_hat, double alpha,
                                      std::span<const double> grid);

/// Interior local minima of `values` over `grid`: a run of equal values
/// counts once, located at the run's midpoint, when both neighbours of the
/// run are strictly larger.
std::vector<double> find_local_minima(std::span<const double> grid, std::span<const double> values);

/// eta_hat of an APCM initialization from FCM with m_ini clusters.
double initial_eta_hat(const DataSet& data, std::size_t m_ini, const FcmOptions& fcm = {});

/// `count` equally spaced values from lo to hi inclusive (count >= 2).
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

// ---- single-Gaussian merge ----------------------------------------------

struct SingleClusterRun {
    ClusteringReport report;
    DeviationAuditor::Tally audit;
};

/// APCM with m_ini = 2 on `count` points from N(0, I) in `dim` dimensions.
SingleClusterRun single_gaussian_run(std::size_t count, std::size_t dim, double alpha, std::uint64_t seed);

}  // namespace apcm
