#pragma once

// Classical possibilistic c-means with fixed per-cluster scales gamma_j
// estimated once from an FCM run.

#include <functional>

#include "apcm/core.hpp"
#include "apcm/fcm.hpp"

namespace apcm {

struct PcmOptions {
    double K = 1.0;
    FcmOptions fcm;  // initializer settings (q, seed, FCM tol/max_iter)
    double tol = 1e-6;
    std::size_t max_iter = 300;
    /// Representatives closer than merge_rel * data diameter are reported as
    /// one cluster.
    double merge_rel = 1e-3;
};

/// Thrown by pcm_update_theta when a cluster has no weight at all.
class ClusterCollapse : public std::runtime_error {
public:
    ClusterCollapse(std::size_t cluster, const std::string& what)
        : std::runtime_error(what), cluster_(cluster) {}
    std::size_t cluster() const noexcept { return cluster_; }

private:
    std::size_t cluster_;
};

struct PcmState {
    Matrix theta;               // m x l
    Matrix u;                   // N x m
    std::vector<double> gamma;  // fixed for the whole run
    double K = 1.0;
};

/// gamma_j = K * sum_i u_ij ||x_i - theta_j||^2 / sum_i u_ij over the FCM result.
std::vector<double> pcm_gamma_init(const FcmResult& fcm, const DataSet& data, double K);

/// Exponents s_ij = ||x_i - theta_j||^2 / gamma_j; +inf where gamma_j <= 0.
Matrix compatibility_scores(const Matrix& points, const Matrix& theta, std::span<const double> gamma);

/// u_ij = exp(-||x_i - theta_j||^2 / gamma_j). A non-positive gamma_j yields
/// a zero column.
Matrix pcm_update_u(const Matrix& points, const Matrix& theta, std::span<const double> gamma);

/// theta_j = sum_i u_ij x_i / sum_i u_ij. Throws ClusterCollapse on a zero
/// column sum.
Matrix pcm_update_theta(const Matrix& points, const Matrix& u);

/// Snapshot handed to the observer after every iteration: `u` is the
/// compatibility matrix computed from the previous representatives and
/// `state.theta` holds the representatives it produced.
struct PcmIteration {
    std::size_t t;
    const PcmState& state;
};
using PcmObserver = std::function<void(const PcmIteration&)>;

/// FCM, gamma initialization, then alternating u/theta updates until no
/// representative moves by `tol` or more. Coincident representatives are
/// merged for reporting and clusters owning no point are dropped, so
/// m_final counts distinct occupied clusters.
ClusteringReport pcm_run(const DataSet& data, std::size_t m, const PcmOptions& options = {},
                         const PcmObserver& observer = {});

}  // namespace apcm
