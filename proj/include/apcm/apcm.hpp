#pragma once

// Adaptive possibilistic c-means.
//
// Each cluster carries a scale gamma_j = (eta_hat / alpha) * eta_j, where eta_j
// is the mean absolute deviation of the points currently most compatible with
// the cluster and eta_hat is the smallest eta_j at initialization. A cluster
// that is the most compatible cluster of no point is removed, so the number of
// clusters m(t) shrinks from m_ini as the run proceeds.
//
// One iteration, in order:
//   1. u_ij = exp(-(alpha / eta_hat) ||x_i - theta_j||^2 / eta_j)
//   2. theta_j <- sum_i u_ij x_i / sum_i u_ij
//   3. label(i) = argmax_j u_ij; clusters absent from label are removed and the
//      rest renumbered in order
//   4. eta_j <- mean_{label(i)=j} ||x_i - mu_j||, mu_j the mean of those points
// until no surviving representative moves by tol or more.

#include <functional>

#include "apcm/core.hpp"
#include "apcm/fcm.hpp"
#include "apcm/labels.hpp"

namespace apcm {

struct ApcmOptions {
    double alpha = 1.0;
    FcmOptions fcm;
    double tol = 1e-6;
    std::size_t max_iter = 300;
    /// Clusters with eta_j <= eta_floor_rel * data diameter are not evaluated
    /// in the u update; they drop out at the next elimination step.
    double eta_floor_rel = 1e-12;
};

struct ApcmState {
    Matrix theta;                    // m(t) x l
    Matrix u;                        // N x m(t)
    std::vector<double> eta;         // m(t)
    double eta_hat = 0.0;            // fixed after init
    double alpha = 1.0;
    double eta_floor = 0.0;
    std::vector<std::size_t> label;  // N, in [0, m(t))
    std::size_t t = 0;

    std::size_t m() const noexcept { return theta.rows(); }
    /// gamma_j = (eta_hat / alpha) * eta_j
    std::vector<double> gamma() const;
    /// Clusters whose eta has fallen to the floor.
    bool has_floored_cluster() const;
};

/// theta from FCM; eta_j = sum_i u_ij ||x_i - theta_j|| / sum_i u_ij (plain
/// distance); eta_hat = min_j eta_j. Throws DataError if some eta_j is zero.
ApcmState apcm_init(const DataSet& data, std::size_t m_ini, double alpha, const FcmResult& fcm,
                    double eta_floor_rel = 1e-12);

/// Exponents (alpha / eta_hat) ||x_i - theta_j||^2 / eta_j, evaluated as
/// d^2 / gamma_j; +inf for floored clusters.
Matrix apcm_scores(const ApcmState& state, const Matrix& points);

/// u_ij = exp(-score_ij); floored clusters get a zero column.
Matrix apcm_update_u(const ApcmState& state, const Matrix& points);

/// Removes every cluster absent from `label` (theta rows, u columns, eta),
/// keeps the survivors in order and stores `label` renumbered accordingly.
ApcmState eliminate_clusters(ApcmState state, std::span<const std::size_t> label);

/// Mean absolute deviation, about their own mean, of the points carrying each
/// label. Every cluster in [0, m) must own at least one point.
std::vector<double> adapt_eta(const Matrix& points, std::span<const std::size_t> label, std::size_t m);

/// Passed to the observer after each completed iteration (after eta
/// adaptation).
struct ApcmIteration {
    std::size_t t;
    const ApcmState& state;
    const Matrix& points;
    /// Largest representative displacement over the surviving clusters.
    double shift;
};
using ApcmObserver = std::function<void(const ApcmIteration&)>;

ClusteringReport apcm_run(const DataSet& data, std::size_t m_ini, const ApcmOptions& options = {},
                          const ApcmObserver& observer = {});

/// Same, starting from an existing FCM result (for sweeps that share one
/// initialization across several alphas). Timing excludes the FCM run.
ClusteringReport apcm_run(const DataSet& data, const FcmResult& init, const ApcmOptions& options = {},
                          const ApcmObserver& observer = {});

}  // namespace apcm
