#pragma once

// Fuzzy c-means. Used as the initializer for PCM and APCM, and as a baseline.

#include "apcm/core.hpp"

namespace apcm {

struct FcmOptions {
    double q = 2.0;  // fuzzifier, > 1
    double tol = 1e-6;
    std::size_t max_iter = 100;
    std::uint64_t seed = 42;
};

/// Runs FCM with `m` clusters, starting from m distinct data points drawn
/// uniformly with the given seed. Stops once no representative moves by
/// `tol` or more (Euclidean), or after `max_iter` updates.
///
/// Throws ContractViolation if m == 0 or m > N.
FcmResult fcm_run(const DataSet& data, std::size_t m, const FcmOptions& options = {});

/// FCM as a stand-alone clusterer: hardened labels, clusters owning no point
/// dropped, and gamma_j reported as the fuzzy cluster variance
/// sum_i u_ij d_ij^2 / sum_i u_ij.
ClusteringReport fcm_cluster(const DataSet& data, std::size_t m, const FcmOptions& options = {});

/// Membership update u_ij = 1 / sum_k (d_ij / d_ik)^(2/(q-1)). A point that
/// coincides with one or more representatives is assigned crisply to the
/// lowest-index one.
Matrix fcm_memberships(const Matrix& points, const Matrix& theta, double q);

/// theta_j = sum_i u_ij^q x_i / sum_i u_ij^q
Matrix fcm_representatives(const Matrix& points, const Matrix& u, double q);

/// Picks the initial representatives: row indices of m distinct points, or a
/// sample with replacement (flagged) when fewer than m distinct points exist.
std::vector<std::size_t> sample_initial_points(const Matrix& points, std::size_t m, std::uint64_t seed,
                                               bool& with_replacement);

}  // namespace apcm
