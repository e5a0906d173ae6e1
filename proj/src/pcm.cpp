#include "apcm/pcm.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "apcm/labels.hpp"
#include "apcm/metrics.hpp"

namespace apcm {

std::vector<double> pcm_gamma_init(const FcmResult& fcm, const DataSet& data, double K) {
    if (fcm.u.rows() != data.size() || fcm.theta.cols() != data.dim()) {
        throw ContractViolation("pcm_gamma_init: FCM result does not match the data set");
    }
    const std::size_t m = fcm.theta.rows();
    std::vector<double> gamma(m);
    for (std::size_t j = 0; j < m; ++j) {
        double weighted = 0.0;
        double weight = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            weighted += fcm.u(i, j) * squared_distance(data.points.row(i), fcm.theta.row(j));
            weight += fcm.u(i, j);
        }
        if (weight <= 0.0) throw ContractViolation("pcm_gamma_init: FCM cluster " + std::to_string(j) + " has no weight");
        gamma[j] = K * weighted / weight;
    }
    return gamma;
}

Matrix compatibility_scores(const Matrix& points, const Matrix& theta, std::span<const double> gamma) {
    if (gamma.size() != theta.rows()) throw ContractViolation("compatibility_scores: one gamma per cluster required");
    Matrix scores(points.rows(), theta.rows());
    for (std::size_t i = 0; i < points.rows(); ++i) {
        for (std::size_t j = 0; j < theta.rows(); ++j) {
            scores(i, j) = gamma[j] > 0.0 ? squared_distance(points.row(i), theta.row(j)) / gamma[j]
                                          : std::numeric_limits<double>::infinity();
        }
    }
    return scores;
}

Matrix pcm_update_u(const Matrix& points, const Matrix& theta, std::span<const double> gamma) {
    Matrix u = compatibility_scores(points, theta, gamma);
    for (std::size_t i = 0; i < u.rows(); ++i) {
        for (double& v : u.row(i)) v = std::exp(-v);
    }
    return u;
}

Matrix pcm_update_theta(const Matrix& points, const Matrix& u) {
    const std::size_t m = u.cols();
    const std::size_t dim = points.cols();
    Matrix theta(m, dim);
    for (std::size_t j = 0; j < m; ++j) {
        double weight = 0.0;
        for (std::size_t i = 0; i < points.rows(); ++i) {
            weight += u(i, j);
            for (std::size_t k = 0; k < dim; ++k) theta(j, k) += u(i, j) * points(i, k);
        }
        if (!(weight > 0.0)) {
            throw ClusterCollapse(j, "pcm_update_theta: cluster " + std::to_string(j) + " has zero total compatibility");
        }
        for (std::size_t k = 0; k < dim; ++k) theta(j, k) /= weight;
    }
    return theta;
}

namespace {

// Single-linkage grouping of representatives closer than `threshold`.
// Returns the group of each representative; groups are numbered by their
// lowest member.
std::vector<std::size_t> coincident_groups(const Matrix& theta, double threshold) {
    const std::size_t m = theta.rows();
    std::vector<std::size_t> group(m);
    for (std::size_t j = 0; j < m; ++j) group[j] = j;
    auto root = [&](std::size_t j) {
        while (group[j] != j) j = group[j];
        return j;
    };
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (distance(theta.row(a), theta.row(b)) < threshold) {
                const std::size_t ra = root(a);
                const std::size_t rb = root(b);
                if (ra != rb) group[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    for (std::size_t j = 0; j < m; ++j) group[j] = root(j);
    return group;
}

}  // namespace

ClusteringReport pcm_run(const DataSet& data, std::size_t m, const PcmOptions& options, const PcmObserver& observer) {
    const auto clock_start = std::chrono::steady_clock::now();
    validate(data);
    if (!(options.K > 0.0)) throw ContractViolation("pcm_run: K must be positive");

    const FcmResult fcm = fcm_run(data, m, options.fcm);
    PcmState state;
    state.K = options.K;
    state.theta = fcm.theta;
    state.gamma = pcm_gamma_init(fcm, data, options.K);

    std::size_t t = 0;
    while (t < options.max_iter) {
        state.u = pcm_update_u(data.points, state.theta, state.gamma);
        Matrix next = pcm_update_theta(data.points, state.u);
        double shift = 0.0;
        for (std::size_t j = 0; j < m; ++j) shift = std::max(shift, distance(next.row(j), state.theta.row(j)));
        state.theta = std::move(next);
        ++t;
        if (observer) observer(PcmIteration{t, state});
        if (shift < options.tol) break;
    }

    // Merge coincident representatives, then label by the most compatible group.
    const auto group = coincident_groups(state.theta, options.merge_rel * data_diameter(data.points));
    const auto per_cluster = assign_labels_by_score(compatibility_scores(data.points, state.theta, state.gamma));
    std::vector<std::size_t> grouped(per_cluster.size());
    for (std::size_t i = 0; i < per_cluster.size(); ++i) grouped[i] = group[per_cluster[i]];

    const auto kept = occupied_clusters(grouped, m);
    ClusteringReport report;
    report.algorithm = Algorithm::pcm;
    report.m_ini = m;
    report.m_final = kept.size();
    report.labels = renumber_labels(grouped, kept, m);
    report.theta = state.theta.select_rows(kept);
    for (std::size_t j : kept) report.gamma.push_back(state.gamma[j]);
    std::size_t distinct = 0;
    for (std::size_t j = 0; j < m; ++j) distinct += group[j] == j ? 1 : 0;
    report.coincident_merged = m - distinct;
    report.iterations = t;
    report.K = options.K;
    report.q = options.fcm.q;
    evaluate(report, data);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_start).count();
    return report;
}

}  // namespace apcm
