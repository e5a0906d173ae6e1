#include "apcm/apcm.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>

#include "apcm/metrics.hpp"
#include "apcm/pcm.hpp"

namespace apcm {

std::vector<double> ApcmState::gamma() const {
    std::vector<double> g(eta.size());
    const double scale = eta_hat / alpha;
    for (std::size_t j = 0; j < eta.size(); ++j) g[j] = scale * eta[j];
    return g;
}

bool ApcmState::has_floored_cluster() const {
    return std::any_of(eta.begin(), eta.end(), [&](double e) { return e <= eta_floor; });
}

ApcmState apcm_init(const DataSet& data, std::size_t m_ini, double alpha, const FcmResult& fcm,
                    double eta_floor_rel) {
    if (!(alpha > 0.0)) throw ContractViolation("apcm_init: alpha must be positive");
    if (fcm.theta.rows() != m_ini || fcm.u.rows() != data.size() || fcm.u.cols() != m_ini) {
        throw ContractViolation("apcm_init: FCM result does not match m_ini and the data set");
    }

    ApcmState state;
    state.alpha = alpha;
    state.theta = fcm.theta;
    state.eta.resize(m_ini);
    for (std::size_t j = 0; j < m_ini; ++j) {
        double weighted = 0.0;
        double weight = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            weighted += fcm.u(i, j) * distance(data.points.row(i), fcm.theta.row(j));
            weight += fcm.u(i, j);
        }
        state.eta[j] = weighted / weight;
        if (!(state.eta[j] > 0.0)) {
            throw DataError("apcm_init: cluster " + std::to_string(j) +
                            " has zero mean absolute deviation (all points coincide)");
        }
    }
    state.eta_hat = *std::min_element(state.eta.begin(), state.eta.end());
    state.eta_floor = eta_floor_rel * data_diameter(data.points);
    state.u = fcm.u;
    state.label = assign_labels(fcm.u);
    return state;
}

Matrix apcm_scores(const ApcmState& state, const Matrix& points) {
    auto gamma = state.gamma();
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (state.eta[j] <= state.eta_floor) gamma[j] = 0.0;
    }
    return compatibility_scores(points, state.theta, gamma);
}

Matrix apcm_update_u(const ApcmState& state, const Matrix& points) {
    Matrix u = apcm_scores(state, points);
    for (std::size_t i = 0; i < u.rows(); ++i) {
        for (double& v : u.row(i)) v = std::exp(-v);
    }
    return u;
}

ApcmState eliminate_clusters(ApcmState state, std::span<const std::size_t> label) {
    const std::size_t m = state.m();
    const auto kept = occupied_clusters(label, m);
    assert(!kept.empty());
    state.label = renumber_labels(label, kept, m);
    if (kept.size() == m) return state;

    state.theta = state.theta.select_rows(kept);
    if (state.u.cols() == m) state.u = state.u.select_cols(kept);
    std::vector<double> eta;
    for (std::size_t j : kept) eta.push_back(state.eta[j]);
    state.eta = std::move(eta);
    return state;
}

std::vector<double> adapt_eta(const Matrix& points, std::span<const std::size_t> label, std::size_t m) {
    if (label.size() != points.rows()) throw ContractViolation("adapt_eta: one label per point required");
    const std::size_t dim = points.cols();
    Matrix mean(m, dim);
    std::vector<std::size_t> count(m, 0);
    for (std::size_t i = 0; i < points.rows(); ++i) {
        ++count[label[i]];
        for (std::size_t k = 0; k < dim; ++k) mean(label[i], k) += points(i, k);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (count[j] == 0) throw ContractViolation("adapt_eta: cluster " + std::to_string(j) + " owns no point");
        for (std::size_t k = 0; k < dim; ++k) mean(j, k) /= static_cast<double>(count[j]);
    }
    std::vector<double> eta(m, 0.0);
    for (std::size_t i = 0; i < points.rows(); ++i) eta[label[i]] += distance(points.row(i), mean.row(label[i]));
    for (std::size_t j = 0; j < m; ++j) eta[j] /= static_cast<double>(count[j]);
    return eta;
}

namespace {

// Weighted means as in the PCM theta update; a cluster with no weight at all
// (every compatibility underflowed or the cluster is floored) keeps its
// position and is left to the elimination step.
Matrix update_representatives(const Matrix& points, const Matrix& u, const Matrix& previous) {
    const std::size_t dim = points.cols();
    Matrix theta(u.cols(), dim);
    for (std::size_t j = 0; j < u.cols(); ++j) {
        double weight = 0.0;
        for (std::size_t i = 0; i < points.rows(); ++i) {
            weight += u(i, j);
            for (std::size_t k = 0; k < dim; ++k) theta(j, k) += u(i, j) * points(i, k);
        }
        for (std::size_t k = 0; k < dim; ++k) {
            theta(j, k) = weight > 0.0 ? theta(j, k) / weight : previous(j, k);
        }
    }
    return theta;
}

ClusteringReport run_from_state(const DataSet& data, ApcmState state, std::size_t m_ini, const ApcmOptions& options,
                                const ApcmObserver& observer) {
    const Matrix& x = data.points;
    while (state.t < options.max_iter) {
        const Matrix scores = apcm_scores(state, x);
        state.u = Matrix(scores.rows(), scores.cols());
        for (std::size_t i = 0; i < scores.rows(); ++i) {
            for (std::size_t j = 0; j < scores.cols(); ++j) state.u(i, j) = std::exp(-scores(i, j));
        }
        Matrix next = update_representatives(x, state.u, state.theta);
        std::vector<double> moved(state.m());
        for (std::size_t j = 0; j < state.m(); ++j) moved[j] = distance(next.row(j), state.theta.row(j));
        state.theta = std::move(next);

        const auto label = assign_labels_by_score(scores);
        const auto kept = occupied_clusters(label, state.m());
        double shift = 0.0;
        for (std::size_t j : kept) shift = std::max(shift, moved[j]);
        state = eliminate_clusters(std::move(state), label);

        state.eta = adapt_eta(x, state.label, state.m());
        ++state.t;
        if (observer) observer(ApcmIteration{state.t, state, x, shift});
        if (shift < options.tol && !state.has_floored_cluster()) break;
    }

    ClusteringReport report;
    report.algorithm = Algorithm::apcm;
    report.m_ini = m_ini;
    report.m_final = state.m();
    report.labels = state.label;
    report.theta = state.theta;
    report.gamma = state.gamma();
    report.iterations = state.t;
    report.alpha = options.alpha;
    report.q = options.fcm.q;
    evaluate(report, data);
    return report;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ClusteringReport apcm_run(const DataSet& data, std::size_t m_ini, const ApcmOptions& options,
                          const ApcmObserver& observer) {
    const auto start = std::chrono::steady_clock::now();
    validate(data);
    const FcmResult fcm = fcm_run(data, m_ini, options.fcm);
    auto report = run_from_state(data, apcm_init(data, m_ini, options.alpha, fcm, options.eta_floor_rel), m_ini,
                                 options, observer);
    report.elapsed_ms = elapsed_since(start);
    return report;
}

ClusteringReport apcm_run(const DataSet& data, const FcmResult& init, const ApcmOptions& options,
                          const ApcmObserver& observer) {
    const auto start = std::chrono::steady_clock::now();
    validate(data);
    const std::size_t m_ini = init.theta.rows();
    auto report = run_from_state(data, apcm_init(data, m_ini, options.alpha, init, options.eta_floor_rel), m_ini,
                                 options, observer);
    report.elapsed_ms = elapsed_since(start);
    return report;
}

}  // namespace apcm
