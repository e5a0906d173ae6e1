#include "apcm/fcm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>

#include "apcm/labels.hpp"
#include "apcm/metrics.hpp"

namespace apcm {

std::vector<std::size_t> sample_initial_points(const Matrix& points, std::size_t m, std::uint64_t seed,
                                               bool& with_replacement) {
    const std::size_t n = points.rows();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(order[i - 1], order[pick(rng)]);
    }

    std::vector<std::size_t> chosen;
    std::set<std::vector<double>> seen;
    for (std::size_t i : order) {
        if (chosen.size() == m) break;
        std::vector<double> key(points.row(i).begin(), points.row(i).end());
        if (seen.insert(std::move(key)).second) chosen.push_back(i);
    }

    with_replacement = chosen.size() < m;
    if (with_replacement) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        while (chosen.size() < m) chosen.push_back(pick(rng));
    }
    return chosen;
}

Matrix fcm_memberships(const Matrix& points, const Matrix& theta, double q) {
    const std::size_t n = points.rows();
    const std::size_t m = theta.rows();
    const double exponent = 1.0 / (q - 1.0);
    Matrix u(n, m);
    std::vector<double> d2(m);

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t zero_at = m;
        for (std::size_t j = 0; j < m; ++j) {
            d2[j] = squared_distance(points.row(i), theta.row(j));
            if (d2[j] == 0.0 && zero_at == m) zero_at = j;
        }
        if (zero_at < m) {
            u(i, zero_at) = 1.0;
            continue;
        }
        // u_ij = w_j / sum_k w_k with w_k = d_ik^(-2/(q-1)), scaled by the
        // smallest distance so the largest weight is 1.
        const double d2_min = *std::min_element(d2.begin(), d2.end());
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            d2[j] = exponent == 1.0 ? d2_min / d2[j] : std::pow(d2_min / d2[j], exponent);
            sum += d2[j];
        }
        for (std::size_t j = 0; j < m; ++j) u(i, j) = d2[j] / sum;
    }
    return u;
}

Matrix fcm_representatives(const Matrix& points, const Matrix& u, double q) {
    const std::size_t m = u.cols();
    const std::size_t dim = points.cols();
    Matrix theta(m, dim);
    for (std::size_t j = 0; j < m; ++j) {
        double weight_sum = 0.0;
        for (std::size_t i = 0; i < points.rows(); ++i) {
            const double w = q == 2.0 ? u(i, j) * u(i, j) : std::pow(u(i, j), q);
            weight_sum += w;
            for (std::size_t k = 0; k < dim; ++k) theta(j, k) += w * points(i, k);
        }
        for (std::size_t k = 0; k < dim; ++k) theta(j, k) /= weight_sum;
    }
    return theta;
}

FcmResult fcm_run(const DataSet& data, std::size_t m, const FcmOptions& options) {
    if (m == 0 || m > data.size()) {
        throw ContractViolation("fcm_run: need 1 <= m <= N, got m=" + std::to_string(m) +
                                " with N=" + std::to_string(data.size()));
    }
    if (!(options.q > 1.0)) throw ContractViolation("fcm_run: fuzzifier q must exceed 1");

    FcmResult result;
    result.q = options.q;
    const auto start = sample_initial_points(data.points, m, options.seed, result.sampled_with_replacement);
    result.theta = data.points.select_rows(start);

    for (std::size_t t = 0; t < options.max_iter; ++t) {
        result.u = fcm_memberships(data.points, result.theta, options.q);
        Matrix next = fcm_representatives(data.points, result.u, options.q);
        double shift = 0.0;
        for (std::size_t j = 0; j < m; ++j) shift = std::max(shift, distance(next.row(j), result.theta.row(j)));
        result.theta = std::move(next);
        result.iterations = t + 1;
        if (shift < options.tol) break;
    }
    // Memberships consistent with the returned representatives.
    result.u = fcm_memberships(data.points, result.theta, options.q);
    return result;
}

ClusteringReport fcm_cluster(const DataSet& data, std::size_t m, const FcmOptions& options) {
    const auto clock_start = std::chrono::steady_clock::now();
    validate(data);
    const FcmResult fcm = fcm_run(data, m, options);
    const auto labels = assign_labels(fcm.u);
    const auto kept = occupied_clusters(labels, m);

    ClusteringReport report;
    report.algorithm = Algorithm::fcm;
    report.m_ini = m;
    report.m_final = kept.size();
    report.labels = renumber_labels(labels, kept, m);
    report.theta = fcm.theta.select_rows(kept);
    for (std::size_t j : kept) {
        double weighted = 0.0;
        double weight = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            weighted += fcm.u(i, j) * squared_distance(data.points.row(i), fcm.theta.row(j));
            weight += fcm.u(i, j);
        }
        report.gamma.push_back(weighted / weight);
    }
    report.iterations = fcm.iterations;
    report.q = options.q;
    evaluate(report, data);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_start).count();
    return report;
}

}  // namespace apcm
