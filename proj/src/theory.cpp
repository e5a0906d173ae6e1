#include "apcm/theory.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "apcm/datagen.hpp"

namespace apcm {

DeviationBounds check_deviation_bounds(std::span<const double> deviations) {
    if (deviations.empty()) throw ContractViolation("check_deviation_bounds: need at least one deviation");
    const double n = static_cast<double>(deviations.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double d : deviations) {
        sum += d;
        sum_sq += d * d;
    }
    const double mean = sum / n;
    DeviationBounds out{mean * mean, sum_sq / n, false};
    constexpr double slack = 1e-12;
    out.holds = out.eta_sq <= out.gamma_prime * (1.0 + slack) && out.gamma_prime <= n * out.eta_sq * (1.0 + slack);
    return out;
}

DeviationAuditor::DeviationAuditor() : tally_(std::make_shared<Tally>()) {}

void DeviationAuditor::operator()(const ApcmIteration& it) const {
    const auto& state = it.state;
    const Matrix& x = it.points;
    const std::size_t m = state.m();
    Matrix mean(m, x.cols());
    std::vector<std::size_t> count(m, 0);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        ++count[state.label[i]];
        for (std::size_t k = 0; k < x.cols(); ++k) mean(state.label[i], k) += x(i, k);
    }
    std::vector<std::vector<double>> deviations(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < x.cols(); ++k) mean(j, k) /= static_cast<double>(count[j]);
    }
    for (std::size_t i = 0; i < x.rows(); ++i) {
        deviations[state.label[i]].push_back(distance(x.row(i), mean.row(state.label[i])));
    }
    for (const auto& d : deviations) {
        ++tally_->checks;
        if (!check_deviation_bounds(d).holds) ++tally_->violations;
    }
}

Locus locus_sphere(std::span<const double> theta1, std::span<const double> theta2, double eta1, double eta2) {
    if (theta1.size() != theta2.size()) throw ContractViolation("locus_sphere: dimension mismatch");
    if (!(eta1 > 0.0) || !(eta2 > 0.0)) throw ContractViolation("locus_sphere: eta must be positive");
    if (eta1 == eta2) throw ContractViolation("locus_sphere: equal eta gives a hyperplane, not a sphere");

    Locus locus;
    locus.inner = eta2 < eta1 ? 1 : 0;
    const auto small = locus.inner == 1 ? theta2 : theta1;
    const auto big = locus.inner == 1 ? theta1 : theta2;
    const double k = locus.inner == 1 ? eta1 / eta2 : eta2 / eta1;

    locus.sphere.center.resize(theta1.size());
    for (std::size_t i = 0; i < theta1.size(); ++i) locus.sphere.center[i] = (k * small[i] - big[i]) / (k - 1.0);
    locus.sphere.radius = std::sqrt(k) / (k - 1.0) * distance(theta1, theta2);
    return locus;
}

double compatibility_gap(std::span<const double> x, std::span<const double> theta1,
                         std::span<const double> theta2, double eta1, double eta2) {
    return squared_distance(x, theta1) / eta1 - squared_distance(x, theta2) / eta2;
}

double boundary_along_ray(std::span<const double> origin, std::span<const double> direction, double t_max,
                          std::span<const double> theta1, std::span<const double> theta2, double eta1, double eta2) {
    std::vector<double> x(origin.size());
    auto gap_at = [&](double t) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = origin[i] + t * direction[i];
        return compatibility_gap(x, theta1, theta2, eta1, eta2);
    };
    const bool inside_positive = gap_at(0.0) > 0.0;
    double lo = 0.0;
    double hi = t_max;
    if ((gap_at(hi) > 0.0) == inside_positive) throw ContractViolation("boundary_along_ray: no sign change");
    for (int step = 0; step < 200 && hi - lo > 0.0; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ((gap_at(mid) > 0.0) == inside_positive ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double expected_contraction(double sigma, double gamma) {
    return 2.0 * sigma * sigma / (2.0 * sigma * sigma + gamma);
}

FixedPointTrace empirical_fixed_point(double sigma, double gamma, std::size_t n_samples, std::size_t n_iters,
                                      std::uint64_t seed, std::size_t dim, std::optional<std::vector<double>> start) {
    if (!(sigma > 0.0) || !(gamma > 0.0) || n_samples == 0 || dim == 0) {
        throw ContractViolation("empirical_fixed_point: need sigma, gamma > 0 and a non-empty sample");
    }
    const Matrix x = gen_single_gaussian(n_samples, dim, sigma, seed).points;

    FixedPointTrace trace;
    std::vector<double> theta = start.value_or(std::vector<double>(dim, 0.0));
    if (!start) theta[0] = sigma;
    if (theta.size() != dim) throw ContractViolation("empirical_fixed_point: start has the wrong dimension");
    trace.trajectory.push_back(theta);

    for (std::size_t t = 0; t < n_iters; ++t) {
        std::vector<double> next(dim, 0.0);
        double weight = 0.0;
        for (std::size_t i = 0; i < x.rows(); ++i) {
            const double w = std::exp(-squared_distance(x.row(i), theta) / gamma);
            weight += w;
            for (std::size_t k = 0; k < dim; ++k) next[k] += w * x(i, k);
        }
        for (double& v : next) v /= weight;
        theta = std::move(next);
        trace.trajectory.push_back(theta);
    }

    auto norm = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    };
    const std::size_t steps = std::min<std::size_t>(3, n_iters);
    double ratio_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        const double before = norm(trace.trajectory[t]);
        if (before == 0.0) break;
        ratio_sum += norm(trace.trajectory[t + 1]) / before;
        ++used;
    }
    trace.contraction_est = used > 0 ? ratio_sum / static_cast<double>(used) : 0.0;
    return trace;
}

std::vector<double> cost_landscape_1d(const DataSet& data, double eta_hat, double alpha,
                                      std::span<const double> grid) {
    if (data.dim() != 1) throw ContractViolation("cost_landscape_1d: data must be one-dimensional");
    if (!(eta_hat > 0.0) || !(alpha > 0.0)) throw ContractViolation("cost_landscape_1d: eta_hat and alpha must be positive");
    const double gamma = eta_hat * eta_hat / alpha;
    std::vector<double> j(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double sum = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double d = data.points(i, 0) - grid[g];
            sum += std::exp(-d * d / gamma);
        }
        j[g] = -gamma * sum;
    }
    return j;
}

std::vector<double> find_local_minima(std::span<const double> grid, std::span<const double> values) {
    if (grid.size() != values.size()) throw ContractViolation("find_local_minima: grid and values differ in length");
    std::vector<double> minima;
    const std::size_t n = values.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end + 1 < n && values[end + 1] == values[start]) ++end;
        const bool left = start > 0 && values[start - 1] > values[start];
        const bool right = end + 1 < n && values[end + 1] > values[start];
        if (left && right) minima.push_back(0.5 * (grid[start] + grid[end]));
        start = end + 1;
    }
    return minima;
}

double initial_eta_hat(const DataSet& data, std::size_t m_ini, const FcmOptions& fcm) {
    return apcm_init(data, m_ini, 1.0, fcm_run(data, m_ini, fcm)).eta_hat;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    if (count < 2) throw ContractViolation("linear_grid: need at least two points");
    std::vector<double> grid(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t g = 0; g < count; ++g) grid[g] = lo + step * static_cast<double>(g);
    grid.back() = hi;
    return grid;
}

SingleClusterRun single_gaussian_run(std::size_t count, std::size_t dim, double alpha, std::uint64_t seed) {
    const DataSet data = gen_single_gaussian(count, dim, 1.0, seed);
    ApcmOptions options;
    options.alpha = alpha;
    options.fcm.seed = seed;
    DeviationAuditor auditor;
    SingleClusterRun out;
    out.report = apcm_run(data, 2, options, auditor);
    out.audit = auditor.tally();
    return out;
}

}  // namespace apcm
