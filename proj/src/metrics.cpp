#include "apcm/metrics.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace apcm {

namespace {

void require_same_length(std::span<const std::size_t> labels, std::span<const std::size_t> truth,
                         const char* who) {
    if (labels.size() != truth.size()) {
        throw ContractViolation(std::string(who) + ": " + std::to_string(labels.size()) + " labels vs " +
                                std::to_string(truth.size()) + " truth entries");
    }
}

std::uint64_t pairs(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

double rand_measure(std::span<const std::size_t> labels, std::span<const std::size_t> truth) {
    require_same_length(labels, truth, "rand_measure");
    const std::uint64_t n = labels.size();
    if (n < 2) throw ContractViolation("rand_measure: undefined for fewer than two points");

    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> joint;
    std::map<std::size_t, std::uint64_t> by_label;
    std::map<std::size_t, std::uint64_t> by_truth;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        ++joint[{labels[i], truth[i]}];
        ++by_label[labels[i]];
        ++by_truth[truth[i]];
    }
    std::uint64_t together_both = 0;
    for (const auto& [key, count] : joint) together_both += pairs(count);
    std::uint64_t together_labels = 0;
    for (const auto& [key, count] : by_label) together_labels += pairs(count);
    std::uint64_t together_truth = 0;
    for (const auto& [key, count] : by_truth) together_truth += pairs(count);

    const std::uint64_t total = pairs(n);
    const std::uint64_t apart_both = total - (together_labels + together_truth - together_both);
    return 100.0 * static_cast<double>(together_both + apart_both) / static_cast<double>(total);
}

double success_rate(std::span<const std::size_t> labels, std::span<const std::size_t> truth) {
    require_same_length(labels, truth, "success_rate");
    if (labels.empty()) return 0.0;

    // cluster -> (class -> count); std::map keeps classes ascending for the tie rule.
    std::map<std::size_t, std::map<std::size_t, std::size_t>> overlap;
    for (std::size_t i = 0; i < labels.size(); ++i) ++overlap[labels[i]][truth[i]];

    std::size_t correct = 0;
    for (const auto& [cluster, counts] : overlap) {
        std::size_t best = 0;
        for (const auto& [cls, count] : counts) best = std::max(best, count);
        correct += best;
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(labels.size());
}

double mean_center_distance(const Matrix& theta, const TruthCenters& truth) {
    const Matrix& centers = truth.centers;
    if (theta.rows() == 0 || centers.rows() == 0) {
        throw ContractViolation("mean_center_distance: empty representatives or centres");
    }
    const bool enough = theta.rows() >= centers.rows();
    const Matrix& from = enough ? centers : theta;
    const Matrix& to = enough ? theta : centers;

    double sum = 0.0;
    for (std::size_t a = 0; a < from.rows(); ++a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < to.rows(); ++b) nearest = std::min(nearest, distance(from.row(a), to.row(b)));
        sum += nearest;
    }
    return sum / static_cast<double>(from.rows());
}

std::optional<TruthCenters> truth_centers(const DataSet& data) {
    if (data.centers) return TruthCenters{*data.centers};
    if (!data.truth) return std::nullopt;
    return TruthCenters{class_means(data.points, *data.truth, data.class_count())};
}

void evaluate(ClusteringReport& report, const DataSet& data) {
    if (!data.truth) return;
    if (data.size() >= 2) report.rm = rand_measure(report.labels, *data.truth);
    report.sr = success_rate(report.labels, *data.truth);
    if (const auto centers = truth_centers(data); centers && report.theta.rows() > 0) {
        report.md = mean_center_distance(report.theta, *centers);
    }
}

}  // namespace apcm
