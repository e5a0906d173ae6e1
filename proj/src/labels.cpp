#include "apcm/labels.hpp"

#include <limits>

namespace apcm {

std::vector<std::size_t> assign_labels(const Matrix& u) {
    if (u.cols() == 0) throw ContractViolation("assign_labels: no clusters");
    std::vector<std::size_t> labels(u.rows(), 0);
    for (std::size_t i = 0; i < u.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < u.cols(); ++j) {
            if (u(i, j) > u(i, best)) best = j;
        }
        labels[i] = best;
    }
    return labels;
}

std::vector<std::size_t> assign_labels_by_score(const Matrix& scores) {
    if (scores.cols() == 0) throw ContractViolation("assign_labels_by_score: no clusters");
    std::vector<std::size_t> labels(scores.rows(), 0);
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < scores.cols(); ++j) {
            if (scores(i, j) < scores(i, best)) best = j;
        }
        labels[i] = best;
    }
    return labels;
}

std::vector<std::size_t> occupied_clusters(std::span<const std::size_t> labels, std::size_t m) {
    std::vector<bool> used(m, false);
    for (std::size_t l : labels) used[l] = true;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < m; ++j) {
        if (used[j]) kept.push_back(j);
    }
    return kept;
}

std::vector<std::size_t> renumber_labels(std::span<const std::size_t> labels, std::span<const std::size_t> kept,
                                         std::size_t m) {
    constexpr auto missing = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> mapping(m, missing);
    for (std::size_t r = 0; r < kept.size(); ++r) mapping[kept[r]] = r;
    std::vector<std::size_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (mapping[labels[i]] == missing) {
            throw ContractViolation("renumber_labels: label " + std::to_string(labels[i]) + " was removed");
        }
        out[i] = mapping[labels[i]];
    }
    return out;
}

}  // namespace apcm
