#pragma once

#include "apcm/core.hpp"

namespace apcm {

/// label(i) = argmax_j u_ij, ties broken toward the lowest index.
/// Requires u.cols() >= 1.
std::vector<std::size_t> assign_labels(const Matrix& u);

/// label(i) = argmin_j s_ij with the same tie rule. Applied to the exponents
/// s_ij = d_ij^2 / gamma_j it selects the same clusters as assign_labels on
/// u = exp(-s) without losing resolution when u underflows.
std::vector<std::size_t> assign_labels_by_score(const Matrix& scores);

/// Cluster indices that own at least one label, ascending.
std::vector<std::size_t> occupied_clusters(std::span<const std::size_t> labels, std::size_t m);

/// Rewrites labels into the numbering given by `kept` (old index kept[r]
/// becomes r). Every label must be listed in `kept`.
std::vector<std::size_t> renumber_labels(std::span<const std::size_t> labels, std::span<const std::size_t> kept,
                                         std::size_t m);

}  // namespace apcm
