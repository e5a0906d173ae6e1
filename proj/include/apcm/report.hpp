#pragma once

// JSON and CSV serialization of clustering reports. Cluster labels are
// one-based in every file format and zero-based in memory.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "apcm/core.hpp"

namespace apcm {

/// Fields: algorithm, m_ini, m_final, alpha, K, q, iterations, elapsed_ms,
/// rm, sr, md, theta (array of rows), gamma, coincident_merged, labels.
/// Absent values are null. Numbers round-trip exactly.
std::string report_to_json(const ClusteringReport& report);

/// Throws DataError on malformed input.
ClusteringReport report_from_json(const std::string& text);

void write_report(const std::filesystem::path& path, const ClusteringReport& report);
ClusteringReport read_report(const std::filesystem::path& path);

/// "point,cluster" with one row per point, both one-based.
void write_labels_csv(std::ostream& out, std::span<const std::size_t> labels);
void write_labels_csv(const std::filesystem::path& path, std::span<const std::size_t> labels);

/// One line in the layout of the comparison tables:
/// algorithm, m_ini, m_final, RM, SR, MD, iterations, time.
std::string summary_line(const ClusteringReport& report);
std::string summary_header();

}  // namespace apcm
