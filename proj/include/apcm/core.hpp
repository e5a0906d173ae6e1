#pragma once

// Shared domain types for the clustering toolkit: a dense row-major matrix,
// the DataSet, clustering reports, CSV ingestion and distance helpers.
//
// Cluster and class indices are zero-based throughout the library; the CLI
// and the file formats present them one-based.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apcm {

/// Bad input data: unreadable files, malformed rows, degenerate data sets.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (mismatched lengths and similar).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense row-major matrix of doubles. Rows are contiguous, so a row can be
/// handed out as a span.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    std::span<const double> values() const noexcept { return data_; }

    void append_row(std::span<const double> values);

    /// Rows listed in `keep`, in that order.
    Matrix select_rows(std::span<const std::size_t> keep) const;
    /// Columns listed in `keep`, in that order.
    Matrix select_cols(std::span<const std::size_t> keep) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// N points in l dimensions, optionally with ground-truth classes.
///
/// `centers`, when present, holds the true cluster centres (generator means for
/// synthetic sets). Classes beyond `centers.rows()` (e.g. uniform noise) have no
/// centre.
struct DataSet {
    Matrix points;
    std::optional<std::vector<std::size_t>> truth;
    std::optional<Matrix> centers;
    std::string name;

    std::size_t size() const noexcept { return points.rows(); }
    std::size_t dim() const noexcept { return points.cols(); }
    std::size_t class_count() const;
};

/// Throws DataError unless N >= 1, l >= 1, all coordinates are finite and the
/// truth vector (if any) has length N with contiguous classes 0..K-1.
void validate(const DataSet& data);

/// Output of fuzzy c-means; seeds PCM and APCM.
struct FcmResult {
    Matrix theta;  // m x l
    Matrix u;      // N x m, rows sum to one
    double q = 2.0;
    std::size_t iterations = 0;
    /// Fewer than m distinct points existed, so the initial representatives
    /// were drawn with replacement.
    bool sampled_with_replacement = false;
};

enum class Algorithm { fcm, pcm, apcm };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& text);

/// Result of one clustering run, in the shape of the comparison tables.
struct ClusteringReport {
    Algorithm algorithm = Algorithm::apcm;
    std::size_t m_ini = 0;
    std::size_t m_final = 0;
    std::vector<std::size_t> labels;  // in [0, m_final)
    Matrix theta;                     // m_final x l
    std::vector<double> gamma;        // m_final
    std::optional<double> rm;
    std::optional<double> sr;
    std::optional<double> md;
    std::size_t iterations = 0;
    double elapsed_ms = 0.0;

    // Run parameters, echoed into the JSON report.
    std::optional<double> alpha;
    std::optional<double> K;
    double q = 2.0;

    /// Representatives folded into another one because they coincided (PCM).
    std::size_t coincident_merged = 0;

    bool operator==(const ClusteringReport&) const = default;
};

enum class HeaderMode { absent, present, detect };

/// Reads a comma-separated file. `label_column` selects a class column by
/// header name or by the keyword "last"; its values may be arbitrary strings
/// and are re-indexed by first appearance.
DataSet load_csv(const std::filesystem::path& path, HeaderMode header = HeaderMode::detect,
                 const std::optional<std::string>& label_column = std::nullopt);
DataSet parse_csv(std::istream& in, HeaderMode header = HeaderMode::detect,
                  const std::optional<std::string>& label_column = std::nullopt,
                  const std::string& name = "");

/// Writes points (and one-based truth labels in a trailing "class" column when
/// present) using shortest round-trip number formatting.
void write_csv(std::ostream& out, const DataSet& data);
void write_csv(const std::filesystem::path& path, const DataSet& data);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

double squared_distance(std::span<const double> x, std::span<const double> y);
double distance(std::span<const double> x, std::span<const double> y);

struct BoundingBox {
    std::vector<double> lo;
    std::vector<double> hi;

    bool contains(std::span<const double> x, double slack = 0.0) const;
};

BoundingBox bounding_box(const Matrix& points);

/// Length of the bounding-box diagonal. Upper-bounds the true diameter and is
/// O(N l) to compute.
double data_diameter(const Matrix& points);

/// Per-class empirical means (class k in row k).
Matrix class_means(const Matrix& points, std::span<const std::size_t> truth, std::size_t classes);

}  // namespace apcm
