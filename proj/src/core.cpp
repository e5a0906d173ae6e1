#include "apcm/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace apcm {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    for (const auto& r : rows) {
        append_row(std::span<const double>(r.begin(), r.size()));
    }
}

void Matrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    } else if (values.size() != cols_) {
        throw ContractViolation("Matrix::append_row: expected " + std::to_string(cols_) +
                                " values, got " + std::to_string(values.size()));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::select_rows(std::span<const std::size_t> keep) const {
    Matrix out(keep.size(), cols_);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        std::copy_n(row(keep[r]).begin(), cols_, out.row(r).begin());
    }
    return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> keep) const {
    Matrix out(rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
            out(r, c) = (*this)(r, keep[c]);
        }
    }
    return out;
}

std::size_t DataSet::class_count() const {
    if (!truth || truth->empty()) return 0;
    return *std::max_element(truth->begin(), truth->end()) + 1;
}

void validate(const DataSet& data) {
    if (data.size() == 0) throw DataError("data set '" + data.name + "' has no points");
    if (data.dim() == 0) throw DataError("data set '" + data.name + "' has no features");
    for (double v : data.points.values()) {
        if (!std::isfinite(v)) throw DataError("data set '" + data.name + "' has a non-finite coordinate");
    }
    if (data.truth) {
        if (data.truth->size() != data.size()) {
            throw DataError("truth has " + std::to_string(data.truth->size()) + " labels for " +
                            std::to_string(data.size()) + " points");
        }
        std::vector<bool> seen(data.class_count(), false);
        for (std::size_t c : *data.truth) seen[c] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw DataError("truth classes are not contiguous");
        }
    }
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::fcm: return "fcm";
        case Algorithm::pcm: return "pcm";
        case Algorithm::apcm: return "apcm";
    }
    return "unknown";
}

Algorithm algorithm_from_string(const std::string& text) {
    if (text == "fcm") return Algorithm::fcm;
    if (text == "pcm") return Algorithm::pcm;
    if (text == "apcm") return Algorithm::apcm;
    throw std::invalid_argument("unknown algorithm '" + text + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_real(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

DataSet parse_csv(std::istream& in, HeaderMode header, const std::optional<std::string>& label_column,
                  const std::string& name) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (trim(line).empty()) continue;
        lines.emplace_back(number, std::move(line));
    }
    if (lines.empty()) throw DataError("csv '" + name + "' is empty");

    const bool label_is_last = label_column && *label_column == "last";
    const bool label_by_name = label_column && !label_is_last;

    auto first = split_cells(lines.front().second);
    bool has_header = header == HeaderMode::present;
    if (header == HeaderMode::detect) {
        if (label_by_name) {
            has_header = true;
        } else {
            const std::size_t checked = label_is_last ? first.size() - 1 : first.size();
            for (std::size_t c = 0; c < checked; ++c) {
                if (!parse_real(first[c])) {
                    has_header = true;
                    break;
                }
            }
        }
    }
    if (label_by_name && !has_header) {
        throw DataError("label column '" + *label_column + "' requested but csv '" + name + "' has no header");
    }

    const std::size_t arity = first.size();
    std::optional<std::size_t> label_index;
    if (label_is_last) {
        if (arity < 2) throw DataError("csv '" + name + "' has no feature columns besides the label");
        label_index = arity - 1;
    } else if (label_by_name) {
        const auto it = std::find(first.begin(), first.end(), std::string_view(*label_column));
        if (it == first.end()) throw DataError("csv '" + name + "' has no column named '" + *label_column + "'");
        label_index = static_cast<std::size_t>(it - first.begin());
        if (arity < 2) throw DataError("csv '" + name + "' has no feature columns besides the label");
    }

    DataSet data;
    data.name = name;
    std::vector<std::size_t> truth;
    std::unordered_map<std::string, std::size_t> classes;
    std::vector<double> row;
    row.reserve(arity);

    for (std::size_t l = has_header ? 1 : 0; l < lines.size(); ++l) {
        const auto& [number, text] = lines[l];
        const auto cells = split_cells(text);
        if (cells.size() != arity) {
            throw DataError("csv '" + name + "' row " + std::to_string(number) + ": expected " +
                            std::to_string(arity) + " cells, found " + std::to_string(cells.size()));
        }
        row.clear();
        for (std::size_t c = 0; c < arity; ++c) {
            if (label_index && c == *label_index) {
                const auto [it, inserted] = classes.try_emplace(std::string(cells[c]), classes.size());
                truth.push_back(it->second);
                continue;
            }
            const auto value = parse_real(cells[c]);
            if (!value) {
                throw DataError("csv '" + name + "' row " + std::to_string(number) + ": cannot parse '" +
                                std::string(cells[c]) + "' as a real number");
            }
            row.push_back(*value);
        }
        data.points.append_row(row);
    }
    if (data.size() == 0) throw DataError("csv '" + name + "' has a header but no data rows");
    if (label_index) data.truth = std::move(truth);
    validate(data);
    return data;
}

DataSet load_csv(const std::filesystem::path& path, HeaderMode header,
                 const std::optional<std::string>& label_column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    return parse_csv(in, header, label_column, path.stem().string());
}

std::string format_real(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

void write_csv(std::ostream& out, const DataSet& data) {
    for (std::size_t c = 0; c < data.dim(); ++c) {
        out << (c ? "," : "") << 'x' << c + 1;
    }
    if (data.truth) out << ",class";
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t c = 0; c < data.dim(); ++c) {
            out << (c ? "," : "") << format_real(data.points(i, c));
        }
        if (data.truth) out << ',' << (*data.truth)[i] + 1;
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const DataSet& data) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    write_csv(out, data);
}

double squared_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ContractViolation("squared_distance: lengths " + std::to_string(x.size()) + " and " +
                                std::to_string(y.size()) + " differ");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        sum += d * d;
    }
    return sum;
}

double distance(std::span<const double> x, std::span<const double> y) {
    return std::sqrt(squared_distance(x, y));
}

bool BoundingBox::contains(std::span<const double> x, double slack) const {
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < lo[k] - slack || x[k] > hi[k] + slack) return false;
    }
    return true;
}

BoundingBox bounding_box(const Matrix& points) {
    BoundingBox box{std::vector<double>(points.row(0).begin(), points.row(0).end()),
                    std::vector<double>(points.row(0).begin(), points.row(0).end())};
    for (std::size_t i = 1; i < points.rows(); ++i) {
        for (std::size_t k = 0; k < points.cols(); ++k) {
            box.lo[k] = std::min(box.lo[k], points(i, k));
            box.hi[k] = std::max(box.hi[k], points(i, k));
        }
    }
    return box;
}

double data_diameter(const Matrix& points) {
    const auto box = bounding_box(points);
    return distance(box.lo, box.hi);
}

Matrix class_means(const Matrix& points, std::span<const std::size_t> truth, std::size_t classes) {
    Matrix means(classes, points.cols());
    std::vector<std::size_t> counts(classes, 0);
    for (std::size_t i = 0; i < points.rows(); ++i) {
        ++counts[truth[i]];
        for (std::size_t k = 0; k < points.cols(); ++k) means(truth[i], k) += points(i, k);
    }
    for (std::size_t c = 0; c < classes; ++c) {
        for (std::size_t k = 0; k < points.cols(); ++k) means(c, k) /= static_cast<double>(counts[c]);
    }
    return means;
}

}  // namespace apcm
