#include "apcm/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace apcm {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
}

}  // namespace

std::string report_to_json(const ClusteringReport& r) {
    json theta = json::array();
    for (std::size_t j = 0; j < r.theta.rows(); ++j) {
        theta.push_back(std::vector<double>(r.theta.row(j).begin(), r.theta.row(j).end()));
    }
    std::vector<std::size_t> labels(r.labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = r.labels[i] + 1;

    json out = {
        {"algorithm", to_string(r.algorithm)},
        {"m_ini", r.m_ini},
        {"m_final", r.m_final},
        {"alpha", optional_number(r.alpha)},
        {"K", optional_number(r.K)},
        {"q", r.q},
        {"iterations", r.iterations},
        {"elapsed_ms", r.elapsed_ms},
        {"rm", optional_number(r.rm)},
        {"sr", optional_number(r.sr)},
        {"md", optional_number(r.md)},
        {"theta", std::move(theta)},
        {"gamma", r.gamma},
        {"coincident_merged", r.coincident_merged},
        {"labels", labels},
    };
    return out.dump(2);
}

ClusteringReport report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        ClusteringReport r;
        r.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
        r.m_ini = j.at("m_ini").get<std::size_t>();
        r.m_final = j.at("m_final").get<std::size_t>();
        r.alpha = read_optional(j, "alpha");
        r.K = read_optional(j, "K");
        r.q = j.at("q").get<double>();
        r.iterations = j.at("iterations").get<std::size_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        r.rm = read_optional(j, "rm");
        r.sr = read_optional(j, "sr");
        r.md = read_optional(j, "md");
        const auto& theta = j.at("theta");
        const std::size_t dim = theta.empty() ? 0 : theta.front().size();
        r.theta = Matrix(0, dim);
        for (const auto& row : theta) r.theta.append_row(row.get<std::vector<double>>());
        r.gamma = j.at("gamma").get<std::vector<double>>();
        r.coincident_merged = j.value("coincident_merged", std::size_t{0});
        for (std::size_t label : j.at("labels").get<std::vector<std::size_t>>()) {
            if (label == 0) throw DataError("report labels are one-based; found 0");
            r.labels.push_back(label - 1);
        }
        return r;
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed report JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("malformed report JSON: ") + e.what());
    } catch (const ContractViolation& e) {
        throw DataError(std::string("malformed report JSON: ") + e.what());
    }
}

void write_report(const std::filesystem::path& path, const ClusteringReport& report) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << report_to_json(report) << '\n';
}

ClusteringReport read_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return report_from_json(buffer.str());
}

void write_labels_csv(std::ostream& out, std::span<const std::size_t> labels) {
    out << "point,cluster\n";
    for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << ',' << labels[i] + 1 << '\n';
}

void write_labels_csv(const std::filesystem::path& path, std::span<const std::size_t> labels) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    write_labels_csv(out, labels);
}

std::string summary_header() {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-5s %6s %8s %8s %8s %9s %6s %10s", "alg", "m_ini", "m_final", "RM", "SR", "MD",
                  "iter", "time(ms)");
    return buf;
}

std::string summary_line(const ClusteringReport& r) {
    auto field = [](const std::optional<double>& v, const char* fmt) {
        if (!v) return std::string("-");
        char buf[32];
        std::snprintf(buf, sizeof buf, fmt, *v);
        return std::string(buf);
    };
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-5s %6zu %8zu %8s %8s %9s %6zu %10.2f", to_string(r.algorithm).c_str(), r.m_ini,
                  r.m_final, field(r.rm, "%.2f").c_str(), field(r.sr, "%.2f").c_str(), field(r.md, "%.4f").c_str(),
                  r.iterations, r.elapsed_ms);
    std::string line = buf;
    if (r.coincident_merged > 0) {
        line += "  [coincident: " + std::to_string(r.coincident_merged) + " representative(s) merged]";
    }
    // APCM removes such clusters by design; for FCM and PCM it is worth flagging.
    if (r.algorithm != Algorithm::apcm && r.m_ini > r.m_final + r.coincident_merged) {
        line += "  [" + std::to_string(r.m_ini - r.m_final - r.coincident_merged) + " representative(s) own no point]";
    }
    return line;
}

}  // namespace apcm
