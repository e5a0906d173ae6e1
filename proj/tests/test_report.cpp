#include <filesystem>
#include <sstream>

#include "apcm/apcm.hpp"
#include "apcm/datagen.hpp"
#include "apcm/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace apcm;

TEST_CASE("JSON round trip is exact") {
    auto r = apcm_run(gen_experiment2(2), 6);
    r.theta(0, 0) = 0.1 + 0.2;  // not representable in short decimal form
    CHECK(report_from_json(report_to_json(r)) == r);

    const auto path = std::filesystem::temp_directory_path() / "apcm_report_roundtrip.json";
    write_report(path, r);
    CHECK(read_report(path) == r);
    std::filesystem::remove(path);
}

TEST_CASE("absent values are null and labels are one-based") {
    ClusteringReport r;
    r.algorithm = Algorithm::fcm;
    r.m_ini = 2;
    r.m_final = 1;
    r.labels = {0, 0};
    r.theta = Matrix{{1.5}};
    r.gamma = {0.25};
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["algorithm"] == "fcm");
    CHECK(j["rm"].is_null());
    CHECK(j["sr"].is_null());
    CHECK(j["md"].is_null());
    CHECK(j["alpha"].is_null());
    CHECK(j["K"].is_null());
    CHECK(j["labels"] == nlohmann::json::array({1, 1}));
    CHECK(j["theta"] == nlohmann::json::array({nlohmann::json::array({1.5})}));
    CHECK(report_from_json(report_to_json(r)) == r);
}

TEST_CASE("malformed reports are data errors") {
    CHECK_THROWS_AS(report_from_json("{"), DataError);
    CHECK_THROWS_AS(report_from_json("[]"), DataError);
    CHECK_THROWS_AS(report_from_json(R"({"algorithm": "kmeans"})"), DataError);
    ClusteringReport r;
    r.m_final = 1;
    r.labels = {0};
    r.theta = Matrix{{0.0}};
    r.gamma = {1.0};
    auto j = nlohmann::json::parse(report_to_json(r));
    j["labels"] = nlohmann::json::array({0});
    CHECK_THROWS_AS(report_from_json(j.dump()), DataError);
    CHECK_THROWS_AS(read_report("/nonexistent/report.json"), DataError);
}

TEST_CASE("labels file") {
    std::ostringstream out;
    write_labels_csv(out, std::vector<std::size_t>{0, 2, 1});
    CHECK(out.str() == "point,cluster\n1,1\n2,3\n3,2\n");
}

TEST_CASE("summary line") {
    const auto r = apcm_run(gen_experiment1(), 2);
    const auto line = summary_line(r);
    CHECK(line.rfind(to_string(Algorithm::apcm), 0) == 0);
    CHECK(summary_header().find("SR") != std::string::npos);
}
