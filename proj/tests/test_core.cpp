#include <cmath>
#include <random>
#include <sstream>

#include "apcm/core.hpp"
#include "doctest.h"

using namespace apcm;

namespace {

DataSet parse(const std::string& text, HeaderMode header = HeaderMode::detect,
              std::optional<std::string> label = std::nullopt) {
    std::istringstream in(text);
    return parse_csv(in, header, label, "inline");
}

}  // namespace

TEST_CASE("csv without labels") {
    const auto d = parse("1,2\n3,4\n5,6\n");
    CHECK(d.size() == 3);
    CHECK(d.dim() == 2);
    CHECK(d.points(2, 1) == 6.0);
    CHECK_FALSE(d.truth.has_value());
}

TEST_CASE("csv labels are re-indexed by first appearance") {
    const auto d = parse("1,2,a\n3,4,a\n5,6,b\n", HeaderMode::detect, "last");
    REQUIRE(d.truth.has_value());
    CHECK(*d.truth == std::vector<std::size_t>{0, 0, 1});
    CHECK(d.class_count() == 2);

    const auto e = parse("1,z\n2,y\n3,z\n4,x\n", HeaderMode::absent, "last");
    CHECK(*e.truth == std::vector<std::size_t>{0, 1, 0, 2});
}

TEST_CASE("csv header detection and named label column") {
    const auto d = parse("x,kind,y\n1,p,2\n3,q,4\n", HeaderMode::detect, "kind");
    CHECK(d.size() == 2);
    CHECK(d.dim() == 2);
    CHECK(d.points(1, 1) == 4.0);
    CHECK(*d.truth == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(parse("x,y\n1,2\n", HeaderMode::detect, "kind"), DataError);
}

TEST_CASE("csv errors name the offending line") {
    try {
        parse("1,2\n3\n");
        FAIL("expected a DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("1,2\n3,abc\n", HeaderMode::absent), DataError);
    CHECK_THROWS_AS(parse(""), DataError);
    CHECK_THROWS_AS(parse("1,nan\n"), DataError);
    CHECK_THROWS_AS(parse("1,inf\n", HeaderMode::absent), DataError);
}

TEST_CASE("iris file") {
    const auto d = load_csv(APCM_DATA_DIR "/iris.csv", HeaderMode::detect, std::string("last"));
    CHECK(d.size() == 150);
    CHECK(d.dim() == 4);
    CHECK(d.class_count() == 3);
    std::vector<std::size_t> sizes(3, 0);
    for (auto c : *d.truth) ++sizes[c];
    CHECK(sizes == std::vector<std::size_t>{50, 50, 50});
}

TEST_CASE("csv round trip is bit-exact") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> value(-1e6, 1e6);
    for (int trial = 0; trial < 50; ++trial) {
        DataSet d;
        const std::size_t n = 1 + rng() % 20;
        const std::size_t dim = 1 + rng() % 5;
        d.points = Matrix(n, dim);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < dim; ++k) d.points(i, k) = value(rng) * std::pow(10.0, int(rng() % 20) - 10);
        }
        std::vector<std::size_t> truth(n);
        for (std::size_t i = 0; i < n; ++i) truth[i] = i == 0 ? 0 : rng() % 3;
        // contiguous by first appearance
        std::vector<std::size_t> seen;
        for (auto& t : truth) {
            auto it = std::find(seen.begin(), seen.end(), t);
            if (it == seen.end()) {
                seen.push_back(t);
                it = seen.end() - 1;
            }
            t = static_cast<std::size_t>(it - seen.begin());
        }
        d.truth = truth;

        std::ostringstream out;
        write_csv(out, d);
        const auto back = parse(out.str(), HeaderMode::detect, "last");
        CHECK(back.points == d.points);
        CHECK(back.truth == d.truth);
    }
}

TEST_CASE("squared distance") {
    const std::vector<double> a{0, 0}, b{3, 4}, c{1.5, 3.5}, m{1.75, 2.75};
    CHECK(squared_distance(a, a) == 0.0);
    CHECK(squared_distance(a, b) == 25.0);
    CHECK(squared_distance(c, m) == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(distance(a, b) == 5.0);
    const std::vector<double> short_one{1};
    CHECK_THROWS_AS(squared_distance(a, short_one), ContractViolation);
}

TEST_CASE("squared distance is symmetric, non-negative and zero only on equal inputs") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> value(0, 10);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> x(3), y(3);
        for (auto& v : x) v = value(rng);
        for (auto& v : y) v = value(rng);
        CHECK(squared_distance(x, y) == squared_distance(y, x));
        CHECK(squared_distance(x, y) > 0.0);
        CHECK(squared_distance(x, x) == 0.0);
    }
}

TEST_CASE("validate rejects empty and malformed sets") {
    DataSet d;
    CHECK_THROWS_AS(validate(d), DataError);
    d.points = Matrix{{1.0, 2.0}};
    CHECK_NOTHROW(validate(d));
    d.truth = std::vector<std::size_t>{1};  // not contiguous from 0
    CHECK_THROWS_AS(validate(d), DataError);
    d.truth = std::vector<std::size_t>{0, 0};
    CHECK_THROWS_AS(validate(d), DataError);
}

TEST_CASE("bounding box and diameter") {
    const Matrix p{{0, 0}, {3, 1}, {1, 4}};
    const auto box = bounding_box(p);
    CHECK(box.lo == std::vector<double>{0, 0});
    CHECK(box.hi == std::vector<double>{3, 4});
    CHECK(data_diameter(p) == 5.0);
}

TEST_CASE("algorithm names") {
    for (auto a : {Algorithm::fcm, Algorithm::pcm, Algorithm::apcm}) CHECK(algorithm_from_string(to_string(a)) == a);
    CHECK_THROWS(algorithm_from_string("kmeans"));
}
