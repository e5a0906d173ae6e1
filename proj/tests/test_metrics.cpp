#include <algorithm>
#include <numeric>
#include <random>

#include "apcm/datagen.hpp"
#include "apcm/metrics.hpp"
#include "doctest.h"

using namespace apcm;

namespace {

using Labels = std::vector<std::size_t>;

double rand_oracle(const Labels& a, const Labels& b) {
    std::size_t agree = 0, pairs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = i + 1; k < a.size(); ++k) {
            agree += (a[i] == a[k]) == (b[i] == b[k]) ? 1 : 0;
            ++pairs;
        }
    }
    return 100.0 * static_cast<double>(agree) / static_cast<double>(pairs);
}

Labels permuted(const Labels& l, std::mt19937_64& rng) {
    const std::size_t k = *std::max_element(l.begin(), l.end()) + 1;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Labels out(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = perm[l[i]];
    return out;
}

}  // namespace

TEST_CASE("rand measure examples") {
    const Labels t{0, 0, 1, 1};
    CHECK(rand_measure(t, t) == 100.0);
    CHECK(rand_measure(Labels{0, 0, 1, 1}, Labels{0, 0, 0, 1}) == 50.0);
    CHECK_THROWS_AS(rand_measure(Labels{0}, Labels{0}), ContractViolation);
    CHECK_THROWS_AS(rand_measure(Labels{0, 1}, Labels{0}), ContractViolation);
}

TEST_CASE("rand measure matches pair enumeration and ignores label names") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        Labels a(n), b(n);
        const std::size_t ka = 1 + rng() % 5, kb = 1 + rng() % 5;
        for (auto& v : a) v = rng() % ka;
        for (auto& v : b) v = rng() % kb;
        const double rm = rand_measure(a, b);
        CHECK(rm == doctest::Approx(rand_oracle(a, b)).epsilon(1e-12));
        CHECK(rm >= 0.0);
        CHECK(rm <= 100.0);
        CHECK(rand_measure(permuted(a, rng), permuted(b, rng)) == rm);
        const bool same_partition = rand_oracle(a, b) == 100.0;
        CHECK((rm == 100.0) == same_partition);
    }
}

TEST_CASE("success rate examples") {
    const Labels t{0, 0, 1, 1};
    CHECK(success_rate(t, t) == 100.0);
    CHECK(success_rate(Labels{1, 1, 0, 0}, t) == 100.0);
    CHECK(success_rate(Labels{0, 0, 0, 1}, t) == 75.0);
    // Many-to-one: both clusters map to class 0.
    CHECK(success_rate(Labels{0, 1, 0, 1}, Labels{0, 0, 0, 1}) == 75.0);
}

TEST_CASE("success rate is bounded and relabeling-invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 50;
        Labels a(n), b(n);
        for (auto& v : a) v = rng() % 4;
        for (auto& v : b) v = rng() % 3;
        const double sr = success_rate(a, b);
        CHECK(sr >= 0.0);
        CHECK(sr <= 100.0);
        CHECK(success_rate(permuted(a, rng), b) == sr);
    }
}

TEST_CASE("mean centre distance branches") {
    const TruthCenters truth{Matrix{{0, 0}, {10, 0}}};
    CHECK(mean_center_distance(Matrix{{0, 0}, {10, 0}}, truth) == 0.0);
    CHECK(mean_center_distance(Matrix{{10, 0}}, truth) == 0.0);
    // More representatives than centres: only the nearest to each centre counts.
    CHECK(mean_center_distance(Matrix{{1, 0}, {10, 3}, {50, 50}}, truth) == doctest::Approx(2.0));
    // Fewer: each representative to its nearest centre.
    CHECK(mean_center_distance(Matrix{{4, 0}}, truth) == doctest::Approx(4.0));
}

TEST_CASE("mean centre distance is invariant to row order") {
    const TruthCenters truth{Matrix{{0, 0}, {10, 0}, {3, 7}}};
    const Matrix a{{1, 1}, {9, -1}, {2, 6}, {20, 20}};
    const Matrix b{{20, 20}, {2, 6}, {1, 1}, {9, -1}};
    const TruthCenters shuffled{Matrix{{3, 7}, {0, 0}, {10, 0}}};
    CHECK(mean_center_distance(a, truth) == doctest::Approx(mean_center_distance(b, shuffled)));
}

TEST_CASE("truth centres prefer generator means over class means") {
    auto d = gen_experiment2(1);
    const auto generated = truth_centers(d);
    REQUIRE(generated.has_value());
    CHECK(generated->centers(0, 0) == 1.35);
    d.centers.reset();
    const auto empirical = truth_centers(d);
    CHECK(empirical->centers(0, 0) != 1.35);
    CHECK(empirical->centers(0, 0) == doctest::Approx(1.35).epsilon(0.05));
    d.truth.reset();
    CHECK_FALSE(truth_centers(d).has_value());
}
