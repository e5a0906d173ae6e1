#include <limits>

#include "apcm/labels.hpp"
#include "doctest.h"

using namespace apcm;

TEST_CASE("argmax with lowest-index ties") {
    const Matrix u{{0.2, 0.9}, {0.5, 0.5}, {0.7, 0.1}};
    CHECK(assign_labels(u) == std::vector<std::size_t>{1, 0, 0});
    const Matrix single{{0.1}, {0.0}};
    CHECK(assign_labels(single) == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(assign_labels(Matrix(2, 0)), ContractViolation);
}

TEST_CASE("argmin on scores mirrors argmax on their exponentials") {
    const double inf = std::numeric_limits<double>::infinity();
    const Matrix s{{3.0, 1.0}, {2.0, 2.0}, {inf, 800.0}, {inf, inf}};
    CHECK(assign_labels_by_score(s) == std::vector<std::size_t>{1, 0, 1, 0});
}

TEST_CASE("occupied clusters and renumbering") {
    const std::vector<std::size_t> label{0, 2, 2, 0};
    const auto kept = occupied_clusters(label, 3);
    CHECK(kept == std::vector<std::size_t>{0, 2});
    CHECK(renumber_labels(label, kept, 3) == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK_THROWS_AS(renumber_labels(std::vector<std::size_t>{1}, std::vector<std::size_t>{0}, 2), ContractViolation);
}
