#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/error.hpp"
#include "aucc/partition.hpp"

using namespace aucc;

TEST_CASE("pair_index walks the upper triangle row-major") {
    CHECK(pair_index(0, 1, 4) == 0);
    CHECK(pair_index(0, 2, 4) == 1);
    CHECK(pair_index(0, 3, 4) == 2);
    CHECK(pair_index(1, 2, 4) == 3);
    CHECK(pair_index(1, 3, 4) == 4);
    CHECK(pair_index(2, 3, 4) == 5);
    CHECK(pair_count(4) == 6);

    // bijectivity on a larger n
    std::size_t expected = 0;
    for (std::size_t i = 0; i < 13; ++i)
        for (std::size_t j = i + 1; j < 13; ++j)
            CHECK(pair_index(i, j, 13) == expected++);
    CHECK(expected == pair_count(13));

    CHECK_THROWS_AS((void)pair_index(2, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)pair_index(3, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)pair_index(1, 5, 5), std::invalid_argument);
}

TEST_CASE("dataset validates shape and finiteness") {
    CHECK_THROWS_AS(Dataset({1.0, 2.0}, 1, 2), input_error);
    CHECK_THROWS_AS(Dataset({1.0, 2.0, 3.0}, 2, 2), input_error);
    CHECK_THROWS_AS(Dataset({1.0, NAN, 3.0, 4.0}, 2, 2), input_error);
    CHECK_THROWS_AS(Dataset({1.0, INFINITY, 3.0, 4.0}, 2, 2), input_error);

    const Dataset d({1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, 3, 2);
    CHECK(d.size() == 3);
    CHECK(d.dim() == 2);
    CHECK(d(2, 1) == 6.0);
    CHECK(d.row(1)[0] == 3.0);
}

TEST_CASE("standardization zeroes means, unit sample variance, constant -> 0") {
    const Dataset d({1.0, 7.0, 2.0, 7.0, 3.0, 7.0, 4.0, 7.0}, 4, 2);
    const Dataset z = d.standardized();
    double mean = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < 4; ++i) mean += z(i, 0);
    mean /= 4.0;
    CHECK(std::fabs(mean) < 1e-15);
    for (std::size_t i = 0; i < 4; ++i) ss += z(i, 0) * z(i, 0);
    CHECK(ss / 3.0 == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 4; ++i) CHECK(z(i, 1) == 0.0);
}

TEST_CASE("metric computation matches hand values") {
    const Dataset d({0.0, 0.0, 3.0, 4.0}, 2, 2);
    CHECK(compute_dissimilarities(d, Metric::euclidean).at(0, 1) == 5.0);
    CHECK(compute_dissimilarities(d, Metric::squared_euclidean).at(0, 1) == 25.0);
    CHECK(compute_dissimilarities(d, Metric::manhattan).at(0, 1) == 7.0);

    CHECK(metric_from_string("euclidean") == Metric::euclidean);
    CHECK(metric_from_string("squared-euclidean") == Metric::squared_euclidean);
    CHECK_THROWS_AS(metric_from_string("cosine"), input_error);
}

TEST_CASE("distance matrix is exactly symmetric with zero diagonal") {
    std::vector<double> values;
    for (std::size_t i = 0; i < 5 * 3; ++i)
        values.push_back(std::sin(static_cast<double>(i) * 1.7) * 10.0);
    const Dataset d(std::move(values), 5, 3);
    const auto m = compute_dissimilarities(d, Metric::euclidean);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(m.at(i, i) == 0.0);
        for (std::size_t j = 0; j < 5; ++j) CHECK(m.at(i, j) == m.at(j, i));
    }
}

TEST_CASE("full-matrix loader invariants") {
    CHECK_THROWS_AS(DissimilarityMatrix::from_full({{0.0, 1.0}, {1.1, 0.0}}),
                    input_error);
    CHECK_THROWS_AS(DissimilarityMatrix::from_full({{0.5, 1.0}, {1.0, 0.0}}),
                    input_error);
    CHECK_THROWS_AS(DissimilarityMatrix::from_full({{0.0, -1.0}, {-1.0, 0.0}}),
                    input_error);
    CHECK_THROWS_AS(DissimilarityMatrix::from_condensed(3, {1.0, 2.0}), input_error);

    // similarity orientation: nonzero diagonal allowed, ranking reversed
    const auto s = DissimilarityMatrix::from_full(
        {{1.0, 0.9, 0.1}, {0.9, 1.0, 0.2}, {0.1, 0.2, 1.0}},
        ScoreOrientation::similarity);
    CHECK(s.orientation() == ScoreOrientation::similarity);
    CHECK(s.more_similar(0.9, 0.1));
    const auto d = DissimilarityMatrix::from_condensed(3, {1.0, 2.0, 3.0});
    CHECK(d.more_similar(1.0, 2.0));
    CHECK_FALSE(d.more_similar(2.0, 1.0));
}

TEST_CASE("partition compacts labels and enforces 2 <= k <= n-1") {
    const Partition p({7, 7, 3, 9, 3});
    CHECK(p.k() == 3);
    CHECK(p.label(0) == 0); // first appearance order
    CHECK(p.label(2) == 1);
    CHECK(p.label(3) == 2);
    CHECK(p.cluster_sizes() == std::vector<std::size_t>{2, 2, 1});
    CHECK(p.within_pair_count() == 2);

    CHECK_THROWS_AS(Partition({1, 1, 1}), degenerate_partition_error);
    CHECK_THROWS_AS(Partition({1, 2, 3}), degenerate_partition_error);
    CHECK_THROWS_AS(Partition({1, 2}), degenerate_partition_error);
}

TEST_CASE("pairwise relation flags same-cluster pairs in pair_index order") {
    const Partition p({0, 1, 0, 1});
    const PairwiseRelation rel = pairwise(p);
    CHECK(rel.pairs() == 6);
    CHECK(rel.positives() == 2);
    CHECK(rel[pair_index(0, 2, 4)] == 1);
    CHECK(rel[pair_index(1, 3, 4)] == 1);
    CHECK(rel[pair_index(0, 1, 4)] == 0);
    CHECK(rel[pair_index(2, 3, 4)] == 0);

    CHECK_THROWS_AS(PairwiseRelation(4, {0, 1, 2, 0, 0, 0}), input_error);
    CHECK_THROWS_AS(PairwiseRelation(4, {0, 1}), input_error);
}
