#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "aucc/aucc.hpp"
#include "aucc/error.hpp"
#include "aucc/null_model.hpp"
#include "aucc/rng.hpp"
#include "oracles.hpp"

using namespace aucc;

namespace {

std::vector<std::size_t> cluster_sizes(const Partition& p) {
    std::vector<std::size_t> sizes(p.k(), 0);
    for (int label : p.labels()) ++sizes[static_cast<std::size_t>(label)];
    return sizes;
}

} // namespace

TEST_CASE("scheme sizes: floor plus largest-remainder") {
    const auto balanced = BalanceScheme::balanced();
    CHECK(scheme_sizes(6, 2, balanced) == std::vector<std::size_t>{3, 3});
    // 7/3: floors 2,2,2, remainder goes to the lowest index on a tie
    CHECK(scheme_sizes(7, 3, balanced) == std::vector<std::size_t>{3, 2, 2});
    CHECK(scheme_sizes(10, 3, balanced) == std::vector<std::size_t>{4, 3, 3});

    // 10% of 500 over 10 clusters collapses to balanced
    const auto sizes10 = scheme_sizes(500, 10, BalanceScheme::one_cluster_10pct());
    CHECK(sizes10 == std::vector<std::size_t>(10, 50));

    const auto sizes60 = scheme_sizes(100, 5, BalanceScheme::one_cluster_60pct());
    CHECK(sizes60 == std::vector<std::size_t>{60, 10, 10, 10, 10});

    const auto expl = BalanceScheme::explicit_proportions({0.5, 0.3, 0.2});
    CHECK(scheme_sizes(10, 3, expl) == std::vector<std::size_t>{5, 3, 2});
}

TEST_CASE("scheme sizes reject infeasible cells") {
    // 60% of 10 leaves 4 objects for 8 clusters -> some cluster empty
    CHECK_THROWS_AS(scheme_sizes(10, 9, BalanceScheme::one_cluster_60pct()),
                    input_error);
    CHECK_THROWS_AS(scheme_sizes(10, 10, BalanceScheme::balanced()), input_error);
    CHECK_THROWS_AS(scheme_sizes(10, 1, BalanceScheme::balanced()), input_error);
    CHECK_THROWS_AS(BalanceScheme::explicit_proportions({0.5, 0.4}), input_error);
    CHECK_THROWS_AS(BalanceScheme::explicit_proportions({1.2, -0.2}), input_error);
}

TEST_CASE("scheme parsing") {
    CHECK(BalanceScheme::from_string("balanced").name() == "balanced");
    CHECK(BalanceScheme::from_string("one_cluster_10pct").name() ==
          "one_cluster_10pct");
    CHECK(BalanceScheme::from_string("one_cluster_60pct").name() ==
          "one_cluster_60pct");
    const auto expl = BalanceScheme::from_string("explicit:0.2,0.3,0.5");
    const auto props = expl.proportions(3);
    REQUIRE(props.size() == 3);
    CHECK(props[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(props[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(props[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(BalanceScheme::from_string("explicit:0.2,0.3").proportions(3),
                    input_error);
    CHECK_THROWS_AS(BalanceScheme::from_string("lopsided"), input_error);
}

TEST_CASE("random partitions keep the exact size multiset") {
    const auto scheme = BalanceScheme::explicit_proportions({0.5, 0.3, 0.2});
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        const Partition p = random_partition(10, 3, scheme, seed);
        auto sizes = cluster_sizes(p);
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        CHECK(sizes == std::vector<std::size_t>{5, 3, 2});
    }
    CHECK(oracles::to_vector(random_partition(10, 3, scheme, 7).labels()) ==
          oracles::to_vector(random_partition(10, 3, scheme, 7).labels()));
    CHECK(oracles::to_vector(random_partition(10, 3, scheme, 7).labels()) !=
          oracles::to_vector(random_partition(10, 3, scheme, 8).labels()));
}

TEST_CASE("expected value study shapes and determinism") {
    // geometry is irrelevant under random labels; any spread-out set works
    std::vector<double> values;
    for (int i = 0; i < 30; ++i) values.push_back(i * (i % 5 + 1) * 0.37);
    const Dataset data(values, 30, 1);
    const auto d = compute_dissimilarities(data, Metric::euclidean);

    const std::vector<std::size_t> ks{2, 5};
    const std::vector<BalanceScheme> schemes{BalanceScheme::balanced(),
                                             BalanceScheme::one_cluster_60pct()};
    const auto report = expected_value_study(nullptr, d, ks, schemes, 200,
                                             CriterionId::aucc, 31);
    REQUIRE(report.cells.size() == 4);
    CHECK(report.replicates == 200);
    CHECK(report.cells[0].k == 2);
    CHECK(report.cells[0].scheme == "balanced");
    CHECK(report.cells[1].scheme == "one_cluster_60pct");
    CHECK(report.cells[2].k == 5);
    for (const auto& cell : report.cells) {
        CHECK(cell.replicates == 200);
        CHECK(cell.stddev > 0.0);
        // random labels: expected aucc 0.5; 200 reps keeps the mean well
        // inside +-5 sd/sqrt(200) of it
        CHECK(std::abs(cell.mean - 0.5) <=
              5.0 * cell.stddev / std::sqrt(200.0));
    }

    const auto again = expected_value_study(nullptr, d, ks, schemes, 200,
                                            CriterionId::aucc, 31);
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        CHECK(report.cells[i].mean == again.cells[i].mean);
        CHECK(report.cells[i].stddev == again.cells[i].stddev);
    }

    // fast path must match the generic evaluate() path cell by cell
    const auto generic = expected_value_study(nullptr, d, ks, schemes, 50,
                                              CriterionId::silhouette_swc, 31);
    CHECK(generic.cells.size() == 4);
    CHECK_THROWS_AS(expected_value_study(nullptr, d, ks, schemes, 50,
                                         CriterionId::vrc, 31),
                    input_error); // vrc needs features
}

TEST_CASE("fast aucc path equals per-replicate evaluation") {
    std::vector<double> values;
    for (int i = 0; i < 14; ++i) values.push_back(std::cos(i * 1.7) * 9 + i);
    const Dataset data(values, 14, 1);
    const auto d = compute_dissimilarities(data, Metric::euclidean);
    const std::vector<std::size_t> ks{3};
    const std::vector<BalanceScheme> schemes{BalanceScheme::balanced()};

    const auto fast = expected_value_study(nullptr, d, ks, schemes, 64,
                                           CriterionId::aucc, 77);
    // recompute by hand with the same per-replicate seeding contract:
    // cell index 0, rep r
    double sum = 0.0;
    for (std::size_t r = 0; r < 64; ++r) {
        const Partition p =
            random_partition(14, 3, schemes[0], mix_seed(77, 0, r));
        sum += aucc::aucc(d, p, TiePolicy::diagonal);
    }
    CHECK(fast.cells[0].mean == doctest::Approx(sum / 64.0).epsilon(1e-13));
}

TEST_CASE("null report json smoke") {
    NullModelReport r;
    r.criterion = CriterionId::aucc;
    r.seed = 5;
    r.replicates = 2;
    r.cells.push_back({2, "balanced", 0.5, 0.01, 2});
    std::ostringstream out;
    write_null_report_json(out, r);
    const std::string s = out.str();
    CHECK(s.find("\"criterion\"") != std::string::npos);
    CHECK(s.find("balanced") != std::string::npos);
}

TEST_CASE("gaussian mixture sampler") {
    std::vector<MixtureComponent> spec{
        {{0.0, 0.0}, 1.0, 40},
        {{20.0, 20.0}, 4.0, 60},
    };
    auto [data, truth] = generate_gaussian_mixture(spec, 11);
    CHECK(data.size() == 100);
    CHECK(data.dim() == 2);
    CHECK(truth.size() == 100);
    CHECK(truth.classes() == 2);
    // labels come out spec-ordered: first 40 rows component 0
    CHECK(truth.labels()[0] == 0);
    CHECK(truth.labels()[39] == 0);
    CHECK(truth.labels()[40] == 1);

    // sample means land near the centers (sd/sqrt(40) ~ 0.16)
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < 40; ++i) {
        mx += data.row(i)[0];
        my += data.row(i)[1];
    }
    CHECK(std::abs(mx / 40.0) < 1.0);
    CHECK(std::abs(my / 40.0) < 1.0);
    double m2x = 0.0;
    for (std::size_t i = 40; i < 100; ++i) m2x += data.row(i)[0];
    CHECK(std::abs(m2x / 60.0 - 20.0) < 2.0);

    auto [again, truth2] = generate_gaussian_mixture(spec, 11);
    CHECK(std::equal(again.values().begin(), again.values().end(),
                     data.values().begin(), data.values().end()));
    auto [other, truth3] = generate_gaussian_mixture(spec, 12);
    CHECK_FALSE(std::equal(other.values().begin(), other.values().end(),
                           data.values().begin(), data.values().end()));

    CHECK_THROWS_AS(generate_gaussian_mixture(
                        std::vector<MixtureComponent>{{{0.0}, 1.0, 5}}, 1),
                    input_error);
    CHECK_THROWS_AS(generate_gaussian_mixture(
                        std::vector<MixtureComponent>{{{0.0}, 1.0, 5},
                                                      {{1.0, 2.0}, 1.0, 5}},
                        1),
                    input_error); // dim mismatch
    CHECK_THROWS_AS(generate_gaussian_mixture(
                        std::vector<MixtureComponent>{{{0.0}, -1.0, 5},
                                                      {{1.0}, 1.0, 5}},
                        1),
                    input_error);
}
