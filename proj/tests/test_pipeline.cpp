#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "aucc/error.hpp"
#include "aucc/null_model.hpp"
#include "aucc/pipeline.hpp"

using namespace aucc;

namespace {

// three well-separated blobs: every algorithm recovers them at k = 3, so the
// sweep has an unambiguous ARI peak
std::pair<Dataset, GroundTruth> blobs() {
    std::vector<MixtureComponent> spec{
        {{0.0, 0.0}, 0.6, 20},
        {{12.0, 0.0}, 0.6, 20},
        {{0.0, 12.0}, 0.6, 20},
    };
    return generate_gaussian_mixture(spec, 2024);
}

} // namespace

TEST_CASE("algorithm name round-trip") {
    for (Algorithm a : {Algorithm::kmeans, Algorithm::single, Algorithm::average,
                        Algorithm::complete, Algorithm::ward})
        CHECK(algorithm_from_string(to_string(a)) == a);
    CHECK_THROWS_AS(algorithm_from_string("dbscan"), input_error);
}

TEST_CASE("sweep shape: algorithm-major rows, k ascending") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::kmeans, Algorithm::average};
    config.k_min = 2;
    config.k_max = 5;
    config.n_init = 5;
    config.seed = 7;
    const auto report = run_sweep(data, truth, config);

    REQUIRE(report.rows.size() == 8);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(report.rows[i].algorithm == Algorithm::kmeans);
        CHECK(report.rows[i].k == 2 + i);
    }
    for (std::size_t i = 4; i < 8; ++i) {
        CHECK(report.rows[i].algorithm == Algorithm::average);
        CHECK(report.rows[i].k == i - 2);
    }
    CHECK(report.criteria.size() == all_criteria.size());
    for (const auto& row : report.rows)
        CHECK(row.scores.size() == report.criteria.size());
    CHECK(report.correlations.size() == report.criteria.size());
    CHECK(report.seed == 7);
    CHECK(report.config_digest.size() == 16);

    // ARI peaks at the true k for both algorithms
    for (std::size_t base : {std::size_t{0}, std::size_t{4}}) {
        double best = -2.0;
        std::size_t best_k = 0;
        for (std::size_t i = base; i < base + 4; ++i)
            if (report.rows[i].ari > best) {
                best = report.rows[i].ari;
                best_k = report.rows[i].k;
            }
        CHECK(best_k == 3);
        CHECK(best == doctest::Approx(1.0).epsilon(1e-12));
    }

    // a good criterion correlates positively with ARI on this easy layout
    for (const auto& c : report.correlations)
        if (c.id == CriterionId::aucc) {
            REQUIRE(c.defined);
            CHECK(c.r > 0.5);
        }
}

TEST_CASE("sweep is deterministic and seed-sensitive") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::kmeans};
    config.k_max = 4;
    config.n_init = 3;
    config.seed = 11;
    const auto a = run_sweep(data, truth, config);
    const auto b = run_sweep(data, truth, config);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].ari == b.rows[i].ari);
        for (std::size_t j = 0; j < a.rows[i].scores.size(); ++j) {
            CHECK(a.rows[i].scores[j].value == b.rows[i].scores[j].value);
            CHECK(a.rows[i].scores[j].defined == b.rows[i].scores[j].defined);
        }
    }
    CHECK(a.config_digest == b.config_digest);

    SweepConfig other = config;
    other.seed = 12;
    CHECK(run_sweep(data, truth, other).config_digest != a.config_digest);
}

TEST_CASE("hierarchical rows ignore the seed entirely") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::complete, Algorithm::ward};
    config.k_max = 5;
    config.seed = 1;
    SweepConfig other = config;
    other.seed = 999;
    const auto a = run_sweep(data, truth, config);
    const auto b = run_sweep(data, truth, other);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].ari == b.rows[i].ari);
}

TEST_CASE("default k_max is ceil(sqrt(n))") {
    const auto [data, truth] = blobs(); // n = 60 -> k_max = 8
    SweepConfig config;
    config.algorithms = {Algorithm::single};
    const auto report = run_sweep(data, truth, config);
    CHECK(report.rows.size() == 7); // k = 2..8
    CHECK(report.rows.back().k == 8);
}

TEST_CASE("criterion subset and sign adjustment") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::kmeans, Algorithm::ward};
    config.k_max = 6;
    config.n_init = 5;
    config.criteria = {CriterionId::aucc, CriterionId::davies_bouldin};
    const auto report = run_sweep(data, truth, config);
    REQUIRE(report.criteria.size() == 2);
    REQUIRE(report.correlations.size() == 2);
    // davies_bouldin is minimized; after sign adjustment a helpful criterion
    // reports positive r just like aucc
    CHECK(report.correlations[0].r > 0.0);
    CHECK(report.correlations[1].r > 0.0);
}

TEST_CASE("correlation notes when too few defined rows") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::kmeans};
    config.k_min = 2;
    config.k_max = 3; // only 2 rows -> below the 3-row floor
    config.n_init = 2;
    const auto report = run_sweep(data, truth, config);
    for (const auto& c : report.correlations) {
        CHECK_FALSE(c.defined);
        CHECK(!c.note.empty());
    }
}

TEST_CASE("config validation") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.k_min = 5;
    config.k_max = 3;
    CHECK_THROWS_AS(run_sweep(data, truth, config), input_error);
    config.k_min = 2;
    config.k_max = 3;
    config.algorithms = {};
    CHECK_THROWS_AS(run_sweep(data, truth, config), input_error);
}

TEST_CASE("truth length must match the data") {
    const auto [data, truth] = blobs();
    const GroundTruth short_truth(std::vector<int>{0, 1, 0, 1});
    SweepConfig config;
    CHECK_THROWS_AS(run_sweep(data, short_truth, config), input_error);
}

TEST_CASE("report writers") {
    const auto [data, truth] = blobs();
    SweepConfig config;
    config.algorithms = {Algorithm::kmeans};
    config.k_max = 4;
    config.n_init = 2;
    config.criteria = {CriterionId::aucc, CriterionId::vrc};
    const auto report = run_sweep(data, truth, config);

    std::ostringstream json;
    write_report_json(json, report);
    CHECK(json.str().find("\"rows\"") != std::string::npos);
    CHECK(json.str().find("\"correlations\"") != std::string::npos);
    CHECK(json.str().find("kmeans") != std::string::npos);

    std::ostringstream rows;
    write_rows_csv(rows, report);
    const std::string rows_text = rows.str();
    CHECK(rows_text.rfind("algorithm,k,ari,aucc,vrc\n", 0) == 0);
    CHECK(std::count(rows_text.begin(), rows_text.end(), '\n') == 4);

    std::ostringstream corr;
    write_correlations_csv(corr, report);
    CHECK(corr.str().rfind("criterion,r,defined,note\n", 0) == 0);
}

TEST_CASE("standardization changes the geometry the sweep sees") {
    // one stretched axis dominates unless standardized
    std::vector<MixtureComponent> spec{
        {{0.0, 0.0}, 0.4, 25},
        {{6.0, 0.0}, 0.4, 25},
    };
    auto [data, truth] = generate_gaussian_mixture(spec, 5);
    // stretch the second axis by 100
    std::vector<double> stretched(data.values().begin(), data.values().end());
    for (std::size_t i = 0; i < data.size(); ++i) stretched[i * 2 + 1] *= 100.0;
    const Dataset wide(stretched, data.size(), 2);

    SweepConfig config;
    config.algorithms = {Algorithm::kmeans};
    config.k_min = 2;
    config.k_max = 4;
    config.n_init = 10;
    config.seed = 3;
    const auto raw = run_sweep(wide, truth, config);
    config.standardize = true;
    const auto std_report = run_sweep(wide, truth, config);
    CHECK(std_report.config_digest != raw.config_digest);

    double raw_best = -2.0, std_best = -2.0;
    for (const auto& row : raw.rows) raw_best = std::max(raw_best, row.ari);
    for (const auto& row : std_report.rows) std_best = std::max(std_best, row.ari);
    CHECK(std_best > raw_best - 1e-12);
    CHECK(std_best == doctest::Approx(1.0).epsilon(1e-9));
}
