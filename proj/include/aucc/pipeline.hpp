#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aucc/clusterers.hpp"
#include "aucc/criteria.hpp"
#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/external.hpp"

namespace aucc {

enum class Algorithm { kmeans, single, average, complete, ward };

Algorithm algorithm_from_string(std::string_view s);
const char* to_string(Algorithm a);

// Correlation experiment: cluster one labeled dataset across a k range with
// several algorithms, score every partition with the chosen criteria and
// with ARI against the ground truth, then correlate each criterion's column
// (sign-adjusted so higher = better) with the ARI column.
struct SweepConfig {
    Metric metric = Metric::euclidean;
    std::vector<Algorithm> algorithms = {Algorithm::kmeans};
    std::size_t k_min = 2;
    std::size_t k_max = 0; // 0 = ceil(sqrt(n))
    std::size_t n_init = 100;
    std::uint64_t seed = 1;
    std::vector<CriterionId> criteria{all_criteria.begin(), all_criteria.end()};
    bool standardize = false;
};

struct SweepRow {
    Algorithm algorithm = Algorithm::kmeans;
    std::size_t k = 0;
    std::vector<CriterionScore> scores; // config.criteria order
    double ari = 0.0;
};

struct CriterionCorrelation {
    CriterionId id = CriterionId::aucc;
    double r = 0.0;
    bool defined = true;
    std::string note;
};

struct ExperimentReport {
    std::vector<CriterionId> criteria;
    std::vector<SweepRow> rows; // algorithm-major, k ascending
    std::vector<CriterionCorrelation> correlations;
    std::uint64_t seed = 0;
    std::string config_digest; // hex fingerprint of the effective config
};

ExperimentReport run_sweep(const Dataset& data, const GroundTruth& truth,
                           const SweepConfig& config);

void write_report_json(std::ostream& out, const ExperimentReport& r);
// one row per partition: algorithm,k,ari,<criterion columns>
void write_rows_csv(std::ostream& out, const ExperimentReport& r);
// criterion,r,defined,note
void write_correlations_csv(std::ostream& out, const ExperimentReport& r);

} // namespace aucc
