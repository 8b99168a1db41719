#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aucc/criteria.hpp"
#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/external.hpp"
#include "aucc/partition.hpp"

namespace aucc {

// Cluster-size profile for random partitions. Named schemes expand to
// proportions at a given k; explicit proportions must be positive and sum
// to 1 (within 1e-9; they are renormalized exactly).
class BalanceScheme {
public:
    static BalanceScheme balanced();
    static BalanceScheme one_cluster_10pct(); // one cluster 10%, rest split evenly
    static BalanceScheme one_cluster_60pct(); // one cluster 60%, rest split evenly
    static BalanceScheme explicit_proportions(std::vector<double> p);
    static BalanceScheme from_string(std::string_view s);

    const std::string& name() const { return name_; }
    std::vector<double> proportions(std::size_t k) const;

private:
    BalanceScheme(std::string name, std::vector<double> p)
        : name_(std::move(name)), explicit_(std::move(p)) {}
    std::string name_;
    std::vector<double> explicit_; // empty for named schemes
};

// floor(n * p_l) per cluster, remainder to the largest fractional parts
// (ties by lower cluster index). Every size must end up >= 1 and k <= n-1,
// else input_error.
std::vector<std::size_t> scheme_sizes(std::size_t n, std::size_t k,
                                      const BalanceScheme& scheme);

// uniform random permutation of the fixed label multiset given by
// scheme_sizes; deterministic in seed
Partition random_partition(std::size_t n, std::size_t k,
                           const BalanceScheme& scheme, std::uint64_t seed);

struct NullCell {
    std::size_t k = 0;
    std::string scheme;
    double mean = 0.0;
    double stddev = 0.0; // sample stddev, 0 when replicates == 1
    std::size_t replicates = 0;
};

struct NullModelReport {
    CriterionId criterion = CriterionId::aucc;
    std::uint64_t seed = 0;
    std::size_t replicates = 0;
    std::vector<NullCell> cells; // ks x schemes, scheme-major within k order
};

// Monte-Carlo expected value of a criterion over random partitions of the
// fixed dataset, one cell per (k, scheme). aucc/gamma reuse one sorted pair
// ranking across all replicates; other criteria are evaluated directly.
// data may be null unless the criterion needs features.
NullModelReport expected_value_study(const Dataset* data,
                                     const DissimilarityMatrix& d,
                                     std::span<const std::size_t> ks,
                                     std::span<const BalanceScheme> schemes,
                                     std::size_t replicates,
                                     CriterionId criterion,
                                     std::uint64_t seed);

void write_null_report_json(std::ostream& out, const NullModelReport& r);

struct MixtureComponent {
    std::vector<double> center;
    double variance = 1.0; // isotropic; stddev = sqrt(variance) per axis
    std::size_t size = 0;
};

// Spherical Gaussian mixture sampler, deterministic in seed; component c of
// the returned labels is the index into the spec.
std::pair<Dataset, GroundTruth> generate_gaussian_mixture(
    std::span<const MixtureComponent> spec, std::uint64_t seed);

} // namespace aucc
