#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aucc/partition.hpp"

namespace aucc {

// Reference labeling used only for external scoring. Unlike Partition it
// accepts any number of classes from 2 up to n; raw labels (strings or
// ints) are compacted to 0..c-1 in order of first appearance.
class GroundTruth {
public:
    explicit GroundTruth(const std::vector<std::string>& raw);
    explicit GroundTruth(const std::vector<int>& raw);

    std::size_t size() const { return labels_.size(); }
    std::size_t classes() const { return classes_; }
    std::span<const int> labels() const { return labels_; }

private:
    void init(const std::vector<int>& raw);
    std::vector<int> labels_;
    std::size_t classes_ = 0;
};

// Hubert-Arabie adjusted Rand index via exact integer contingency sums.
// 1 for identical pair structure, ~0 expected under chance.
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);
double adjusted_rand_index(const Partition& p, const GroundTruth& g);

// sample Pearson correlation; throws input_error on length mismatch or
// size < 2, returns NaN when either side has zero variance
double pearson(std::span<const double> x, std::span<const double> y);

} // namespace aucc
