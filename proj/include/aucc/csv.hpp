#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/external.hpp"
#include "aucc/partition.hpp"

namespace aucc {

// Comma-separated numeric table. A header row is auto-detected (any
// non-numeric token in the first line). With label_column = true the last
// column is split off as ground-truth labels (integers or strings).
struct LoadedDataset {
    Dataset data;
    std::optional<GroundTruth> truth;
};

LoadedDataset load_dataset_csv(const std::string& path, bool label_column = false);

// full square matrix, optional header row skipped, exact symmetry required
DissimilarityMatrix load_matrix_csv(const std::string& path,
                                    ScoreOrientation orientation);

// one integer label per line (or one CSV row of labels)
Partition load_partition(const std::string& path);
GroundTruth load_ground_truth(const std::string& path);

// two columns flag,score with optional header; flag must be 0/1
struct PairArrays {
    std::vector<std::uint8_t> flags;
    std::vector<double> scores;
};
PairArrays load_pair_arrays_csv(const std::string& path);

void write_dataset_csv(std::ostream& out, const Dataset& data,
                       const std::vector<int>* labels = nullptr);

} // namespace aucc
