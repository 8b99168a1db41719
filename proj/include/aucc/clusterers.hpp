#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/partition.hpp"

namespace aucc {

enum class LinkageKind { single, average, complete, ward };

LinkageKind linkage_from_string(std::string_view s);
const char* to_string(LinkageKind k);

// One agglomeration step. Node ids: 0..n-1 are leaves, n+t is the cluster
// created at step t; left < right.
struct MergeRecord {
    std::size_t left = 0;
    std::size_t right = 0;
    double height = 0.0;
};

class Dendrogram {
public:
    Dendrogram(std::size_t n_leaves, std::vector<MergeRecord> merges);

    std::size_t leaves() const { return n_; }
    const std::vector<MergeRecord>& merges() const { return merges_; }

    // partition after the first n-k merges, 2 <= k <= n-1
    Partition cut(std::size_t k) const;

private:
    std::size_t n_;
    std::vector<MergeRecord> merges_;
};

// header "step,left,right,height"
void write_dendrogram_csv(std::ostream& out, const Dendrogram& dg);

// Generic Lance-Williams agglomeration by full scan: at each step merge the
// globally closest active pair, ties broken by smallest (left id, right id).
// Ward runs on squared input distances and reports heights as the square
// root, so heights share the input metric's units; merge heights of all four
// linkages are non-decreasing. Ward's objective assumes squared Euclidean
// geometry; on non-Euclidean input the recurrence is still applied verbatim
// to the given matrix (callers warn). Requires dissimilarity orientation.
Dendrogram agglomerate(const DissimilarityMatrix& d, LinkageKind kind);

struct KMeansResult {
    Partition partition;
    std::vector<double> centroids; // k x d row-major
    double mse = 0.0;              // sum of squared point-centroid distances / n
    std::size_t iterations = 0;    // of the winning restart
    std::size_t best_init = 0;     // restart index that won
    std::vector<double> mse_history; // winning restart, one value per iteration
};

// Lloyd with Forgy init (k points with pairwise distinct coordinates drawn
// by seeded shuffle), assignment ties to the lowest centroid index, empty
// clusters repaired by moving the farthest point of the largest cluster,
// at most max_iter iterations to the assignment fixpoint. Runs n_init
// restarts on sub-seeds and keeps the lowest MSE (ties: lowest restart
// index). Throws input_error when k exceeds the number of distinct points.
KMeansResult kmeans(const Dataset& data, std::size_t k, std::size_t n_init,
                    std::uint64_t seed, std::size_t max_iter = 300);

} // namespace aucc
