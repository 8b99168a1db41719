#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aucc/dissimilarity.hpp"

namespace aucc {

// Hard assignment of n objects to k non-empty clusters. Arbitrary input
// labels are compacted to 0..k-1 in order of first appearance, so any
// relabeling yields the same pairwise structure. Requires 2 <= k <= n-1
// (at least one within-cluster and one between-cluster pair), which is what
// pairwise evaluation needs; violations raise degenerate_partition_error.
class Partition {
public:
    explicit Partition(const std::vector<int>& raw_labels);

    std::size_t size() const { return labels_.size(); }
    std::size_t k() const { return sizes_.size(); }
    std::span<const int> labels() const { return labels_; }
    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::size_t>& cluster_sizes() const { return sizes_; }

    // number of within-cluster pairs, sum over clusters of C(size, 2)
    std::uint64_t within_pair_count() const;

private:
    std::vector<int> labels_;
    std::vector<std::size_t> sizes_;
};

// Binary same-cluster flags over all m = n(n-1)/2 unordered pairs, in
// pair_index order. flag = 1 means same cluster.
class PairwiseRelation {
public:
    PairwiseRelation(std::size_t n, std::vector<std::uint8_t> flags);

    std::size_t size() const { return n_; }
    std::size_t pairs() const { return flags_.size(); }
    std::uint8_t operator[](std::size_t pair_id) const { return flags_[pair_id]; }
    std::span<const std::uint8_t> flags() const { return flags_; }
    std::uint64_t positives() const { return positives_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> flags_;
    std::uint64_t positives_ = 0;
};

PairwiseRelation pairwise(const Partition& p);

} // namespace aucc
