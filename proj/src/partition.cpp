#include "aucc/partition.hpp"

#include <string>
#include <unordered_map>
#include <utility>

#include "aucc/error.hpp"

namespace aucc {

Partition::Partition(const std::vector<int>& raw_labels) {
    const std::size_t n = raw_labels.size();
    labels_.resize(n);
    std::unordered_map<int, int> remap;
    remap.reserve(16);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = remap.try_emplace(raw_labels[i],
                                                static_cast<int>(remap.size()));
        labels_[i] = it->second;
        if (inserted) sizes_.push_back(0);
    }
    for (int l : labels_) ++sizes_[static_cast<std::size_t>(l)];

    const std::size_t k = sizes_.size();
    if (n < 3 || k < 2 || k > n - 1)
        throw degenerate_partition_error(
            "partition with k = " + std::to_string(k) + " over n = " +
            std::to_string(n) +
            " has no within- or no between-cluster pairs; need 2 <= k <= n-1");
}

std::uint64_t Partition::within_pair_count() const {
    std::uint64_t p = 0;
    for (std::size_t s : sizes_) p += static_cast<std::uint64_t>(s) * (s - 1) / 2;
    return p;
}

PairwiseRelation::PairwiseRelation(std::size_t n, std::vector<std::uint8_t> flags)
    : n_(n), flags_(std::move(flags)) {
    if (flags_.size() != pair_count(n_))
        throw input_error("pairwise flag count does not match n");
    for (std::uint8_t f : flags_) {
        if (f > 1) throw input_error("pairwise flags must be 0 or 1");
        positives_ += f;
    }
}

PairwiseRelation pairwise(const Partition& p) {
    const std::size_t n = p.size();
    std::vector<std::uint8_t> flags;
    flags.reserve(pair_count(n));
    const auto labels = p.labels();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            flags.push_back(labels[i] == labels[j] ? 1 : 0);
    return PairwiseRelation(n, std::move(flags));
}

} // namespace aucc
