#pragma once

#include <stdexcept>
#include <string>

namespace aucc {

// Bad user input: malformed files, non-finite values, inconsistent shapes,
// invalid configuration. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Partition unusable for pairwise evaluation: fewer than 2 clusters, or no
// between-cluster pairs (k = n), i.e. no positives or no negatives to rank.
// The CLI maps this to exit code 3.
class degenerate_partition_error : public std::runtime_error {
public:
    explicit degenerate_partition_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace aucc
