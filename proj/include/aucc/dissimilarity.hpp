#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "aucc/dataset.hpp"

namespace aucc {

enum class Metric { euclidean, squared_euclidean, manhattan };

Metric metric_from_string(std::string_view s);
const char* to_string(Metric m);

// Whether smaller stored values mean "more similar" (dissimilarity, the
// default) or larger ones do (similarity). Matrices loaded from similarity
// fixtures keep their raw values and flip the ranking direction instead.
enum class ScoreOrientation { dissimilarity, similarity };

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Index of unordered pair (i, j), i < j < n, in the row-major upper
// triangle: (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

// Symmetric pairwise proximities over n >= 2 objects, stored as the
// condensed upper triangle in pair_index order. Dissimilarity-oriented
// matrices require finite non-negative entries and (when built from a full
// matrix) an exactly zero diagonal; similarity-oriented ones only finite
// entries. Arithmetic consumers (criteria that sum or average distances)
// must check orientation(); rank-based consumers work with both.
class DissimilarityMatrix {
public:
    static DissimilarityMatrix from_condensed(
        std::size_t n, std::vector<double> values,
        ScoreOrientation orientation = ScoreOrientation::dissimilarity);

    // validates exact symmetry (bitwise equality of (i,j) and (j,i))
    static DissimilarityMatrix from_full(
        const std::vector<std::vector<double>>& full,
        ScoreOrientation orientation = ScoreOrientation::dissimilarity);

    std::size_t size() const { return n_; }
    std::size_t pairs() const { return values_.size(); }
    ScoreOrientation orientation() const { return orientation_; }

    // at(i, i) returns 0; off-diagonal lookups hit the condensed triangle
    double at(std::size_t i, std::size_t j) const;

    std::span<const double> condensed() const { return values_; }

    // does value a rank strictly more similar than value b
    bool more_similar(double a, double b) const {
        return orientation_ == ScoreOrientation::dissimilarity ? a < b : a > b;
    }

private:
    DissimilarityMatrix() = default;
    std::size_t n_ = 0;
    std::vector<double> values_;
    ScoreOrientation orientation_ = ScoreOrientation::dissimilarity;
};

// Each unordered pair computed exactly once, so symmetry is bit-for-bit.
DissimilarityMatrix compute_dissimilarities(const Dataset& data, Metric metric);

} // namespace aucc
