#pragma once

#include <cstddef>
#include <span>

#include "aucc/aucc.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/partition.hpp"

namespace aucc {

struct GammaResult {
    double gamma = 0.0;
    PairStatistics stats;
};

// (s_plus - s_minus) / (s_plus + s_minus + s_zero), denominator = P*N
double gamma_from_stats(const PairStatistics& s);

// Reference evaluator by direct enumeration of every (within pair, between
// pair) comparison. Quadratic in the number of pairs; exists to be obviously
// correct, not fast, hence the size cap (raise it knowingly if needed).
GammaResult gamma_naive(const DissimilarityMatrix& d, const Partition& p,
                        std::size_t n_cap = 200);

GammaResult gamma_from_arrays(std::span<const std::uint8_t> flags,
                              std::span<const double> scores,
                              ScoreOrientation orientation);

} // namespace aucc
