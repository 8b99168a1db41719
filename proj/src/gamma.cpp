#include "aucc/gamma.hpp"

#include <string>

#include "aucc/error.hpp"

namespace aucc {

double gamma_from_stats(const PairStatistics& s) {
    if (s.total == 0)
        throw degenerate_partition_error("no within/between pair comparisons");
    return (static_cast<double>(s.s_plus) - static_cast<double>(s.s_minus)) /
           static_cast<double>(s.total);
}

namespace {

GammaResult enumerate(std::span<const double> within, std::span<const double> between,
                      bool similarity) {
    GammaResult out;
    out.stats.positives = within.size();
    out.stats.negatives = between.size();
    out.stats.total = static_cast<std::uint64_t>(within.size()) * between.size();
    if (out.stats.total == 0)
        throw degenerate_partition_error(
            "need at least one within-cluster and one between-cluster pair");
    for (double w : within) {
        for (double b : between) {
            const double hi = similarity ? w : b;
            const double lo = similarity ? b : w;
            if (hi > lo)
                ++out.stats.s_plus;
            else if (hi < lo)
                ++out.stats.s_minus;
            else
                ++out.stats.s_zero;
        }
    }
    out.gamma = gamma_from_stats(out.stats);
    return out;
}

} // namespace

GammaResult gamma_naive(const DissimilarityMatrix& d, const Partition& p,
                        std::size_t n_cap) {
    const std::size_t n = d.size();
    if (n != p.size()) throw input_error("matrix and partition sizes differ");
    if (n > n_cap)
        throw input_error("gamma_naive enumerates all pair comparisons and is "
                          "quadratic in the pair count; n = " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(n_cap) +
                          " (raise n_cap deliberately to override)");
    const auto labels = p.labels();
    const auto scores = d.condensed();
    std::vector<double> within, between;
    std::size_t pid = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++pid)
            (labels[i] == labels[j] ? within : between).push_back(scores[pid]);
    return enumerate(within, between,
                     d.orientation() == ScoreOrientation::similarity);
}

GammaResult gamma_from_arrays(std::span<const std::uint8_t> flags,
                              std::span<const double> scores,
                              ScoreOrientation orientation) {
    if (flags.size() != scores.size())
        throw input_error("flag and score arrays differ in length");
    std::vector<double> within, between;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i] > 1) throw input_error("pair flags must be 0 or 1");
        (flags[i] ? within : between).push_back(scores[i]);
    }
    return enumerate(within, between, orientation == ScoreOrientation::similarity);
}

} // namespace aucc
