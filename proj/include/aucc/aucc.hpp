#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "aucc/dissimilarity.hpp"
#include "aucc/partition.hpp"

namespace aucc {

// How within/between pairs tied on the score contribute to the area:
//   diagonal    - half credit (s0/2), the ROC convention and the default
//   optimistic  - full credit, equals the max over tied-pair orderings
//   pessimistic - no credit, equals the min over tied-pair orderings
enum class TiePolicy { diagonal, optimistic, pessimistic };

TiePolicy tie_policy_from_string(std::string_view s);
const char* to_string(TiePolicy p);

// Exact comparison counts between within-cluster pairs (positives, P of
// them) and between-cluster pairs (negatives, N): over all P*N ordered
// comparisons, s_plus where the within pair is strictly more similar,
// s_minus where strictly less, s_zero where the scores tie exactly.
struct PairStatistics {
    std::uint64_t s_plus = 0;
    std::uint64_t s_minus = 0;
    std::uint64_t s_zero = 0;
    std::uint64_t positives = 0;
    std::uint64_t negatives = 0;
    std::uint64_t total = 0; // positives * negatives
};

double aucc_from_stats(const PairStatistics& s, TiePolicy policy);

// Pair ids sorted most-similar-first (ties broken by pair id) with tied
// values grouped into blocks. Building it is the O(m log m) part; each
// evaluation against a partition is then a single O(m) sweep. Holds a view
// of the scores it was built from, so it must not outlive them.
class PairRanking {
public:
    explicit PairRanking(const DissimilarityMatrix& d);
    PairRanking(std::span<const double> scores, ScoreOrientation orientation);

    std::size_t pairs() const { return order_.size(); }
    std::size_t blocks() const { return block_offsets_.size() - 1; }
    std::span<const std::uint32_t> order() const { return order_; }
    // blocks() + 1 offsets into order(); block b is [off[b], off[b+1])
    std::span<const std::uint32_t> block_offsets() const { return block_offsets_; }
    double block_value(std::size_t b) const { return scores_[order_[block_offsets_[b]]]; }
    ScoreOrientation orientation() const { return orientation_; }

private:
    void build();
    std::span<const double> scores_;
    ScoreOrientation orientation_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> block_offsets_;
};

PairStatistics pair_statistics(const PairRanking& r, const PairwiseRelation& rel);
PairStatistics pair_statistics(const DissimilarityMatrix& d, const Partition& p);

// Area under the ROC curve of the pairwise ranking induced by the scores:
// probability (with the tie policy deciding tied mass) that a random
// within-cluster pair ranks more similar than a random between-cluster one.
// The production path is the midrank Mann-Whitney form in exact integer
// arithmetic; the comparison-count form is computed in the same sweep and
// the two are verified to agree.
double aucc(const DissimilarityMatrix& d, const Partition& p,
            TiePolicy policy = TiePolicy::diagonal);
double aucc(const PairRanking& r, const PairwiseRelation& rel,
            TiePolicy policy = TiePolicy::diagonal);

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    // score at which the point is reached; -inf (dissimilarity sweep) or
    // +inf (similarity sweep) for the (0, 0) origin
    double threshold = 0.0;
};

// Sweep from most similar to least similar, one point per distinct score
// plus the origin; a tied block advances tpr and fpr jointly, so the curve
// cuts diagonally across the block. area is the trapezoidal area, which
// matches aucc(..., diagonal).
struct RocCurve {
    std::vector<RocPoint> points;
    double area = 0.0;
};

RocCurve roc_curve(const DissimilarityMatrix& d, const Partition& p);
RocCurve roc_curve(const PairRanking& r, const PairwiseRelation& rel);

// header "threshold,fpr,tpr", >= 12 significant digits
void write_roc_csv(std::ostream& out, const RocCurve& c);

// Evaluation straight from per-pair flags (1 = within) and scores. Needs at
// least one flag of each kind; flags must be 0/1.
PairStatistics pair_statistics_from_arrays(std::span<const std::uint8_t> flags,
                                           std::span<const double> scores,
                                           ScoreOrientation orientation);
double aucc_from_arrays(std::span<const std::uint8_t> flags,
                        std::span<const double> scores,
                        ScoreOrientation orientation,
                        TiePolicy policy = TiePolicy::diagonal);
RocCurve roc_from_arrays(std::span<const std::uint8_t> flags,
                         std::span<const double> scores,
                         ScoreOrientation orientation);

} // namespace aucc
