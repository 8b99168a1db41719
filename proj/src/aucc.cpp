#include "aucc/aucc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "aucc/error.hpp"

namespace aucc {

TiePolicy tie_policy_from_string(std::string_view s) {
    if (s == "diagonal") return TiePolicy::diagonal;
    if (s == "optimistic") return TiePolicy::optimistic;
    if (s == "pessimistic") return TiePolicy::pessimistic;
    throw input_error("unknown tie policy: " + std::string(s));
}

const char* to_string(TiePolicy p) {
    switch (p) {
        case TiePolicy::diagonal: return "diagonal";
        case TiePolicy::optimistic: return "optimistic";
        case TiePolicy::pessimistic: return "pessimistic";
    }
    return "?";
}

double aucc_from_stats(const PairStatistics& s, TiePolicy policy) {
    if (s.total == 0)
        throw degenerate_partition_error("no within/between pair comparisons");
    switch (policy) {
        case TiePolicy::diagonal:
            return static_cast<double>(2 * s.s_plus + s.s_zero) /
                   static_cast<double>(2 * s.total);
        case TiePolicy::optimistic:
            return static_cast<double>(s.s_plus + s.s_zero) /
                   static_cast<double>(s.total);
        case TiePolicy::pessimistic:
            return static_cast<double>(s.s_plus) / static_cast<double>(s.total);
    }
    throw std::logic_error("unreachable tie policy");
}

namespace {

void check_scores(std::span<const double> scores) {
    // 2^31 pairs keeps every accumulator below 2^63 (see sweep overflow note)
    if (scores.size() > (1ULL << 31))
        throw input_error("more than 2^31 pairs is not supported");
    for (double v : scores)
        if (!std::isfinite(v)) throw input_error("pair scores must be finite");
}

} // namespace

PairRanking::PairRanking(const DissimilarityMatrix& d)
    : scores_(d.condensed()), orientation_(d.orientation()) {
    build();
}

PairRanking::PairRanking(std::span<const double> scores, ScoreOrientation orientation)
    : scores_(scores), orientation_(orientation) {
    check_scores(scores_);
    build();
}

void PairRanking::build() {
    const std::size_t m = scores_.size();
    order_.resize(m);
    for (std::size_t i = 0; i < m; ++i) order_[i] = static_cast<std::uint32_t>(i);
    const double* s = scores_.data();
    if (orientation_ == ScoreOrientation::dissimilarity)
        std::sort(order_.begin(), order_.end(),
                  [s](std::uint32_t a, std::uint32_t b) {
                      return s[a] != s[b] ? s[a] < s[b] : a < b;
                  });
    else
        std::sort(order_.begin(), order_.end(),
                  [s](std::uint32_t a, std::uint32_t b) {
                      return s[a] != s[b] ? s[a] > s[b] : a < b;
                  });
    block_offsets_.clear();
    block_offsets_.push_back(0);
    for (std::size_t i = 1; i < m; ++i)
        if (s[order_[i]] != s[order_[i - 1]])
            block_offsets_.push_back(static_cast<std::uint32_t>(i));
    block_offsets_.push_back(static_cast<std::uint32_t>(m));
}

namespace {

struct SweepResult {
    PairStatistics stats;
    // doubled diagonal numerator from comparison counts: 2*s_plus + s_zero
    std::uint64_t count_num2 = 0;
    // the same quantity from midranks: 2*R_plus - P*(P+1)
    std::uint64_t rank_num2 = 0;
};

// One pass over the tie blocks in most-similar-first order. With a = flagged
// (within) and b = unflagged pairs in a block, and neg_seen the unflagged
// pairs strictly more similar than the block: each flagged member beats the
// negatives not yet seen and outside the block, loses to neg_seen, ties b.
// Midranks are accumulated in doubled integer form so the whole computation
// stays exact; the two numerators must coincide, which is verified by the
// caller.
SweepResult sweep(const PairRanking& r, std::span<const std::uint8_t> flags) {
    if (flags.size() != r.pairs())
        throw input_error("flag count does not match the ranked pair count");
    const std::size_t m = flags.size();

    std::uint64_t pos = 0;
    for (std::uint8_t f : flags) {
        if (f > 1) throw input_error("pair flags must be 0 or 1");
        pos += f;
    }
    const std::uint64_t P = pos;
    const std::uint64_t N = m - pos;
    if (P == 0 || N == 0)
        throw degenerate_partition_error(
            "need at least one within-cluster and one between-cluster pair");

    SweepResult out;
    out.stats.positives = P;
    out.stats.negatives = N;
    out.stats.total = P * N;

    const auto order = r.order();
    const auto offs = r.block_offsets();
    std::uint64_t neg_seen = 0;
    std::uint64_t rank2_plus = 0; // 2 * (midrank sum of flagged pairs)
    for (std::size_t b = 0; b + 1 < offs.size(); ++b) {
        const std::uint64_t lo = offs[b];
        const std::uint64_t hi = offs[b + 1];
        std::uint64_t a = 0;
        for (std::uint64_t i = lo; i < hi; ++i) a += flags[order[i]];
        const std::uint64_t size = hi - lo;
        const std::uint64_t bneg = size - a;
        out.stats.s_plus += a * (N - neg_seen - bneg);
        out.stats.s_minus += a * neg_seen;
        out.stats.s_zero += a * bneg;
        // ascending-similarity ranks of this block span [m-lo-size+1, m-lo]
        rank2_plus += a * (2 * m - 2 * lo - size + 1);
        neg_seen += bneg;
    }

    out.count_num2 = 2 * out.stats.s_plus + out.stats.s_zero;
    if (rank2_plus < P * (P + 1))
        throw std::logic_error("internal: midrank sum below its minimum");
    out.rank_num2 = rank2_plus - P * (P + 1);
    if (out.count_num2 != out.rank_num2)
        throw std::logic_error("internal: midrank and comparison-count paths disagree");
    return out;
}

double aucc_of_sweep(const SweepResult& s, TiePolicy policy) {
    if (policy == TiePolicy::diagonal)
        return static_cast<double>(s.rank_num2) / static_cast<double>(2 * s.stats.total);
    return aucc_from_stats(s.stats, policy);
}

RocCurve roc_of_sweep(const PairRanking& r, std::span<const std::uint8_t> flags,
                      const SweepResult& s) {
    const double P = static_cast<double>(s.stats.positives);
    const double N = static_cast<double>(s.stats.negatives);
    RocCurve c;
    c.points.reserve(r.blocks() + 1);
    const double origin_thr = r.orientation() == ScoreOrientation::dissimilarity
                                  ? -std::numeric_limits<double>::infinity()
                                  : std::numeric_limits<double>::infinity();
    c.points.push_back({0.0, 0.0, origin_thr});

    const auto order = r.order();
    const auto offs = r.block_offsets();
    std::uint64_t tp = 0, fp = 0;
    double prev_fpr = 0.0, prev_tpr = 0.0, area = 0.0;
    for (std::size_t b = 0; b + 1 < offs.size(); ++b) {
        std::uint64_t a = 0;
        for (std::uint64_t i = offs[b]; i < offs[b + 1]; ++i) a += flags[order[i]];
        tp += a;
        fp += (offs[b + 1] - offs[b]) - a;
        const double tpr = static_cast<double>(tp) / P;
        const double fpr = static_cast<double>(fp) / N;
        c.points.push_back({fpr, tpr, r.block_value(b)});
        area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
        prev_fpr = fpr;
        prev_tpr = tpr;
    }
    c.area = area;
    return c;
}

} // namespace

PairStatistics pair_statistics(const PairRanking& r, const PairwiseRelation& rel) {
    return sweep(r, rel.flags()).stats;
}

PairStatistics pair_statistics(const DissimilarityMatrix& d, const Partition& p) {
    if (d.size() != p.size())
        throw input_error("matrix and partition sizes differ");
    return pair_statistics(PairRanking(d), pairwise(p));
}

double aucc(const PairRanking& r, const PairwiseRelation& rel, TiePolicy policy) {
    return aucc_of_sweep(sweep(r, rel.flags()), policy);
}

double aucc(const DissimilarityMatrix& d, const Partition& p, TiePolicy policy) {
    if (d.size() != p.size())
        throw input_error("matrix and partition sizes differ");
    return aucc(PairRanking(d), pairwise(p), policy);
}

RocCurve roc_curve(const PairRanking& r, const PairwiseRelation& rel) {
    const auto s = sweep(r, rel.flags());
    return roc_of_sweep(r, rel.flags(), s);
}

RocCurve roc_curve(const DissimilarityMatrix& d, const Partition& p) {
    if (d.size() != p.size())
        throw input_error("matrix and partition sizes differ");
    return roc_curve(PairRanking(d), pairwise(p));
}

void write_roc_csv(std::ostream& out, const RocCurve& c) {
    out << "threshold,fpr,tpr\n";
    char buf[128];
    for (const auto& p : c.points) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g", p.threshold, p.fpr, p.tpr);
        out << buf << '\n';
    }
}

namespace {

void check_arrays(std::span<const std::uint8_t> flags, std::span<const double> scores) {
    if (flags.size() != scores.size())
        throw input_error("flag and score arrays differ in length");
    if (flags.size() < 2)
        throw input_error("need at least 2 pairs");
}

} // namespace

PairStatistics pair_statistics_from_arrays(std::span<const std::uint8_t> flags,
                                           std::span<const double> scores,
                                           ScoreOrientation orientation) {
    check_arrays(flags, scores);
    return sweep(PairRanking(scores, orientation), flags).stats;
}

double aucc_from_arrays(std::span<const std::uint8_t> flags,
                        std::span<const double> scores,
                        ScoreOrientation orientation, TiePolicy policy) {
    check_arrays(flags, scores);
    return aucc_of_sweep(sweep(PairRanking(scores, orientation), flags), policy);
}

RocCurve roc_from_arrays(std::span<const std::uint8_t> flags,
                         std::span<const double> scores,
                         ScoreOrientation orientation) {
    check_arrays(flags, scores);
    const PairRanking r(scores, orientation);
    const auto s = sweep(r, flags);
    return roc_of_sweep(r, flags, s);
}

} // namespace aucc
