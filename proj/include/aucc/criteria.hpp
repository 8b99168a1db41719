#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aucc/dataset.hpp"
#include "aucc/dissimilarity.hpp"
#include "aucc/partition.hpp"

namespace aucc {

// Relative validity criteria. aucc/gamma and the distance-based ones need
// only the dissimilarity matrix; the centroid-based ones (sswc, asswc, vrc,
// c_sqrt_k, pbm, davies_bouldin) also need the feature table.
enum class CriterionId {
    aucc,
    gamma,
    silhouette_swc,
    silhouette_sswc,
    silhouette_aswc,
    silhouette_asswc,
    davies_bouldin,
    vrc,
    dunn,
    pbm,
    c_index,
    c_sqrt_k,
    point_biserial,
};

inline constexpr std::array<CriterionId, 13> all_criteria = {
    CriterionId::aucc,          CriterionId::gamma,
    CriterionId::silhouette_swc, CriterionId::silhouette_sswc,
    CriterionId::silhouette_aswc, CriterionId::silhouette_asswc,
    CriterionId::davies_bouldin, CriterionId::vrc,
    CriterionId::dunn,          CriterionId::pbm,
    CriterionId::c_index,       CriterionId::c_sqrt_k,
    CriterionId::point_biserial,
};

enum class Direction { maximize, minimize };

const char* to_string(CriterionId id);
CriterionId criterion_from_string(std::string_view s);
Direction direction_of(CriterionId id);
bool needs_features(CriterionId id);

struct CriterionScore {
    CriterionId id = CriterionId::aucc;
    double value = 0.0;
    Direction direction = Direction::maximize;
    // false when the formula degenerates (zero scatter, zero spread, ...);
    // note says why
    bool defined = true;
    std::string note;
};

// data may be null for criteria with needs_features() == false
CriterionScore evaluate(CriterionId id, const Dataset* data,
                        const DissimilarityMatrix& d, const Partition& p);

std::vector<CriterionScore> evaluate_all(const Dataset* data,
                                         const DissimilarityMatrix& d,
                                         const Partition& p);

} // namespace aucc
