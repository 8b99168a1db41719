#include "aucc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aucc/aucc.hpp"
#include "aucc/error.hpp"

namespace aucc {

const char* to_string(CriterionId id) {
    switch (id) {
        case CriterionId::aucc: return "aucc";
        case CriterionId::gamma: return "gamma";
        case CriterionId::silhouette_swc: return "swc";
        case CriterionId::silhouette_sswc: return "sswc";
        case CriterionId::silhouette_aswc: return "aswc";
        case CriterionId::silhouette_asswc: return "asswc";
        case CriterionId::davies_bouldin: return "davies_bouldin";
        case CriterionId::vrc: return "vrc";
        case CriterionId::dunn: return "dunn";
        case CriterionId::pbm: return "pbm";
        case CriterionId::c_index: return "c_index";
        case CriterionId::c_sqrt_k: return "c_sqrt_k";
        case CriterionId::point_biserial: return "point_biserial";
    }
    return "?";
}

CriterionId criterion_from_string(std::string_view s) {
    for (CriterionId id : all_criteria)
        if (s == to_string(id)) return id;
    throw input_error("unknown criterion: " + std::string(s));
}

Direction direction_of(CriterionId id) {
    switch (id) {
        case CriterionId::davies_bouldin:
        case CriterionId::c_index:
            return Direction::minimize;
        default:
            return Direction::maximize;
    }
}

bool needs_features(CriterionId id) {
    switch (id) {
        case CriterionId::silhouette_sswc:
        case CriterionId::silhouette_asswc:
        case CriterionId::davies_bouldin:
        case CriterionId::vrc:
        case CriterionId::pbm:
        case CriterionId::c_sqrt_k:
            return true;
        default:
            return false;
    }
}

namespace {

constexpr double kAswcEpsilon = 1e-6; // the b/(a+eps) silhouette variant

CriterionScore make(CriterionId id, double value) {
    CriterionScore s;
    s.id = id;
    s.direction = direction_of(id);
    if (std::isfinite(value)) {
        s.value = value;
    } else {
        s.defined = false;
        s.value = 0.0;
        s.note = "formula degenerates on this partition";
    }
    return s;
}

CriterionScore undefined(CriterionId id, std::string note) {
    CriterionScore s;
    s.id = id;
    s.direction = direction_of(id);
    s.defined = false;
    s.note = std::move(note);
    return s;
}

void require_distances(const DissimilarityMatrix& d) {
    if (d.orientation() != ScoreOrientation::dissimilarity)
        throw input_error("this criterion needs distance values, not a "
                          "similarity-oriented matrix");
}

// centroid math is a Euclidean feature-space construct regardless of the
// metric used for the pairwise matrix
double euclid(std::span<const double> a, const double* b) {
    double acc = 0.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        const double c = a[f] - b[f];
        acc += c * c;
    }
    return std::sqrt(acc);
}

struct Centroids {
    std::vector<double> c; // k x d row-major
    std::size_t k = 0, d = 0;
    const double* row(std::size_t l) const { return c.data() + l * d; }
};

Centroids centroids_of(const Dataset& data, const Partition& p) {
    Centroids out;
    out.k = p.k();
    out.d = data.dim();
    out.c.assign(out.k * out.d, 0.0);
    const auto& sizes = p.cluster_sizes();
    for (std::size_t i = 0; i < data.size(); ++i) {
        double* row = out.c.data() + static_cast<std::size_t>(p.label(i)) * out.d;
        for (std::size_t f = 0; f < out.d; ++f) row[f] += data(i, f);
    }
    for (std::size_t l = 0; l < out.k; ++l)
        for (std::size_t f = 0; f < out.d; ++f)
            out.c[l * out.d + f] /= static_cast<double>(sizes[l]);
    return out;
}

std::vector<double> global_mean(const Dataset& data) {
    std::vector<double> m(data.dim(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t f = 0; f < data.dim(); ++f) m[f] += data(i, f);
    for (double& v : m) v /= static_cast<double>(data.size());
    return m;
}

// mean distance from each object to every cluster; k columns per object
std::vector<double> mean_dist_to_clusters(const DissimilarityMatrix& d,
                                          const Partition& p) {
    const std::size_t n = p.size();
    const std::size_t k = p.k();
    std::vector<double> sums(n * k, 0.0);
    const auto scores = d.condensed();
    std::size_t pid = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++pid) {
            const double v = scores[pid];
            sums[i * k + static_cast<std::size_t>(p.label(j))] += v;
            sums[j * k + static_cast<std::size_t>(p.label(i))] += v;
        }
    }
    const auto& sizes = p.cluster_sizes();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = static_cast<std::size_t>(p.label(i));
        for (std::size_t l = 0; l < k; ++l) {
            const double cnt = static_cast<double>(sizes[l]) - (l == own ? 1.0 : 0.0);
            sums[i * k + l] = cnt > 0.0 ? sums[i * k + l] / cnt : 0.0;
        }
    }
    return sums;
}

// shared silhouette skeleton over per-object (a, b) values; classic form
// (b-a)/max(a,b), alternative form b/(a+eps); singletons contribute 0
template <typename AB>
double silhouette_mean(const Partition& p, bool alternative, AB&& ab) {
    const std::size_t n = p.size();
    const auto& sizes = p.cluster_sizes();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sizes[static_cast<std::size_t>(p.label(i))] == 1) continue; // s(i) = 0
        const auto [a, b] = ab(i);
        double s;
        if (alternative) {
            s = b / (a + kAswcEpsilon);
        } else {
            const double m = std::max(a, b);
            s = m > 0.0 ? (b - a) / m : 0.0;
        }
        acc += s;
    }
    return acc / static_cast<double>(n);
}

CriterionScore swc_like(CriterionId id, const DissimilarityMatrix& d,
                        const Partition& p, bool alternative) {
    require_distances(d);
    const std::size_t k = p.k();
    const auto md = mean_dist_to_clusters(d, p);
    const double v = silhouette_mean(p, alternative, [&](std::size_t i) {
        const std::size_t own = static_cast<std::size_t>(p.label(i));
        const double a = md[i * k + own];
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < k; ++l)
            if (l != own) b = std::min(b, md[i * k + l]);
        return std::pair<double, double>(a, b);
    });
    return make(id, v);
}

CriterionScore sswc_like(CriterionId id, const Dataset& data, const Partition& p,
                         bool alternative) {
    const Centroids c = centroids_of(data, p);
    const double v = silhouette_mean(p, alternative, [&](std::size_t i) {
        const std::size_t own = static_cast<std::size_t>(p.label(i));
        const double a = euclid(data.row(i), c.row(own));
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < c.k; ++l)
            if (l != own) b = std::min(b, euclid(data.row(i), c.row(l)));
        return std::pair<double, double>(a, b);
    });
    return make(id, v);
}

CriterionScore davies_bouldin(const Dataset& data, const Partition& p) {
    const Centroids c = centroids_of(data, p);
    const std::size_t k = p.k();
    std::vector<double> scatter(k, 0.0); // mean distance to own centroid
    for (std::size_t i = 0; i < data.size(); ++i)
        scatter[static_cast<std::size_t>(p.label(i))] +=
            euclid(data.row(i), c.row(static_cast<std::size_t>(p.label(i))));
    for (std::size_t l = 0; l < k; ++l)
        scatter[l] /= static_cast<double>(p.cluster_sizes()[l]);

    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const double sep = euclid({c.row(i), c.d}, c.row(j));
            if (sep == 0.0)
                return undefined(CriterionId::davies_bouldin, "coincident centroids");
            worst = std::max(worst, (scatter[i] + scatter[j]) / sep);
        }
        acc += worst;
    }
    return make(CriterionId::davies_bouldin, acc / static_cast<double>(k));
}

CriterionScore vrc(const Dataset& data, const Partition& p) {
    const Centroids c = centroids_of(data, p);
    const auto gm = global_mean(data);
    const std::size_t n = data.size();
    const std::size_t k = p.k();
    double within = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = c.row(static_cast<std::size_t>(p.label(i)));
        for (std::size_t f = 0; f < data.dim(); ++f) {
            const double dv = data(i, f) - row[f];
            within += dv * dv;
        }
    }
    double between = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
        double sq = 0.0;
        for (std::size_t f = 0; f < data.dim(); ++f) {
            const double dv = c.row(l)[f] - gm[f];
            sq += dv * dv;
        }
        between += static_cast<double>(p.cluster_sizes()[l]) * sq;
    }
    if (within == 0.0)
        return undefined(CriterionId::vrc, "zero within-cluster scatter");
    const double v = (between / static_cast<double>(k - 1)) /
                     (within / static_cast<double>(n - k));
    return make(CriterionId::vrc, v);
}

CriterionScore dunn(const DissimilarityMatrix& d, const Partition& p) {
    require_distances(d);
    const std::size_t n = p.size();
    double max_diam = 0.0;
    double min_sep = std::numeric_limits<double>::infinity();
    const auto scores = d.condensed();
    std::size_t pid = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++pid) {
            if (p.label(i) == p.label(j))
                max_diam = std::max(max_diam, scores[pid]);
            else
                min_sep = std::min(min_sep, scores[pid]);
        }
    if (max_diam == 0.0)
        return undefined(CriterionId::dunn, "zero cluster diameter");
    return make(CriterionId::dunn, min_sep / max_diam);
}

CriterionScore pbm(const Dataset& data, const Partition& p) {
    const Centroids c = centroids_of(data, p);
    const auto gm = global_mean(data);
    double e1 = 0.0, ek = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        e1 += euclid(data.row(i), gm.data());
        ek += euclid(data.row(i), c.row(static_cast<std::size_t>(p.label(i))));
    }
    double dk = 0.0;
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = i + 1; j < c.k; ++j)
            dk = std::max(dk, euclid({c.row(i), c.d}, c.row(j)));
    if (ek == 0.0)
        return undefined(CriterionId::pbm, "zero within-cluster distance sum");
    const double v = (e1 / ek) * dk / static_cast<double>(p.k());
    return make(CriterionId::pbm, v * v); // squared, as originally defined
}

CriterionScore c_index(const DissimilarityMatrix& d, const Partition& p) {
    require_distances(d);
    const std::size_t n = p.size();
    const auto scores = d.condensed();
    double s = 0.0;
    std::size_t within = 0;
    std::size_t pid = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++pid)
            if (p.label(i) == p.label(j)) {
                s += scores[pid];
                ++within;
            }
    std::vector<double> sorted(scores.begin(), scores.end());
    std::sort(sorted.begin(), sorted.end());
    double s_min = 0.0, s_max = 0.0;
    for (std::size_t i = 0; i < within; ++i) {
        s_min += sorted[i];
        s_max += sorted[sorted.size() - 1 - i];
    }
    if (s_max == s_min)
        return undefined(CriterionId::c_index, "all pair distances equal");
    return make(CriterionId::c_index, (s - s_min) / (s_max - s_min));
}

CriterionScore c_sqrt_k(const Dataset& data, const Partition& p) {
    const Centroids c = centroids_of(data, p);
    const auto gm = global_mean(data);
    double acc = 0.0;
    std::size_t used = 0;
    for (std::size_t f = 0; f < data.dim(); ++f) {
        double tss = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double dv = data(i, f) - gm[f];
            tss += dv * dv;
        }
        if (tss == 0.0) continue; // constant feature carries no signal
        double bgss = 0.0;
        for (std::size_t l = 0; l < c.k; ++l) {
            const double dv = c.row(l)[f] - gm[f];
            bgss += static_cast<double>(p.cluster_sizes()[l]) * dv * dv;
        }
        acc += std::sqrt(bgss / tss);
        ++used;
    }
    if (used == 0)
        return undefined(CriterionId::c_sqrt_k, "all features constant");
    const double cbar = acc / static_cast<double>(used);
    return make(CriterionId::c_sqrt_k, cbar / std::sqrt(static_cast<double>(p.k())));
}

// (mean between - mean within) * sqrt(P/m * N/m) / population stddev of all
// pair distances
CriterionScore point_biserial(const DissimilarityMatrix& d, const Partition& p) {
    require_distances(d);
    const std::size_t n = p.size();
    const auto scores = d.condensed();
    const double m = static_cast<double>(scores.size());
    double sum_w = 0.0, sum_b = 0.0, sum = 0.0, sum_sq = 0.0;
    std::uint64_t cnt_w = 0;
    std::size_t pid = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++pid) {
            const double v = scores[pid];
            sum += v;
            sum_sq += v * v;
            if (p.label(i) == p.label(j)) {
                sum_w += v;
                ++cnt_w;
            } else {
                sum_b += v;
            }
        }
    const double cnt_b = m - static_cast<double>(cnt_w);
    const double var = sum_sq / m - (sum / m) * (sum / m);
    if (var <= 0.0)
        return undefined(CriterionId::point_biserial, "all pair distances equal");
    const double mean_w = sum_w / static_cast<double>(cnt_w);
    const double mean_b = sum_b / cnt_b;
    const double v = (mean_b - mean_w) *
                     std::sqrt(static_cast<double>(cnt_w) * cnt_b / (m * m)) /
                     std::sqrt(var);
    return make(CriterionId::point_biserial, v);
}

} // namespace

CriterionScore evaluate(CriterionId id, const Dataset* data,
                        const DissimilarityMatrix& d, const Partition& p) {
    if (d.size() != p.size())
        throw input_error("matrix and partition sizes differ");
    if (needs_features(id)) {
        if (!data) throw input_error(std::string(to_string(id)) +
                                     " requires feature data");
        if (data->size() != p.size())
            throw input_error("dataset and partition sizes differ");
    }
    switch (id) {
        case CriterionId::aucc:
            return make(id, aucc(d, p, TiePolicy::diagonal));
        case CriterionId::gamma:
            // identical ranking information, different range
            return make(id, 2.0 * aucc(d, p, TiePolicy::diagonal) - 1.0);
        case CriterionId::silhouette_swc:
            return swc_like(id, d, p, false);
        case CriterionId::silhouette_aswc:
            return swc_like(id, d, p, true);
        case CriterionId::silhouette_sswc:
            return sswc_like(id, *data, p, false);
        case CriterionId::silhouette_asswc:
            return sswc_like(id, *data, p, true);
        case CriterionId::davies_bouldin:
            return davies_bouldin(*data, p);
        case CriterionId::vrc:
            return vrc(*data, p);
        case CriterionId::dunn:
            return dunn(d, p);
        case CriterionId::pbm:
            return pbm(*data, p);
        case CriterionId::c_index:
            return c_index(d, p);
        case CriterionId::c_sqrt_k:
            return c_sqrt_k(*data, p);
        case CriterionId::point_biserial:
            return point_biserial(d, p);
    }
    throw std::logic_error("unreachable criterion id");
}

std::vector<CriterionScore> evaluate_all(const Dataset* data,
                                         const DissimilarityMatrix& d,
                                         const Partition& p) {
    std::vector<CriterionScore> out;
    out.reserve(all_criteria.size());
    for (CriterionId id : all_criteria) out.push_back(evaluate(id, data, d, p));
    return out;
}

} // namespace aucc
