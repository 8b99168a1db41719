#include "aucc/null_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "aucc/aucc.hpp"
#include "aucc/error.hpp"
#include "aucc/rng.hpp"

namespace aucc {

BalanceScheme BalanceScheme::balanced() { return {"balanced", {}}; }
BalanceScheme BalanceScheme::one_cluster_10pct() { return {"one_cluster_10pct", {}}; }
BalanceScheme BalanceScheme::one_cluster_60pct() { return {"one_cluster_60pct", {}}; }

BalanceScheme BalanceScheme::explicit_proportions(std::vector<double> p) {
    if (p.size() < 2) throw input_error("need at least 2 proportions");
    double sum = 0.0;
    for (double v : p) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw input_error("proportions must be positive and finite");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
        throw input_error("proportions must sum to 1");
    for (double& v : p) v /= sum;
    return {"explicit", std::move(p)};
}

BalanceScheme BalanceScheme::from_string(std::string_view s) {
    if (s == "balanced") return balanced();
    if (s == "one_cluster_10pct") return one_cluster_10pct();
    if (s == "one_cluster_60pct") return one_cluster_60pct();
    if (s.rfind("explicit:", 0) == 0) {
        std::vector<double> p;
        std::string tok;
        for (char c : s.substr(9)) {
            if (c == ',') {
                p.push_back(std::stod(tok));
                tok.clear();
            } else {
                tok += c;
            }
        }
        if (!tok.empty()) p.push_back(std::stod(tok));
        return explicit_proportions(std::move(p));
    }
    throw input_error("unknown balance scheme: " + std::string(s));
}

std::vector<double> BalanceScheme::proportions(std::size_t k) const {
    if (k < 2) throw input_error("schemes need k >= 2");
    if (name_ == "balanced")
        return std::vector<double>(k, 1.0 / static_cast<double>(k));
    if (name_ == "one_cluster_10pct" || name_ == "one_cluster_60pct") {
        const double head = name_ == "one_cluster_10pct" ? 0.10 : 0.60;
        std::vector<double> p(k, (1.0 - head) / static_cast<double>(k - 1));
        p[0] = head;
        return p;
    }
    if (explicit_.size() != k)
        throw input_error("explicit proportions are for k = " +
                          std::to_string(explicit_.size()) + ", not k = " +
                          std::to_string(k));
    return explicit_;
}

std::vector<std::size_t> scheme_sizes(std::size_t n, std::size_t k,
                                      const BalanceScheme& scheme) {
    if (k < 2 || k > n - 1)
        throw input_error("need 2 <= k <= n-1 for random partitions");
    const auto props = scheme.proportions(k);
    std::vector<std::size_t> sizes(k);
    std::vector<double> frac(k);
    std::size_t assigned = 0;
    for (std::size_t l = 0; l < k; ++l) {
        const double target = static_cast<double>(n) * props[l];
        sizes[l] = static_cast<std::size_t>(target);
        frac[l] = target - static_cast<double>(sizes[l]);
        assigned += sizes[l];
    }
    // leftover objects to the largest fractional parts, ties to lower index
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t r = 0; r < n - assigned; ++r) ++sizes[idx[r % k]];
    for (std::size_t l = 0; l < k; ++l)
        if (sizes[l] == 0)
            throw input_error("scheme " + scheme.name() + " is infeasible for n = " +
                              std::to_string(n) + ", k = " + std::to_string(k) +
                              " (a cluster would be empty)");
    return sizes;
}

Partition random_partition(std::size_t n, std::size_t k,
                           const BalanceScheme& scheme, std::uint64_t seed) {
    const auto sizes = scheme_sizes(n, k, scheme);
    std::vector<int> labels;
    labels.reserve(n);
    for (std::size_t l = 0; l < k; ++l)
        labels.insert(labels.end(), sizes[l], static_cast<int>(l));
    Rng rng(seed);
    rng.shuffle(labels);
    return Partition(labels);
}

NullModelReport expected_value_study(const Dataset* data,
                                     const DissimilarityMatrix& d,
                                     std::span<const std::size_t> ks,
                                     std::span<const BalanceScheme> schemes,
                                     std::size_t replicates,
                                     CriterionId criterion,
                                     std::uint64_t seed) {
    if (ks.empty() || schemes.empty())
        throw input_error("need at least one k and one scheme");
    if (replicates < 1) throw input_error("need at least one replicate");
    if (needs_features(criterion) && !data)
        throw input_error(std::string(to_string(criterion)) +
                          " requires feature data");
    const std::size_t n = d.size();

    // aucc and gamma share one sorted ranking across every replicate; the
    // per-replicate work is then a single O(m) sweep
    const bool fast = criterion == CriterionId::aucc || criterion == CriterionId::gamma;
    std::optional<PairRanking> ranking;
    if (fast) ranking.emplace(d);

    NullModelReport report;
    report.criterion = criterion;
    report.seed = seed;
    report.replicates = replicates;

    std::size_t cell_index = 0;
    std::vector<double> values;
    for (std::size_t k : ks) {
        for (const auto& scheme : schemes) {
            values.clear();
            for (std::size_t rep = 0; rep < replicates; ++rep) {
                const std::uint64_t sub = mix_seed(seed, cell_index, rep);
                const Partition p = random_partition(n, k, scheme, sub);
                double v;
                bool ok = true;
                if (fast) {
                    v = aucc(*ranking, pairwise(p), TiePolicy::diagonal);
                    if (criterion == CriterionId::gamma) v = 2.0 * v - 1.0;
                } else {
                    const CriterionScore s = evaluate(criterion, data, d, p);
                    ok = s.defined;
                    v = s.value;
                }
                if (ok) values.push_back(v);
            }
            if (values.empty())
                throw input_error("criterion undefined on every replicate of k = " +
                                  std::to_string(k) + ", scheme " + scheme.name());
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= static_cast<double>(values.size());
            double sd = 0.0;
            if (values.size() > 1) {
                double ss = 0.0;
                for (double v : values) ss += (v - mean) * (v - mean);
                sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
            }
            report.cells.push_back({k, scheme.name(), mean, sd, values.size()});
            ++cell_index;
        }
    }
    return report;
}

void write_null_report_json(std::ostream& out, const NullModelReport& r) {
    nlohmann::json doc;
    doc["criterion"] = to_string(r.criterion);
    doc["seed"] = r.seed;
    doc["replicates"] = r.replicates;
    doc["cells"] = nlohmann::json::array();
    for (const auto& c : r.cells)
        doc["cells"].push_back({{"k", c.k},
                                {"scheme", c.scheme},
                                {"mean", c.mean},
                                {"stddev", c.stddev},
                                {"replicates", c.replicates}});
    out << doc.dump(2) << '\n';
}

std::pair<Dataset, GroundTruth> generate_gaussian_mixture(
    std::span<const MixtureComponent> spec, std::uint64_t seed) {
    if (spec.size() < 2)
        throw input_error("mixture needs at least 2 components");
    const std::size_t dim = spec[0].center.size();
    if (dim == 0) throw input_error("mixture centers need at least 1 dimension");
    std::size_t n = 0;
    for (const auto& comp : spec) {
        if (comp.center.size() != dim)
            throw input_error("mixture centers differ in dimension");
        for (double c : comp.center)
            if (!std::isfinite(c)) throw input_error("mixture center not finite");
        if (!(comp.variance > 0.0) || !std::isfinite(comp.variance))
            throw input_error("mixture variance must be positive and finite");
        if (comp.size == 0) throw input_error("mixture component size must be >= 1");
        n += comp.size;
    }

    Rng rng(seed);
    std::vector<double> values;
    values.reserve(n * dim);
    std::vector<int> labels;
    labels.reserve(n);
    int comp_id = 0;
    for (const auto& comp : spec) {
        const double sd = std::sqrt(comp.variance);
        for (std::size_t i = 0; i < comp.size; ++i) {
            for (std::size_t f = 0; f < dim; ++f)
                values.push_back(comp.center[f] + sd * rng.normal());
            labels.push_back(comp_id);
        }
        ++comp_id;
    }
    return {Dataset(std::move(values), n, dim), GroundTruth(labels)};
}

} // namespace aucc
