#include "aucc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "aucc/aucc.hpp"
#include "aucc/error.hpp"
#include "aucc/rng.hpp"

namespace aucc {

Algorithm algorithm_from_string(std::string_view s) {
    if (s == "kmeans") return Algorithm::kmeans;
    if (s == "single") return Algorithm::single;
    if (s == "average") return Algorithm::average;
    if (s == "complete") return Algorithm::complete;
    if (s == "ward") return Algorithm::ward;
    throw input_error("unknown algorithm: " + std::string(s));
}

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kmeans: return "kmeans";
        case Algorithm::single: return "single";
        case Algorithm::average: return "average";
        case Algorithm::complete: return "complete";
        case Algorithm::ward: return "ward";
    }
    return "?";
}

namespace {

std::string canonical_config(const SweepConfig& c, std::size_t n, std::size_t dim,
                             std::size_t k_max) {
    std::ostringstream s;
    s << "metric=" << to_string(c.metric) << ";algorithms=";
    for (Algorithm a : c.algorithms) s << to_string(a) << ',';
    s << ";k=" << c.k_min << ".." << k_max << ";n_init=" << c.n_init
      << ";seed=" << c.seed << ";criteria=";
    for (CriterionId id : c.criteria) s << to_string(id) << ',';
    s << ";standardize=" << (c.standardize ? 1 : 0) << ";n=" << n << ";d=" << dim;
    return s.str();
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

ExperimentReport run_sweep(const Dataset& raw, const GroundTruth& truth,
                           const SweepConfig& config) {
    if (truth.size() != raw.size())
        throw input_error("ground truth and dataset sizes differ");
    if (config.algorithms.empty()) throw input_error("no algorithms selected");
    if (config.criteria.empty()) throw input_error("no criteria selected");

    const Dataset data = config.standardize ? raw.standardized() : raw;
    const std::size_t n = data.size();
    std::size_t k_max = config.k_max;
    if (k_max == 0)
        k_max = static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(n))));
    if (config.k_min < 2 || config.k_min > k_max || k_max > n - 1)
        throw input_error("need 2 <= k_min <= k_max <= n-1");

    const DissimilarityMatrix d = compute_dissimilarities(data, config.metric);

    ExperimentReport report;
    report.criteria = config.criteria;
    report.seed = config.seed;
    report.config_digest =
        fnv1a_hex(canonical_config(config, n, data.dim(), k_max));

    for (Algorithm algo : config.algorithms) {
        std::optional<Dendrogram> tree;
        if (algo != Algorithm::kmeans)
            tree.emplace(agglomerate(
                d, linkage_from_string(to_string(algo))));
        for (std::size_t k = config.k_min; k <= k_max; ++k) {
            Partition p =
                algo == Algorithm::kmeans
                    ? kmeans(data, k, config.n_init,
                             mix_seed(config.seed,
                                      static_cast<std::uint64_t>(algo), k))
                          .partition
                    : tree->cut(k);
            SweepRow row;
            row.algorithm = algo;
            row.k = k;
            row.scores.reserve(config.criteria.size());
            for (CriterionId id : config.criteria)
                row.scores.push_back(evaluate(id, &data, d, p));
            row.ari = adjusted_rand_index(p, truth);
            report.rows.push_back(std::move(row));
        }
    }

    // criterion columns vs the ARI column, undefined rows dropped pairwise,
    // minimized criteria negated so that higher always means better
    for (std::size_t ci = 0; ci < config.criteria.size(); ++ci) {
        CriterionCorrelation corr;
        corr.id = config.criteria[ci];
        std::vector<double> x, y;
        for (const auto& row : report.rows) {
            if (!row.scores[ci].defined) continue;
            const double sign =
                row.scores[ci].direction == Direction::minimize ? -1.0 : 1.0;
            x.push_back(sign * row.scores[ci].value);
            y.push_back(row.ari);
        }
        if (x.size() < 3) {
            corr.defined = false;
            corr.note = "fewer than 3 defined partitions";
        } else {
            const double r = pearson(x, y);
            if (std::isnan(r)) {
                corr.defined = false;
                corr.note = "zero variance in criterion or ARI column";
            } else {
                corr.r = r;
            }
        }
        report.correlations.push_back(std::move(corr));
    }
    return report;
}

namespace {

nlohmann::json score_json(const CriterionScore& s) {
    nlohmann::json j;
    j["value"] = s.value;
    j["defined"] = s.defined;
    j["direction"] = s.direction == Direction::maximize ? "max" : "min";
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

} // namespace

void write_report_json(std::ostream& out, const ExperimentReport& r) {
    nlohmann::json doc;
    doc["seed"] = r.seed;
    doc["config_digest"] = r.config_digest;
    doc["criteria"] = nlohmann::json::array();
    for (CriterionId id : r.criteria) doc["criteria"].push_back(to_string(id));
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json jr;
        jr["algorithm"] = to_string(row.algorithm);
        jr["k"] = row.k;
        jr["ari"] = row.ari;
        for (std::size_t i = 0; i < r.criteria.size(); ++i)
            jr["scores"][to_string(r.criteria[i])] = score_json(row.scores[i]);
        doc["rows"].push_back(std::move(jr));
    }
    doc["correlations"] = nlohmann::json::array();
    for (const auto& c : r.correlations) {
        nlohmann::json jc;
        jc["criterion"] = to_string(c.id);
        jc["defined"] = c.defined;
        if (c.defined)
            jc["r"] = c.r;
        else
            jc["note"] = c.note;
        doc["correlations"].push_back(std::move(jc));
    }
    out << doc.dump(2) << '\n';
}

void write_rows_csv(std::ostream& out, const ExperimentReport& r) {
    out << "algorithm,k,ari";
    for (CriterionId id : r.criteria) out << ',' << to_string(id);
    out << '\n';
    char buf[64];
    for (const auto& row : r.rows) {
        out << to_string(row.algorithm) << ',' << row.k;
        std::snprintf(buf, sizeof buf, ",%.15g", row.ari);
        out << buf;
        for (const auto& s : row.scores) {
            if (s.defined) {
                std::snprintf(buf, sizeof buf, ",%.15g", s.value);
                out << buf;
            } else {
                out << ','; // undefined scores become empty cells
            }
        }
        out << '\n';
    }
}

void write_correlations_csv(std::ostream& out, const ExperimentReport& r) {
    out << "criterion,r,defined,note\n";
    char buf[64];
    for (const auto& c : r.correlations) {
        out << to_string(c.id) << ',';
        if (c.defined) {
            std::snprintf(buf, sizeof buf, "%.15g", c.r);
            out << buf;
        }
        out << ',' << (c.defined ? "true" : "false") << ',' << c.note << '\n';
    }
}

} // namespace aucc
