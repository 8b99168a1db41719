// command line front end: evaluate partitions, export ROC curves, run the
// null-model study, sweep clusterers against ground truth, sample mixtures

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aucc/aucc.hpp"
#include "aucc/clusterers.hpp"
#include "aucc/criteria.hpp"
#include "aucc/csv.hpp"
#include "aucc/error.hpp"
#include "aucc/external.hpp"
#include "aucc/gamma.hpp"
#include "aucc/null_model.hpp"
#include "aucc/pipeline.hpp"

namespace {

using namespace aucc;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : s) {
        if (c == ',') {
            if (!tok.empty()) out.push_back(tok);
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            tok += c;
        }
    }
    if (!tok.empty()) out.push_back(tok);
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw input_error("cannot write file: " + path);
    return f;
}

struct GlobalOpts {
    std::string metric = "euclidean";
    std::string tie_policy = "diagonal";
    std::string format = "json";
    std::uint64_t seed = 1;

    Metric metric_v() const { return metric_from_string(metric); }
    TiePolicy policy_v() const { return tie_policy_from_string(tie_policy); }
    bool json() const {
        if (format == "json") return true;
        if (format == "csv") return false;
        throw input_error("unknown format: " + format);
    }
};

// one scored input for aucc/roc/gamma: features + partition, matrix +
// partition, or a raw flag/score list
struct EvalOpts {
    std::string data, matrix, pairs, partition;
    bool similarity = false;
};

void add_eval_opts(CLI::App* cmd, EvalOpts& o) {
    cmd->add_option("--data", o.data, "feature CSV (with --partition)");
    cmd->add_option("--matrix", o.matrix, "full square proximity CSV (with --partition)");
    cmd->add_option("--pairs", o.pairs, "flag,score CSV of pre-labeled pairs");
    cmd->add_option("--partition", o.partition, "integer label file, one per object");
    cmd->add_flag("--similarity", o.similarity,
                  "scores in --matrix/--pairs rank higher = more similar");
}

struct Resolved {
    std::optional<DissimilarityMatrix> d;
    std::optional<Partition> p;
    std::optional<PairArrays> arrays;
    ScoreOrientation orientation = ScoreOrientation::dissimilarity;
};

Resolved resolve(const EvalOpts& o, const GlobalOpts& g) {
    const int sources =
        (!o.data.empty()) + (!o.matrix.empty()) + (!o.pairs.empty());
    if (sources != 1)
        throw input_error("give exactly one of --data, --matrix, --pairs");
    Resolved r;
    r.orientation = o.similarity ? ScoreOrientation::similarity
                                 : ScoreOrientation::dissimilarity;
    if (!o.pairs.empty()) {
        if (!o.partition.empty())
            throw input_error("--pairs rows already carry the partition flags");
        r.arrays = load_pair_arrays_csv(o.pairs);
        return r;
    }
    if (o.partition.empty())
        throw input_error("--partition is required with --data/--matrix");
    if (!o.matrix.empty()) {
        r.d = load_matrix_csv(o.matrix, r.orientation);
    } else {
        if (o.similarity)
            throw input_error("--similarity only applies to --matrix or --pairs");
        r.d = compute_dissimilarities(load_dataset_csv(o.data).data, g.metric_v());
    }
    r.p = load_partition(o.partition);
    if (r.d->size() != r.p->size())
        throw input_error("matrix and partition sizes differ");
    return r;
}

void emit_measure(const char* name, double value, const PairStatistics& st,
                  const char* policy, bool json) {
    char buf[512];
    if (json) {
        std::snprintf(buf, sizeof buf,
                      "{\n  \"%s\": %.15g,\n  \"tie_policy\": \"%s\",\n"
                      "  \"s_plus\": %llu,\n  \"s_minus\": %llu,\n"
                      "  \"s_zero\": %llu,\n  \"positives\": %llu,\n"
                      "  \"negatives\": %llu,\n  \"total\": %llu\n}",
                      name, value, policy,
                      static_cast<unsigned long long>(st.s_plus),
                      static_cast<unsigned long long>(st.s_minus),
                      static_cast<unsigned long long>(st.s_zero),
                      static_cast<unsigned long long>(st.positives),
                      static_cast<unsigned long long>(st.negatives),
                      static_cast<unsigned long long>(st.total));
        std::cout << buf << '\n';
    } else {
        std::printf("%s,tie_policy,s_plus,s_minus,s_zero,positives,negatives,total\n",
                    name);
        std::snprintf(buf, sizeof buf, "%.15g,%s,%llu,%llu,%llu,%llu,%llu,%llu",
                      value, policy,
                      static_cast<unsigned long long>(st.s_plus),
                      static_cast<unsigned long long>(st.s_minus),
                      static_cast<unsigned long long>(st.s_zero),
                      static_cast<unsigned long long>(st.positives),
                      static_cast<unsigned long long>(st.negatives),
                      static_cast<unsigned long long>(st.total));
        std::cout << buf << '\n';
    }
}

void run_aucc(const EvalOpts& o, const GlobalOpts& g) {
    const Resolved r = resolve(o, g);
    const TiePolicy policy = g.policy_v();
    PairStatistics st;
    if (r.arrays)
        st = pair_statistics_from_arrays(r.arrays->flags, r.arrays->scores,
                                         r.orientation);
    else
        st = pair_statistics(*r.d, *r.p);
    emit_measure("aucc", aucc_from_stats(st, policy), st, to_string(policy),
                 g.json());
}

void run_roc(const EvalOpts& o, const GlobalOpts& g, const std::string& out_path) {
    const Resolved r = resolve(o, g);
    const RocCurve c = r.arrays
                           ? roc_from_arrays(r.arrays->flags, r.arrays->scores,
                                             r.orientation)
                           : roc_curve(*r.d, *r.p);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    if (g.json()) {
        nlohmann::json doc;
        doc["area"] = c.area;
        doc["points"] = nlohmann::json::array();
        for (const auto& pt : c.points)
            doc["points"].push_back(
                {{"threshold", pt.threshold}, {"fpr", pt.fpr}, {"tpr", pt.tpr}});
        *out << doc.dump(2) << '\n';
    } else {
        write_roc_csv(*out, c);
    }
}

void run_gamma(const EvalOpts& o, const GlobalOpts& g, bool oracle,
               std::size_t cap) {
    const Resolved r = resolve(o, g);
    GammaResult res;
    if (r.arrays) {
        // the array path enumerates directly either way
        res = gamma_from_arrays(r.arrays->flags, r.arrays->scores, r.orientation);
    } else if (oracle) {
        res = gamma_naive(*r.d, *r.p, cap);
    } else {
        res.stats = pair_statistics(*r.d, *r.p);
        res.gamma = gamma_from_stats(res.stats);
    }
    emit_measure("gamma", res.gamma, res.stats,
                 oracle || r.arrays ? "enumerated" : "fast", g.json());
}

void run_validate(const EvalOpts& o, const GlobalOpts& g,
                  const std::string& criteria_list) {
    std::optional<Dataset> data;
    std::optional<DissimilarityMatrix> d;
    if (!o.pairs.empty())
        throw input_error("validate needs --data or --matrix, not --pairs");
    if (!o.data.empty() == !o.matrix.empty())
        throw input_error("give exactly one of --data, --matrix");
    if (o.partition.empty()) throw input_error("--partition is required");
    if (!o.data.empty()) {
        if (o.similarity)
            throw input_error("--similarity only applies to --matrix or --pairs");
        data = load_dataset_csv(o.data).data;
        d = compute_dissimilarities(*data, g.metric_v());
    } else {
        d = load_matrix_csv(o.matrix, o.similarity ? ScoreOrientation::similarity
                                                   : ScoreOrientation::dissimilarity);
    }
    const Partition p = load_partition(o.partition);

    std::vector<CriterionId> ids;
    if (criteria_list.empty())
        ids.assign(all_criteria.begin(), all_criteria.end());
    else
        for (const auto& s : split_list(criteria_list))
            ids.push_back(criterion_from_string(s));

    std::vector<CriterionScore> scores;
    for (CriterionId id : ids) {
        if (needs_features(id) && !data) {
            CriterionScore s;
            s.id = id;
            s.direction = direction_of(id);
            s.defined = false;
            s.note = "requires feature input";
            scores.push_back(std::move(s));
            continue;
        }
        scores.push_back(evaluate(id, data ? &*data : nullptr, *d, p));
    }

    if (g.json()) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& s : scores) {
            nlohmann::json j;
            j["criterion"] = to_string(s.id);
            j["value"] = s.value;
            j["defined"] = s.defined;
            j["direction"] = s.direction == Direction::maximize ? "max" : "min";
            if (!s.note.empty()) j["note"] = s.note;
            doc.push_back(std::move(j));
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::printf("criterion,value,defined,direction,note\n");
        for (const auto& s : scores) {
            if (s.defined)
                std::printf("%s,%.15g,true,%s,%s\n", to_string(s.id), s.value,
                            s.direction == Direction::maximize ? "max" : "min",
                            s.note.c_str());
            else
                std::printf("%s,,false,%s,%s\n", to_string(s.id),
                            s.direction == Direction::maximize ? "max" : "min",
                            s.note.c_str());
        }
    }
}

void run_nullcheck(const EvalOpts& o, const GlobalOpts& g, const std::string& ks_list,
                   const std::string& schemes_list, std::size_t replicates,
                   const std::string& criterion_name) {
    std::optional<Dataset> data;
    std::optional<DissimilarityMatrix> d;
    if (!o.data.empty() == !o.matrix.empty())
        throw input_error("give exactly one of --data, --matrix");
    if (!o.data.empty()) {
        data = load_dataset_csv(o.data).data;
        d = compute_dissimilarities(*data, g.metric_v());
    } else {
        d = load_matrix_csv(o.matrix, o.similarity ? ScoreOrientation::similarity
                                                   : ScoreOrientation::dissimilarity);
    }

    std::vector<std::size_t> ks;
    for (const auto& s : split_list(ks_list)) {
        const long v = std::strtol(s.c_str(), nullptr, 10);
        if (v < 2) throw input_error("bad k in --ks: " + s);
        ks.push_back(static_cast<std::size_t>(v));
    }
    if (ks.empty()) throw input_error("--ks is required");
    std::vector<BalanceScheme> schemes;
    for (const auto& s : split_list(schemes_list))
        schemes.push_back(BalanceScheme::from_string(s));

    const CriterionId criterion = criterion_from_string(criterion_name);
    const NullModelReport report = expected_value_study(
        data ? &*data : nullptr, *d, ks, schemes, replicates, criterion, g.seed);

    if (g.json()) {
        write_null_report_json(std::cout, report);
    } else {
        std::printf("k,scheme,mean,stddev,replicates\n");
        for (const auto& c : report.cells)
            std::printf("%zu,%s,%.15g,%.15g,%zu\n", c.k, c.scheme.c_str(), c.mean,
                        c.stddev, c.replicates);
    }
}

void run_sweep(const GlobalOpts& g, const std::string& data_path,
               const std::string& truth_path, bool label_column,
               const std::string& algorithms_list, std::size_t k_min,
               std::size_t k_max, std::size_t n_init,
               const std::string& criteria_list, bool standardize,
               const std::string& out_prefix) {
    if (data_path.empty()) throw input_error("--data is required");
    if (label_column == !truth_path.empty())
        throw input_error("give exactly one of --label-column, --truth");

    const LoadedDataset loaded = load_dataset_csv(data_path, label_column);
    const GroundTruth truth =
        label_column ? *loaded.truth : load_ground_truth(truth_path);

    SweepConfig config;
    config.metric = g.metric_v();
    config.seed = g.seed;
    config.k_min = k_min;
    config.k_max = k_max;
    config.n_init = n_init;
    config.standardize = standardize;
    config.algorithms.clear();
    for (const auto& s : split_list(algorithms_list))
        config.algorithms.push_back(algorithm_from_string(s));
    if (!criteria_list.empty()) {
        config.criteria.clear();
        for (const auto& s : split_list(criteria_list))
            config.criteria.push_back(criterion_from_string(s));
    }

    for (Algorithm a : config.algorithms)
        if (a == Algorithm::ward && config.metric != Metric::euclidean)
            std::fprintf(stderr,
                         "warning: ward linkage assumes Euclidean geometry; "
                         "proceeding on the %s matrix\n",
                         to_string(config.metric));

    const ExperimentReport report = aucc::run_sweep(loaded.data, truth, config);

    if (out_prefix.empty()) {
        if (g.json()) {
            write_report_json(std::cout, report);
        } else {
            write_rows_csv(std::cout, report);
            std::cout << '\n';
            write_correlations_csv(std::cout, report);
        }
        return;
    }
    auto json_file = open_out(out_prefix + ".json");
    write_report_json(json_file, report);
    auto rows_file = open_out(out_prefix + "_rows.csv");
    write_rows_csv(rows_file, report);
    auto corr_file = open_out(out_prefix + "_correlations.csv");
    write_correlations_csv(corr_file, report);
    std::fprintf(stderr, "wrote %s.json, %s_rows.csv, %s_correlations.csv\n",
                 out_prefix.c_str(), out_prefix.c_str(), out_prefix.c_str());
}

std::vector<MixtureComponent> parse_components(const std::string& spec) {
    // center coords ':' variance ':' size, components separated by ';'
    // e.g. "0,0:25:200;40,40:25:200"
    std::vector<MixtureComponent> out;
    std::stringstream comps(spec);
    std::string comp;
    while (std::getline(comps, comp, ';')) {
        if (comp.empty()) continue;
        std::stringstream parts(comp);
        std::string center_s, var_s, size_s;
        if (!std::getline(parts, center_s, ':') || !std::getline(parts, var_s, ':') ||
            !std::getline(parts, size_s))
            throw input_error("bad component spec (want center:variance:size): " + comp);
        MixtureComponent c;
        for (const auto& t : split_list(center_s)) c.center.push_back(std::stod(t));
        c.variance = std::stod(var_s);
        const long sz = std::strtol(size_s.c_str(), nullptr, 10);
        if (sz < 1) throw input_error("bad component size: " + size_s);
        c.size = static_cast<std::size_t>(sz);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<MixtureComponent> parse_components_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(path + ": bad JSON: " + e.what());
    }
    std::vector<MixtureComponent> out;
    for (const auto& j : doc) {
        MixtureComponent c;
        for (const auto& v : j.at("center")) c.center.push_back(v.get<double>());
        c.variance = j.at("variance").get<double>();
        c.size = j.at("size").get<std::size_t>();
        out.push_back(std::move(c));
    }
    return out;
}

void run_gen_mixture(const GlobalOpts& g, const std::string& components,
                     const std::string& spec_json, const std::string& out_path) {
    if (components.empty() == spec_json.empty())
        throw input_error("give exactly one of --components, --spec-json");
    const auto spec = components.empty() ? parse_components_json(spec_json)
                                         : parse_components(components);
    auto [data, truth] = generate_gaussian_mixture(spec, g.seed);
    std::vector<int> labels(truth.labels().begin(), truth.labels().end());
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    write_dataset_csv(*out, data, &labels);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering validation toolkit built around pairwise ROC analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--metric", g.metric, "euclidean | squared-euclidean | manhattan")
        ->capture_default_str();
    app.add_option("--tie-policy", g.tie_policy, "diagonal | optimistic | pessimistic")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--format", g.format, "json | csv")->capture_default_str();

    EvalOpts aucc_o, roc_o, gamma_o, validate_o, null_o;
    std::string roc_out;
    bool gamma_oracle = false;
    std::size_t gamma_cap = 200;
    std::string validate_criteria;
    std::string null_ks, null_schemes = "balanced", null_criterion = "aucc";
    std::size_t null_replicates = 100;
    std::string sweep_data, sweep_truth, sweep_algorithms = "kmeans",
                sweep_criteria, sweep_out;
    bool sweep_label_column = false, sweep_standardize = false;
    std::size_t sweep_k_min = 2, sweep_k_max = 0, sweep_n_init = 100;
    std::string mix_components, mix_spec_json, mix_out;

    auto* cmd_aucc = app.add_subcommand("aucc", "area under the pairwise ROC curve");
    add_eval_opts(cmd_aucc, aucc_o);
    cmd_aucc->callback([&] { run_aucc(aucc_o, g); });

    auto* cmd_roc = app.add_subcommand("roc", "export the pairwise ROC curve");
    add_eval_opts(cmd_roc, roc_o);
    cmd_roc->add_option("--out", roc_out, "output path (default stdout)");
    cmd_roc->callback([&] { run_roc(roc_o, g, roc_out); });

    auto* cmd_gamma = app.add_subcommand("gamma", "rank correlation between "
                                                  "proximities and the partition");
    add_eval_opts(cmd_gamma, gamma_o);
    cmd_gamma->add_flag("--oracle", gamma_oracle,
                        "enumerate all pair comparisons instead of the fast path");
    cmd_gamma->add_option("--cap", gamma_cap, "object cap for --oracle")
        ->capture_default_str();
    cmd_gamma->callback([&] { run_gamma(gamma_o, g, gamma_oracle, gamma_cap); });

    auto* cmd_validate =
        app.add_subcommand("validate", "score a partition with every criterion");
    add_eval_opts(cmd_validate, validate_o);
    cmd_validate->add_option("--criteria", validate_criteria,
                             "comma list (default: all)");
    cmd_validate->callback([&] { run_validate(validate_o, g, validate_criteria); });

    auto* cmd_null = app.add_subcommand(
        "nullcheck", "expected criterion value over random partitions");
    add_eval_opts(cmd_null, null_o);
    cmd_null->add_option("--ks", null_ks, "comma list of cluster counts")->required();
    cmd_null->add_option("--schemes", null_schemes,
                         "balanced | one_cluster_10pct | one_cluster_60pct | "
                         "explicit:p1,p2,... (comma list)")
        ->capture_default_str();
    cmd_null->add_option("--replicates", null_replicates, "per cell")
        ->capture_default_str();
    cmd_null->add_option("--criterion", null_criterion, "criterion to average")
        ->capture_default_str();
    cmd_null->callback([&] {
        run_nullcheck(null_o, g, null_ks, null_schemes, null_replicates,
                      null_criterion);
    });

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "cluster across k, score criteria, correlate with ARI");
    cmd_sweep->add_option("--data", sweep_data, "feature CSV")->required();
    cmd_sweep->add_flag("--label-column", sweep_label_column,
                        "last CSV column is the ground truth");
    cmd_sweep->add_option("--truth", sweep_truth, "ground-truth label file");
    cmd_sweep->add_option("--algorithms", sweep_algorithms,
                          "kmeans | single | average | complete | ward (comma list)")
        ->capture_default_str();
    cmd_sweep->add_option("--k-min", sweep_k_min, "smallest k")->capture_default_str();
    cmd_sweep->add_option("--k-max", sweep_k_max, "largest k (0 = ceil(sqrt(n)))")
        ->capture_default_str();
    cmd_sweep->add_option("--n-init", sweep_n_init, "kmeans restarts")
        ->capture_default_str();
    cmd_sweep->add_option("--criteria", sweep_criteria, "comma list (default: all)");
    cmd_sweep->add_flag("--standardize", sweep_standardize,
                        "z-score features before clustering");
    cmd_sweep->add_option("--out", sweep_out,
                          "output prefix for .json and .csv files");
    cmd_sweep->callback([&] {
        run_sweep(g, sweep_data, sweep_truth, sweep_label_column, sweep_algorithms,
                  sweep_k_min, sweep_k_max, sweep_n_init, sweep_criteria,
                  sweep_standardize, sweep_out);
    });

    auto* cmd_mix = app.add_subcommand("gen-mixture",
                                       "sample a spherical Gaussian mixture");
    cmd_mix->add_option("--components", mix_components,
                        "center:variance:size list, e.g. 0,0:25:200;40,40:25:200");
    cmd_mix->add_option("--spec-json", mix_spec_json,
                        "JSON array of {center, variance, size}");
    cmd_mix->add_option("--out", mix_out, "output CSV (default stdout)");
    cmd_mix->callback([&] { run_gen_mixture(g, mix_components, mix_spec_json, mix_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const degenerate_partition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
