#include "aucc/csv.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aucc/error.hpp"

namespace aucc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    out.push_back(trim(tok));
    return out;
}

bool parse_double(const std::string& tok, double& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    return end == tok.c_str() + tok.size();
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split(line));
    }
    if (rows.empty()) throw input_error("file is empty: " + path);
    return rows;
}

// header = first row has a non-numeric token among the columns that are
// expected to be numeric
bool looks_like_header(const std::vector<std::string>& row, std::size_t numeric_cols) {
    double v;
    for (std::size_t c = 0; c < numeric_cols && c < row.size(); ++c)
        if (!parse_double(row[c], v)) return true;
    return false;
}

} // namespace

LoadedDataset load_dataset_csv(const std::string& path, bool label_column) {
    auto rows = read_rows(path);
    const std::size_t cols = rows[0].size();
    if (label_column && cols < 2)
        throw input_error(path + ": need at least one feature before the label column");
    const std::size_t feat = label_column ? cols - 1 : cols;
    if (feat == 0) throw input_error(path + ": no feature columns");

    std::size_t first = looks_like_header(rows[0], feat) ? 1 : 0;
    if (first == rows.size()) throw input_error(path + ": no data rows");

    std::vector<double> values;
    values.reserve((rows.size() - first) * feat);
    std::vector<std::string> labels;
    for (std::size_t r = first; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw input_error(path + ": row " + std::to_string(r + 1) +
                              " has " + std::to_string(rows[r].size()) +
                              " columns, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < feat; ++c) {
            double v;
            if (!parse_double(rows[r][c], v))
                throw input_error(path + ": bad number '" + rows[r][c] +
                                  "' at row " + std::to_string(r + 1));
            values.push_back(v);
        }
        if (label_column) labels.push_back(rows[r][cols - 1]);
    }

    LoadedDataset out{Dataset(std::move(values), rows.size() - first, feat), {}};
    if (label_column) out.truth.emplace(labels);
    return out;
}

DissimilarityMatrix load_matrix_csv(const std::string& path,
                                    ScoreOrientation orientation) {
    auto rows = read_rows(path);
    std::size_t first = looks_like_header(rows[0], rows[0].size()) ? 1 : 0;
    const std::size_t n = rows.size() - first;
    std::vector<std::vector<double>> full(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& toks = rows[r + first];
        if (toks.size() != n)
            throw input_error(path + ": matrix is not square (" +
                              std::to_string(toks.size()) + " columns, " +
                              std::to_string(n) + " rows)");
        full[r].resize(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!parse_double(toks[c], full[r][c]))
                throw input_error(path + ": bad number '" + toks[c] + "' at row " +
                                  std::to_string(r + first + 1));
    }
    return DissimilarityMatrix::from_full(full, orientation);
}

namespace {

std::vector<std::string> read_label_tokens(const std::string& path) {
    std::vector<std::string> toks;
    for (const auto& row : read_rows(path))
        for (const auto& t : row)
            if (!t.empty()) toks.push_back(t);
    return toks;
}

} // namespace

Partition load_partition(const std::string& path) {
    std::vector<int> labels;
    for (const auto& t : read_label_tokens(path)) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            labels.push_back(v);
        } catch (const std::exception&) {
            throw input_error(path + ": bad integer label '" + t + "'");
        }
    }
    return Partition(labels);
}

GroundTruth load_ground_truth(const std::string& path) {
    return GroundTruth(read_label_tokens(path));
}

PairArrays load_pair_arrays_csv(const std::string& path) {
    auto rows = read_rows(path);
    std::size_t first = looks_like_header(rows[0], 2) ? 1 : 0;
    PairArrays out;
    for (std::size_t r = first; r < rows.size(); ++r) {
        if (rows[r].size() != 2)
            throw input_error(path + ": expected flag,score at row " +
                              std::to_string(r + 1));
        double flag, score;
        if (!parse_double(rows[r][0], flag) || (flag != 0.0 && flag != 1.0))
            throw input_error(path + ": flag must be 0 or 1 at row " +
                              std::to_string(r + 1));
        if (!parse_double(rows[r][1], score))
            throw input_error(path + ": bad score at row " + std::to_string(r + 1));
        out.flags.push_back(flag == 1.0 ? 1 : 0);
        out.scores.push_back(score);
    }
    if (out.flags.size() < 2) throw input_error(path + ": need at least 2 pairs");
    return out;
}

void write_dataset_csv(std::ostream& out, const Dataset& data,
                       const std::vector<int>* labels) {
    for (std::size_t f = 0; f < data.dim(); ++f) {
        if (f) out << ',';
        out << 'f' << f;
    }
    if (labels) out << ",label";
    out << '\n';
    char buf[48];
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t f = 0; f < data.dim(); ++f) {
            std::snprintf(buf, sizeof buf, "%s%.17g", f ? "," : "", data(i, f));
            out << buf;
        }
        if (labels) out << ',' << (*labels)[i];
        out << '\n';
    }
}

} // namespace aucc
