#include "aucc/dissimilarity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "aucc/error.hpp"

namespace aucc {

Metric metric_from_string(std::string_view s) {
    if (s == "euclidean") return Metric::euclidean;
    if (s == "squared-euclidean" || s == "squared_euclidean")
        return Metric::squared_euclidean;
    if (s == "manhattan") return Metric::manhattan;
    throw input_error("unknown metric: " + std::string(s));
}

const char* to_string(Metric m) {
    switch (m) {
        case Metric::euclidean: return "euclidean";
        case Metric::squared_euclidean: return "squared-euclidean";
        case Metric::manhattan: return "manhattan";
    }
    return "?";
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= j || j >= n)
        throw std::invalid_argument("pair_index requires i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

DissimilarityMatrix DissimilarityMatrix::from_condensed(std::size_t n,
                                                        std::vector<double> values,
                                                        ScoreOrientation orientation) {
    if (n < 2) throw input_error("proximity matrix needs at least 2 objects");
    if (values.size() != pair_count(n))
        throw input_error("condensed length " + std::to_string(values.size()) +
                          " does not match n = " + std::to_string(n));
    for (double v : values) {
        if (!std::isfinite(v)) throw input_error("proximity matrix has a non-finite entry");
        if (orientation == ScoreOrientation::dissimilarity && v < 0.0)
            throw input_error("dissimilarity matrix has a negative entry");
    }
    DissimilarityMatrix d;
    d.n_ = n;
    d.values_ = std::move(values);
    d.orientation_ = orientation;
    return d;
}

DissimilarityMatrix DissimilarityMatrix::from_full(
    const std::vector<std::vector<double>>& full, ScoreOrientation orientation) {
    const std::size_t n = full.size();
    if (n < 2) throw input_error("proximity matrix needs at least 2 objects");
    for (const auto& row : full)
        if (row.size() != n) throw input_error("proximity matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation == ScoreOrientation::dissimilarity && full[i][i] != 0.0)
            throw input_error("dissimilarity matrix diagonal must be exactly 0");
        for (std::size_t j = i + 1; j < n; ++j)
            if (full[i][j] != full[j][i])
                throw input_error("proximity matrix is not exactly symmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    }
    std::vector<double> condensed;
    condensed.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) condensed.push_back(full[i][j]);
    return from_condensed(n, std::move(condensed), orientation);
}

double DissimilarityMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return values_[pair_index(i, j, n_)];
}

DissimilarityMatrix compute_dissimilarities(const Dataset& data, Metric metric) {
    const std::size_t n = data.size();
    const std::size_t dim = data.dim();
    std::vector<double> values;
    values.reserve(pair_count(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double* a = data.row(i).data();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double* b = data.row(j).data();
            double acc = 0.0;
            if (metric == Metric::manhattan) {
                for (std::size_t f = 0; f < dim; ++f) acc += std::fabs(a[f] - b[f]);
            } else {
                for (std::size_t f = 0; f < dim; ++f) {
                    const double c = a[f] - b[f];
                    acc += c * c;
                }
                if (metric == Metric::euclidean) acc = std::sqrt(acc);
            }
            values.push_back(acc);
        }
    }
    return DissimilarityMatrix::from_condensed(n, std::move(values));
}

} // namespace aucc
