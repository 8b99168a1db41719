#include "aucc/dataset.hpp"

#include <cmath>
#include <utility>

#include "aucc/error.hpp"

namespace aucc {

Dataset::Dataset(std::vector<double> values, std::size_t rows, std::size_t cols,
                 std::vector<std::string> ids)
    : values_(std::move(values)), rows_(rows), cols_(cols), ids_(std::move(ids)) {
    if (rows_ < 2) throw input_error("dataset needs at least 2 rows");
    if (cols_ < 1) throw input_error("dataset needs at least 1 feature");
    if (values_.size() != rows_ * cols_)
        throw input_error("dataset shape mismatch: " + std::to_string(values_.size()) +
                          " values for " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
    for (double v : values_)
        if (!std::isfinite(v)) throw input_error("dataset contains a non-finite value");
    if (!ids_.empty() && ids_.size() != rows_)
        throw input_error("dataset id count does not match row count");
}

Dataset Dataset::standardized() const {
    std::vector<double> out(values_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) mean += (*this)(i, j);
        mean /= static_cast<double>(rows_);
        double ss = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const double c = (*this)(i, j) - mean;
            ss += c * c;
        }
        const double sd = std::sqrt(ss / static_cast<double>(rows_ - 1));
        for (std::size_t i = 0; i < rows_; ++i)
            out[i * cols_ + j] = sd > 0.0 ? ((*this)(i, j) - mean) / sd : 0.0;
    }
    return Dataset(std::move(out), rows_, cols_, ids_);
}

} // namespace aucc
