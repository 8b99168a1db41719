#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace aucc {

// n x d feature table, row-major, immutable after construction.
// Validates shape, n >= 2, d >= 1 and finiteness of every value.
class Dataset {
public:
    Dataset(std::vector<double> values, std::size_t rows, std::size_t cols,
            std::vector<std::string> ids = {});

    std::size_t size() const { return rows_; }
    std::size_t dim() const { return cols_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    double operator()(std::size_t i, std::size_t j) const {
        return values_[i * cols_ + j];
    }
    std::span<const double> values() const { return values_; }

    // empty, or one id per row
    const std::vector<std::string>& ids() const { return ids_; }

    // z-score per feature (sample stddev, n-1); constant features map to 0
    Dataset standardized() const;

private:
    std::vector<double> values_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::string> ids_;
};

} // namespace aucc
