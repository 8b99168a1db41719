#include "aucc/external.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "aucc/error.hpp"

namespace aucc {

GroundTruth::GroundTruth(const std::vector<std::string>& raw) {
    std::vector<int> ids(raw.size());
    std::unordered_map<std::string, int> remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, _] = remap.try_emplace(raw[i], static_cast<int>(remap.size()));
        ids[i] = it->second;
    }
    init(ids);
}

GroundTruth::GroundTruth(const std::vector<int>& raw) { init(raw); }

void GroundTruth::init(const std::vector<int>& raw) {
    if (raw.size() < 2) throw input_error("ground truth needs at least 2 objects");
    labels_.resize(raw.size());
    std::unordered_map<int, int> remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, _] = remap.try_emplace(raw[i], static_cast<int>(remap.size()));
        labels_[i] = it->second;
    }
    classes_ = remap.size();
    if (classes_ < 2)
        throw input_error("ground truth needs at least 2 distinct labels");
}

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
    const std::size_t n = a.size();
    if (n != b.size()) throw input_error("label arrays differ in length");
    if (n < 2) throw input_error("adjusted rand index needs at least 2 objects");
    // exact integer sums; the closed form below stays within int64 up to
    // n around 4e4, far past the supported scale
    if (n > 40000) throw input_error("adjusted rand index capped at n = 40000");

    int ka = 0, kb = 0;
    for (int v : a) ka = std::max(ka, v + 1);
    for (int v : b) kb = std::max(kb, v + 1);
    std::unordered_map<std::int64_t, std::int64_t> cells;
    std::vector<std::int64_t> ra(static_cast<std::size_t>(ka), 0);
    std::vector<std::int64_t> rb(static_cast<std::size_t>(kb), 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < 0 || b[i] < 0) throw input_error("labels must be non-negative");
        ++cells[static_cast<std::int64_t>(a[i]) * kb + b[i]];
        ++ra[static_cast<std::size_t>(a[i])];
        ++rb[static_cast<std::size_t>(b[i])];
    }
    auto choose2 = [](std::int64_t v) { return v * (v - 1) / 2; };
    std::int64_t sum_cells = 0, sum_a = 0, sum_b = 0;
    for (const auto& [_, c] : cells) sum_cells += choose2(c);
    for (std::int64_t v : ra) sum_a += choose2(v);
    for (std::int64_t v : rb) sum_b += choose2(v);
    const std::int64_t pairs = choose2(static_cast<std::int64_t>(n));

    // ARI = (sum_cells - sum_a*sum_b/C) / ((sum_a+sum_b)/2 - sum_a*sum_b/C),
    // cleared of denominators to stay in integers until one final division
    const std::int64_t num = 2 * (pairs * sum_cells - sum_a * sum_b);
    const std::int64_t den = pairs * (sum_a + sum_b) - 2 * sum_a * sum_b;
    if (den == 0)
        throw std::logic_error("degenerate labelings reached adjusted_rand_index");
    return static_cast<double>(num) / static_cast<double>(den);
}

double adjusted_rand_index(const Partition& p, const GroundTruth& g) {
    return adjusted_rand_index(p.labels(), g.labels());
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) throw input_error("correlation inputs differ in length");
    if (n < 2) throw input_error("correlation needs at least 2 observations");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

} // namespace aucc
